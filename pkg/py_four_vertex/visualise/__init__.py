from .main import RenderSpec, render

__all__ = [
    "RenderSpec",
    "render",
]
