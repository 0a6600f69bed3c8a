import os
import sys

from setuptools import find_packages, setup

if sys.version_info < (3, 8):
    print(sys.stderr, "{}: need Python 3.8 or later.".format(sys.argv[0]))
    print(sys.stderr, "Your Python is {}".format(sys.version))
    sys.exit(1)


ROOT_DIR = os.path.dirname(__file__)


setup(
    name="py-four-vertex",
    packages=find_packages(exclude=["tests", "tests.*", "docs", "docs.*"]),
    version="0.1.0",
    license="BSD",
    description=(
        "Exact global, local and radial extremality, evolutes and decompositions "
        "of polygons, with four-vertex checks."
    ),
    long_description=open(os.path.join(ROOT_DIR, "README.md")).read(),
    long_description_content_type="text/markdown",
    include_package_data=True,
    package_data={"py_four_vertex": ["data/*.txt"]},
    install_requires=[
        "docopt==0.6.2",
        "matplotlib==3.8.4",
        "numpy==1.26.4",
    ],
    extras_require={
        "dev": [
            "black==22.10.0",
            "isort==5.10.1",
            "mypy==0.982",
        ],
        "test": [
            "ddt==1.6.0",
            "hypothesis==6.100.1",
            "mock==5.1.0",
            "pytest==7.4.4",
            "recommonmark==0.7.1",
            "sphinx-autobuild==2021.3.14",
            "sphinx-rtd-theme==1.0.0",
            "Sphinx==5.2.3",
        ],
    },
    entry_points={"console_scripts": ["fourvertex=py_four_vertex.cli:run"]},
)
