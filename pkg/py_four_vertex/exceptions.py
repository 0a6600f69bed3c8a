from typing import Optional, Sequence, Tuple


class FourVertexError(Exception):
    pass


class InputError(FourVertexError):
    pass


class PreconditionError(FourVertexError):
    """
    Raised when an operation is given a polygon (or points) which violate one of its
    preconditions.

    Args:
        message (str): The error message.
        witness (list[int], optional): The vertex indices which witness the failure,
            for example the four indices of a concyclic quadruple.

    Attributes:
        witness (tuple[int]): The witness indices, empty if there is no witness.
    """

    witness: Tuple[int, ...]

    def __init__(self, message: str, witness: Optional[Sequence[int]] = None):
        super().__init__(message)
        self.witness = tuple(witness) if witness is not None else ()


# Common
class InvalidScalarError(InputError):
    pass


class InvalidCircleError(PreconditionError):
    pass


# Predicates
class CollinearInputError(PreconditionError):
    pass


class DegenerateAngleError(PreconditionError):
    pass


# Components
class TooFewVerticesError(PreconditionError):
    pass


class DuplicateVertexError(PreconditionError):
    pass


class NotGenericError(PreconditionError):
    pass


class NotConvexError(PreconditionError):
    pass


# Extremality
class OnCircleDegenerateError(PreconditionError):
    pass


class OnCircleWitnessError(PreconditionError):
    pass


class RadiusTieError(PreconditionError):
    pass


# Evolute
class CollinearTripleError(PreconditionError):
    pass


class DegenerateEvoluteError(PreconditionError):
    pass


class UndefinedWindingError(PreconditionError):
    pass


class UnclassifiableAngleError(PreconditionError):
    pass


# Triangulation
class InvalidTriangulationError(PreconditionError):
    pass


class NoBalancedDiagonalError(PreconditionError):
    pass


class FlipLimitExceededError(FourVertexError):
    pass


# Decomposition
class AdjacentEndpointsError(PreconditionError):
    pass


class PartTooSmallError(PreconditionError):
    pass


class CertificateViolationError(FourVertexError):
    pass


class RecursionBaseViolatedError(CertificateViolationError):
    pass


# Harness
class RejectionBudgetExceededError(FourVertexError):
    pass


class CorpusEntryNotFoundError(InputError):
    pass


class UnknownTagError(InputError):
    pass


# Loaders
class PolygonFileError(InputError):
    pass
