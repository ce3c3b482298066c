"""blobalg exceptions."""

from typing import Any


class BlobAlgebraError(Exception):
    """Base exception for blobalg errors."""

    pass


class ConfigurationError(BlobAlgebraError):
    """Invalid run configuration."""

    pass


class AlgebraError(BlobAlgebraError):
    """Base exception for errors raised by algebra computations."""

    def __init__(
        self,
        message: str,
        error_type: str | None = None,
        details: dict[str, Any] | None = None,
    ):
        self.message = message
        self.error_type = error_type
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> dict[str, Any]:
        """Convert the error to a dictionary format."""
        return {
            "error_type": self.error_type,
            "message": self.message,
            "details": self.details,
        }


class DenominatorVanishes(AlgebraError):
    """Raised when a rational function is not defined at the specialization point."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, error_type="DENOMINATOR_VANISHES", details=details)


class SpecializationFailure(AlgebraError):
    """Raised when an element that must be integral fails to specialize."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(
            message, error_type="SPECIALIZATION_FAILURE", details=details
        )


class ShapeMismatch(AlgebraError):
    """Raised when two tableaux are required to have the same shape."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, error_type="SHAPE_MISMATCH", details=details)


class IndexOutOfRange(AlgebraError):
    """Raised for a generator or JM index outside 1..n."""

    def __init__(self, index: int, n: int, what: str = "index"):
        super().__init__(
            f"{what} {index} out of range for n={n}",
            error_type="INDEX_OUT_OF_RANGE",
            details={"index": index, "n": n},
        )


class AlgebraMismatch(AlgebraError):
    """Raised when elements of different algebras are combined."""

    def __init__(self, left: str, right: str):
        super().__init__(
            f"Cannot combine elements of {left} and {right}",
            error_type="ALGEBRA_MISMATCH",
            details={"left": left, "right": right},
        )


class SeparationFailure(AlgebraError):
    """Raised when contents fail to separate tableaux."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, error_type="SEPARATION_FAILURE", details=details)


class NonInvertibleQ(AlgebraError):
    """Raised when a KLR correction term has no invertible constant part."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, error_type="NON_INVERTIBLE_Q", details=details)


class InvalidDiagram(AlgebraError):
    """Raised for pairings that are not planar or carry illegal blobs."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, error_type="INVALID_DIAGRAM", details=details)


class InvalidTableau(AlgebraError):
    """Raised for fillings that are not standard."""

    def __init__(self, message: str, details: dict[str, Any] | None = None):
        super().__init__(message, error_type="INVALID_TABLEAU", details=details)
