"""Exact algebra core: fields, tableaux, diagrams and the diagram algebras."""

from blobalg.core.algebra import blob_algebra, make_algebra, temperley_lieb
from blobalg.core.coeffs import cyclotomic_field, generic_field
from blobalg.core.config import RunConfig
from blobalg.core.exceptions import (
    AlgebraError,
    BlobAlgebraError,
    ConfigurationError,
)


__all__ = [
    "RunConfig",
    "make_algebra",
    "blob_algebra",
    "temperley_lieb",
    "generic_field",
    "cyclotomic_field",
    "BlobAlgebraError",
    "AlgebraError",
    "ConfigurationError",
]
