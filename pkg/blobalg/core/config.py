"""Run configuration for the blobalg commands."""

import json
import logging
from typing import Any

import pydantic
from pydantic import BaseModel, Field, field_validator, model_validator

from blobalg.core.coeffs import separation_ok
from blobalg.core.constants import (
    ALGEBRA_KINDS,
    DEFAULT_L,
    DEFAULT_M,
    DEFAULT_N,
    DEFAULT_WORKERS,
    FIELD_KINDS,
    OUTPUT_FORMATS,
)
from blobalg.core.exceptions import ConfigurationError


logger = logging.getLogger(__name__)

# Subcommands that only make sense over Q(zeta_l)
CYCLOTOMIC_SUBCOMMANDS = ("verify-klr", "psi-basis", "graded-dims")


def _raise_from_validation(e: pydantic.ValidationError) -> None:
    for error in e.errors():
        field = error["loc"][0] if error["loc"] else "config"
        if error["type"] == "missing":
            raise ConfigurationError(f"{field} is required") from e
        if error["type"] in ("greater_than_equal", "greater_than"):
            raise ConfigurationError(f"{field} is out of range: {error['msg']}") from e
    raise ConfigurationError(str(e)) from e


class RunConfig(BaseModel):
    """Parameters of one blobalg run."""

    algebra: str = Field(default="blob", description="Algebra kind: tl or blob")
    n: int = Field(default=DEFAULT_N, ge=0, description="Number of strands")
    l: int = Field(default=DEFAULT_L, description="Order of the root of unity q (odd, at least 3)")
    m: int = Field(default=DEFAULT_M, description="Blob parameter, Q = q^m; normalized mod l")
    field: str = Field(default="cyclo", description="Scalar field: generic or cyclo")
    subcommand: str = Field(default="dim", description="Name of the subcommand to run")
    output_format: str = Field(default="text", description="Output format: text, json or csv")
    workers: int = Field(default=DEFAULT_WORKERS, ge=1, description="Worker threads for verification")
    golden_dir: str | None = Field(default=None, description="Directory holding the golden files")
    update: bool = Field(default=False, description="Rewrite golden anchors instead of checking them")
    k: int | None = Field(default=None, ge=1, description="JM index for jm-matrix")
    shape: str | None = Field(default=None, description="Shape selector 'a,b'")

    def __init__(self, **data):
        """Initialize RunConfig, turning validation errors into ConfigurationError."""
        try:
            super().__init__(**data)
        except pydantic.ValidationError as e:
            _raise_from_validation(e)

    @field_validator("algebra")
    @classmethod
    def validate_algebra(cls, v: str) -> str:
        if v not in ALGEBRA_KINDS:
            raise ConfigurationError(f"algebra must be one of {', '.join(ALGEBRA_KINDS)}")
        return v

    @field_validator("field")
    @classmethod
    def validate_field(cls, v: str) -> str:
        if v not in FIELD_KINDS:
            raise ConfigurationError(f"field must be one of {', '.join(FIELD_KINDS)}")
        return v

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v: str) -> str:
        if v not in OUTPUT_FORMATS:
            raise ConfigurationError(f"format must be one of {', '.join(OUTPUT_FORMATS)}")
        return v

    @field_validator("shape")
    @classmethod
    def validate_shape(cls, v: str | None) -> str | None:
        if v is None:
            return v
        parts = v.split(",")
        if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
            raise ConfigurationError(f"shape must look like 'a,b', got {v!r}")
        return v

    @model_validator(mode="after")
    def validate_config(self) -> "RunConfig":
        """Cross-field rules."""
        if self.l < 3 or self.l % 2 == 0:
            raise ConfigurationError(f"l must be an odd integer >= 3, got {self.l}")
        self.m = self.m % self.l
        if self.algebra == "blob" and self.field == "cyclo" and not separation_ok(self.l, self.m):
            raise ConfigurationError(
                f"(l, m) = ({self.l}, {self.m}) violates the separation condition"
            )
        if self.subcommand in CYCLOTOMIC_SUBCOMMANDS and self.field != "cyclo":
            raise ConfigurationError(f"{self.subcommand} requires the cyclotomic field")
        if self.shape is not None:
            a, b = self.shape_pair
            if a + b != self.n:
                raise ConfigurationError(f"shape {self.shape} does not have size n = {self.n}")
        return self

    @property
    def shape_pair(self) -> tuple[int, int] | None:
        if self.shape is None:
            return None
        a, b = (int(p) for p in self.shape.split(","))
        return a, b

    @classmethod
    def load(cls, config_path: str) -> "RunConfig":
        """Load configuration from a JSON file.

        Args:
            config_path: Path to JSON config file

        Returns:
            RunConfig instance

        Raises:
            ConfigurationError: If file cannot be loaded or is invalid
        """
        try:
            with open(config_path) as f:
                config_dict = json.load(f)
        except FileNotFoundError as e:
            raise ConfigurationError(f"Configuration file not found: {config_path}") from e
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"Invalid JSON in configuration file: {config_path}") from e
        return cls(**config_dict)

    def to_dict(self) -> dict[str, Any]:
        """Convert config to dictionary."""
        return self.model_dump()
