"""Verification report models."""

import logging
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


logger = logging.getLogger(__name__)


class CheckResult(BaseModel):
    """Outcome of a single named check."""

    name: str = Field(description="Name of the identity or property checked")
    passed: bool = Field(description="Whether the check succeeded")
    witness: str | None = Field(
        None, description="Counterexample description when the check failed"
    )
    details: dict[str, Any] = Field(
        default_factory=dict, description="Additional data (counts, values)"
    )

    def __getitem__(self, key):
        """Make result subscriptable."""
        key_map = {
            "name": self.name,
            "passed": self.passed,
            "witness": self.witness,
            "details": self.details,
        }
        if key in key_map:
            return key_map[key]
        raise KeyError(f"Invalid key: {key}")


class VerificationReport(BaseModel):
    """Container for the checks run by one verification operation."""

    title: str = Field(description="What was verified")
    checks: list[CheckResult] = Field(
        default_factory=list, description="Individual check results in run order"
    )

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(
        self, name: str, passed: bool, witness: str | None = None, **details: Any
    ) -> CheckResult:
        """Record a check; failures are logged at WARNING."""
        result = CheckResult(name=name, passed=passed, witness=witness, details=details)
        if not passed:
            logger.warning("%s: check %s failed (%s)", self.title, name, witness)
        self.checks.append(result)
        return result

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def check(self, name: str) -> CheckResult:
        """First check with the given name.

        Raises:
            KeyError: If no such check was recorded
        """
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(f"No check named {name}")

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "title": self.title,
            "pass": self.passed,
            "checks": [c.model_dump() for c in self.checks],
        }


class RunReport(BaseModel):
    """JSON envelope for a CLI run."""

    model_config = ConfigDict(populate_by_name=True)

    config: dict[str, Any] = Field(description="The run configuration")
    results: list[Any] = Field(default_factory=list, description="Emitted results")
    passed: bool = Field(True, alias="pass", description="Whether every check passed")

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump(by_alias=True)


class CommandResult(BaseModel):
    """Output of one subcommand: a payload, its text rendering and any reports."""

    command: str = Field(description="Name of the subcommand")
    data: Any = Field(None, description="JSON-ready payload")
    text: str = Field("", description="Human-readable rendering")
    csv: str | None = Field(None, description="CSV rendering, when the command has one")
    reports: list[VerificationReport] = Field(
        default_factory=list, description="Verification reports produced by the command"
    )

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def results(self) -> list[Any]:
        """Entries of the JSON envelope's results list."""
        entries: list[Any] = [r.to_dict() for r in self.reports]
        if self.data is not None:
            entries.append({"command": self.command, "data": self.data})
        return entries
