"""Utility functions for blobalg commands."""

from typing import Any

from blobalg.core.algebra import AlgebraElement, DiagramAlgebra, make_algebra
from blobalg.core.coeffs import cyclotomic_field, generic_field
from blobalg.core.config import RunConfig
from blobalg.core.diagrams import render_ascii
from blobalg.core.exceptions import ConfigurationError, InvalidTableau
from blobalg.core.reports import VerificationReport
from blobalg.core.tabcomb import OneLineBipartition, TwoColumnShape


# Marks used in text reports
PASS_MARK = "ok"
FAIL_MARK = "FAIL"


class BlobUtils:
    """Helpers shared by the subcommands."""

    @staticmethod
    def build_algebra(config: RunConfig) -> DiagramAlgebra:
        """The algebra selected by a run configuration.

        Args:
            config: Run configuration

        Returns:
            TL_n(q) or b_n(m) over the generic or cyclotomic field
        """
        if config.field == "generic":
            scalar_field = generic_field()
        else:
            scalar_field = cyclotomic_field(config.l, config.m)
        return make_algebra(config.algebra, config.n, scalar_field)

    @staticmethod
    def select_shapes(algebra: DiagramAlgebra, config: RunConfig) -> list[Any]:
        """Shapes named by --shape, or all shapes of the algebra.

        Raises:
            ConfigurationError: If the selector names no shape of the algebra
        """
        pair = config.shape_pair
        if pair is None:
            return list(algebra.shapes)
        a, b = pair
        try:
            shape = OneLineBipartition(a, b) if algebra.kind == "blob" else TwoColumnShape(a, b)
        except InvalidTableau:
            shape = None
        if shape not in algebra.shapes:
            raise ConfigurationError(f"{config.shape} is not a shape of {algebra.describe()}")
        return [shape]

    @staticmethod
    def format_element(x: AlgebraElement) -> str:
        """Each term as its scalar followed by the ASCII diagram."""
        if x.is_zero():
            return "0"
        fmt = x.algebra.field.format
        blocks = []
        for d, c in x.terms():
            blocks.append(f"({fmt(c)}) *\n{render_ascii(d)}")
        return "\n".join(blocks)

    @staticmethod
    def format_matrix(rows: list[list[Any]], algebra: DiagramAlgebra) -> str:
        fmt = algebra.field.format
        return "\n".join("[" + ", ".join(fmt(c) for c in row) + "]" for row in rows)

    @staticmethod
    def format_report(report: VerificationReport) -> str:
        """One line per check, failures with their witness."""
        lines = [f"{report.title}: {PASS_MARK if report.passed else FAIL_MARK}"]
        for check in report.checks:
            mark = PASS_MARK if check.passed else FAIL_MARK
            line = f"  [{mark}] {check.name}"
            if check.witness:
                line += f" ({check.witness})"
            lines.append(line)
        return "\n".join(lines)

    @staticmethod
    def format_reports(reports: list[VerificationReport]) -> str:
        return "\n".join(BlobUtils.format_report(r) for r in reports)
