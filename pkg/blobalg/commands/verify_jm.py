"""Command checking the Jucys-Murphy elements."""

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.jm import (
    verify_calibrated_contents,
    verify_commutation,
    verify_order_property,
    verify_seminormal,
    verify_triangularity,
)
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_verify_jm(config: RunConfig) -> CommandResult:
    """Check commutation and triangularity of the JM elements.

    Over the generic field the seminormal basis is checked as well.

    Args:
        config: Run configuration

    Returns:
        One report per family of identities
    """
    algebra = BlobUtils.build_algebra(config)
    reports = [verify_commutation(algebra), verify_triangularity(algebra)]
    if algebra.kind == "tl":
        reports.append(verify_calibrated_contents(algebra))
    else:
        reports.append(verify_order_property(algebra))
    if algebra.field.is_generic:
        reports.append(verify_seminormal(algebra))
    return CommandResult(command="verify-jm", text=BlobUtils.format_reports(reports), reports=reports)
