"""Command checking the KLR presentation of the specialized algebra."""

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.klr import verify_klr_presentation, verify_vanishing, verify_weight_spaces
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_verify_klr(config: RunConfig) -> CommandResult:
    """Check the KLR relations, the cyclotomic vanishing and the weight spaces.

    Args:
        config: Run configuration

    Returns:
        One report per family of identities
    """
    algebra = BlobUtils.build_algebra(config)
    reports = [
        verify_klr_presentation(algebra, workers=config.workers),
        verify_vanishing(algebra),
        verify_weight_spaces(algebra),
    ]
    return CommandResult(command="verify-klr", text=BlobUtils.format_reports(reports), reports=reports)
