"""Command checking the defining relations and the cellular structure."""

from blobalg.commands.command_decorator import command
from blobalg.core.algebra import verify_cellularity, verify_hook_action
from blobalg.core.config import RunConfig
from blobalg.core.jm import verify_hecke_images
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_verify_relations(config: RunConfig) -> CommandResult:
    """Check the generator relations, cellularity, the hook action and the Hecke images.

    Args:
        config: Run configuration

    Returns:
        One report per family of identities
    """
    algebra = BlobUtils.build_algebra(config)
    reports = [
        algebra.verify_relations(),
        verify_cellularity(algebra),
        verify_hook_action(algebra),
        verify_hecke_images(algebra),
    ]
    return CommandResult(
        command="verify-relations", text=BlobUtils.format_reports(reports), reports=reports
    )
