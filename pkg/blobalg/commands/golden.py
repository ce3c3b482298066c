"""Command replaying or regenerating the golden corpus."""

import logging

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.graded_basis import golden_examples, update_golden
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


logger = logging.getLogger(__name__)


@command()
def execute_golden(config: RunConfig) -> CommandResult:
    """Reproduce the worked examples, or with --update rewrite the stored anchors.

    Args:
        config: Run configuration

    Returns:
        The golden report, or the diff written by --update
    """
    if config.update:
        diff = update_golden(config.golden_dir)
        logger.info("Golden anchors %s", "updated" if diff else "unchanged")
        return CommandResult(command="golden", data={"diff": diff}, text=diff or "no changes")
    report = golden_examples(config.golden_dir)
    return CommandResult(command="golden", text=BlobUtils.format_report(report), reports=[report])
