"""Command printing the graded cellular basis."""

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.graded_basis import psi_basis, verify_graded_cellularity
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_psi_basis(config: RunConfig) -> CommandResult:
    """Every psi_st as a combination of diagrams, with its degree.

    Args:
        config: Run configuration

    Returns:
        The expansions and the graded cellularity report
    """
    algebra = BlobUtils.build_algebra(config)
    basis = psi_basis(algebra, workers=config.workers)
    shapes = BlobUtils.select_shapes(algebra, config)
    selected = [b for b in basis.values() if b.s.shape in shapes]
    blocks = [
        f"psi[{b.s}, {b.t}] degree {b.degree}\n{BlobUtils.format_element(b.element)}"
        for b in selected
    ]
    reports = [verify_graded_cellularity(algebra, workers=config.workers)]
    return CommandResult(
        command="psi-basis",
        data=[b.to_json() for b in selected],
        text="\n\n".join(blocks + [BlobUtils.format_reports(reports)]),
        reports=reports,
    )
