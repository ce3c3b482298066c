"""Command printing the graded dimensions of the cell modules."""

import csv
import io

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.graded_basis import graded_dimensions, verify_graded_dimensions
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_graded_dims(config: RunConfig) -> CommandResult:
    """Graded dimension of every cell module as a Laurent polynomial in v.

    Args:
        config: Run configuration

    Returns:
        One polynomial per shape and a check of its value at v = 1
    """
    algebra = BlobUtils.build_algebra(config)
    shapes = BlobUtils.select_shapes(algebra, config)
    modules = {s: m for s, m in graded_dimensions(algebra).items() if s in shapes}
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["shape", "graded_dimension"])
    for s, m in modules.items():
        writer.writerow([str(s), m.format()])
    reports = [verify_graded_dimensions(algebra)]
    return CommandResult(
        command="graded-dims",
        data=[
            {"shape": s.to_json(), "graded_dimension": m.format(), "degrees": m.polynomial()}
            for s, m in modules.items()
        ],
        text="\n".join(f"{s}: {m.format()}" for s, m in modules.items()),
        csv=buffer.getvalue(),
        reports=reports,
    )
