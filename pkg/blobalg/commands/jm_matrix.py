"""Command printing the matrix of a JM element on a cell module."""

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.exceptions import ConfigurationError
from blobalg.core.jm import jm_matrix
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_jm_matrix(config: RunConfig) -> CommandResult:
    """Matrix of L_k acting on the cell modules.

    Args:
        config: Run configuration; k selects the JM element

    Returns:
        One matrix per shape, rows and columns indexed by the tableaux

    Raises:
        ConfigurationError: If k is missing
    """
    if config.k is None:
        raise ConfigurationError("jm-matrix requires --k")
    algebra = BlobUtils.build_algebra(config)
    fmt = algebra.field.format
    data = []
    blocks = []
    for shape in BlobUtils.select_shapes(algebra, config):
        matrix = jm_matrix(algebra, shape, config.k)
        tableaux = [str(t) for t in algebra.tableaux(shape)]
        data.append(
            {
                "shape": shape.to_json(),
                "tableaux": tableaux,
                "matrix": [[fmt(c) for c in row] for row in matrix],
            }
        )
        blocks.append(f"L{config.k} on {shape} ({', '.join(tableaux)})\n" + BlobUtils.format_matrix(matrix, algebra))
    return CommandResult(command="jm-matrix", data=data, text="\n\n".join(blocks))
