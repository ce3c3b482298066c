"""Command computing Gram matrices of the cell modules."""

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_gram(config: RunConfig) -> CommandResult:
    """Gram matrix, rank and determinant of the bilinear form on each cell module.

    Args:
        config: Run configuration

    Returns:
        One entry per shape
    """
    algebra = BlobUtils.build_algebra(config)
    fmt = algebra.field.format
    data = []
    blocks = []
    for shape in BlobUtils.select_shapes(algebra, config):
        gram = algebra.gram_matrix(shape)
        rank = algebra.gram_rank(shape)
        det = algebra.gram_determinant(shape)
        data.append(
            {
                "shape": shape.to_json(),
                "matrix": [[fmt(c) for c in row] for row in gram.entries],
                "rank": rank,
                "determinant": fmt(det),
            }
        )
        blocks.append(
            f"{shape}: rank {rank}, determinant {fmt(det)}\n"
            + BlobUtils.format_matrix(gram.entries, algebra)
        )
    return CommandResult(command="gram", data=data, text="\n\n".join(blocks))
