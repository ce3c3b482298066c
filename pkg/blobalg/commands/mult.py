"""Command exporting the structure constants of the algebra."""

import csv
import io

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_mult(config: RunConfig) -> CommandResult:
    """Multiplication table b_i b_j = scalar * b_k over the basis serial numbers.

    Args:
        config: Run configuration

    Returns:
        CSV rows i,j,k,scalar
    """
    algebra = BlobUtils.build_algebra(config)
    algebra.fill_product_table()
    table = algebra.structure_constants()
    rows = list(csv.DictReader(io.StringIO(table)))
    return CommandResult(
        command="mult",
        data=[
            {"i": int(r["i"]), "j": int(r["j"]), "k": int(r["k"]), "scalar": r["scalar"]}
            for r in rows
        ],
        text=table,
        csv=table,
    )
