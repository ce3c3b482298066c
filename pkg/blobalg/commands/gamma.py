"""Command exporting the seminormal norms gamma_t."""

from blobalg.commands.command_decorator import command
from blobalg.core.algebra import make_algebra
from blobalg.core.coeffs import generic_field
from blobalg.core.config import RunConfig
from blobalg.core.jm import seminormal
from blobalg.core.reports import CommandResult


@command()
def execute_gamma(config: RunConfig) -> CommandResult:
    """The scalars gamma_t of the seminormal basis over Q(q, Q), as CSV.

    Args:
        config: Run configuration; the field is always the generic one

    Returns:
        CSV rows tableau,gamma
    """
    algebra = make_algebra(config.algebra, config.n, generic_field())
    data = seminormal(algebra)
    table = data.gamma_table_csv()
    return CommandResult(
        command="gamma",
        data=[
            {"tableau": t.to_json(), "gamma": algebra.field.format(data.gamma(t))}
            for shape in algebra.shapes
            for t in algebra.tableaux(shape)
        ],
        text=table,
        csv=table,
    )
