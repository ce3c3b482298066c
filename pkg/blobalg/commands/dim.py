"""Command reporting the dimension of the algebra and of its cell modules."""

from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.reports import CommandResult
from blobalg.utils import BlobUtils


@command()
def execute_dim(config: RunConfig) -> CommandResult:
    """Dimension of the algebra and of each cell module.

    Args:
        config: Run configuration

    Returns:
        The dimension, followed by one line per shape
    """
    algebra = BlobUtils.build_algebra(config)
    cells = {str(shape): len(algebra.tableaux(shape)) for shape in algebra.shapes}
    lines = [str(algebra.dimension)] + [f"  {shape}: {size}" for shape, size in cells.items()]
    return CommandResult(
        command="dim",
        data={"dimension": algebra.dimension, "cells": cells},
        text="\n".join(lines),
    )
