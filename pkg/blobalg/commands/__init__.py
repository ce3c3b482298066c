"""Subcommand definitions for the blobalg CLI."""

import inspect
import sys

from .dim import execute_dim
from .gamma import execute_gamma
from .golden import execute_golden
from .graded_dims import execute_graded_dims
from .gram import execute_gram
from .jm_matrix import execute_jm_matrix
from .mult import execute_mult
from .psi_basis import execute_psi_basis
from .verify_jm import execute_verify_jm
from .verify_klr import execute_verify_klr
from .verify_relations import execute_verify_relations


__all__ = [
    "execute_dim",
    "execute_mult",
    "execute_verify_relations",
    "execute_verify_jm",
    "execute_verify_klr",
    "execute_psi_basis",
    "execute_gram",
    "execute_graded_dims",
    "execute_golden",
    "execute_jm_matrix",
    "execute_gamma",
]

COMMANDS_DEFINITION = [
    obj
    for name, obj in inspect.getmembers(sys.modules[__name__])
    if inspect.isfunction(obj) and hasattr(obj, "_is_command") and obj._is_command
]

COMMANDS = {obj._command_name: obj for obj in COMMANDS_DEFINITION}
