import functools
import inspect
from collections.abc import Callable
from typing import Any, TypedDict, TypeVar


F = TypeVar("F", bound=Callable[..., Any])


def command(name: str | None = None) -> Callable:
    """Decorator to mark a function as a blobalg subcommand.

    The command name defaults to the function name with the 'execute_'
    prefix removed and underscores turned into dashes, so
    execute_verify_klr becomes verify-klr.

    Args:
        name: Explicit command name

    Returns:
        Decorated function
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            return func(*args, **kwargs)

        wrapper._is_command = True  # type: ignore[attr-defined]

        command_name = name or func.__name__
        if command_name.startswith("execute_"):
            command_name = command_name[len("execute_") :]
        wrapper._command_name = command_name.replace("_", "-")  # type: ignore[attr-defined]

        return wrapper

    return decorator


class CommandSchema(TypedDict):
    name: str
    description: str


def get_schema(func: Callable) -> CommandSchema:
    """Name and help text of a command, the help text being the docstring up to Args:."""
    if not hasattr(func, "_is_command"):
        raise ValueError(f"Function {func.__name__} is not a command")

    doc = inspect.getdoc(func) or ""
    description_lines = []
    for line in doc.split("\n"):
        line = line.strip()
        if line.lower().startswith(("args:", "returns:", "raises:")):
            break
        description_lines.append(line)

    return {
        "name": func._command_name,
        "description": "\n".join(description_lines).strip(),
    }
