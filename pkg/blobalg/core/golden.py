"""Loading, saving and diffing the versioned golden corpus."""

import difflib
import json
import logging
from pathlib import Path
from typing import Any

from blobalg.core.constants import GOLDEN_DIR, GOLDEN_FILES
from blobalg.core.exceptions import ConfigurationError


logger = logging.getLogger(__name__)


def golden_path(name: str, directory: Path | str | None = None) -> Path:
    """Path of a golden file by its short name (e.g. "tl3_l3").

    Raises:
        ConfigurationError: If the name is unknown
    """
    if name not in GOLDEN_FILES:
        raise ConfigurationError(f"Unknown golden file {name!r}")
    return Path(directory or GOLDEN_DIR) / GOLDEN_FILES[name]


def load_golden(name: str, directory: Path | str | None = None) -> dict[str, Any]:
    """Read a golden file.

    Raises:
        ConfigurationError: If the file is missing or not valid JSON
    """
    path = golden_path(name, directory)
    try:
        with open(path) as f:
            return json.load(f)
    except FileNotFoundError:
        raise ConfigurationError(f"Golden file not found: {path}")
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"Invalid JSON in golden file {path}: {e}")


def dump_golden(data: dict[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def diff_golden(old: dict[str, Any], new: dict[str, Any], name: str = "golden") -> str:
    """Unified diff between two versions of a golden file."""
    return "".join(
        difflib.unified_diff(
            dump_golden(old).splitlines(keepends=True),
            dump_golden(new).splitlines(keepends=True),
            fromfile=f"{name} (stored)",
            tofile=f"{name} (computed)",
        )
    )


def save_golden(name: str, data: dict[str, Any], directory: Path | str | None = None) -> Path:
    path = golden_path(name, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_golden(data))
    logger.info("Wrote golden file %s", path)
    return path
