"""Tests for command decorator functionality."""

import pytest

from blobalg.commands.command_decorator import command, get_schema


def test_command_name_conversion():
    """Test command name conversion from function name."""

    @command()
    def execute_dim():
        """Dimension."""

    @command()
    def execute_verify_klr():
        """Verify KLR."""

    @command(name="custom")
    def execute_other():
        """Other."""

    assert hasattr(execute_dim, "_is_command")
    assert execute_dim._command_name == "dim"
    assert execute_verify_klr._command_name == "verify-klr"
    assert execute_other._command_name == "custom"


def test_command_passes_through():
    """Test that the wrapper returns the wrapped result and keeps errors."""

    @command()
    def execute_echo(value):
        """Echo."""
        return value

    @command()
    def execute_failing():
        """Fail."""
        raise ValueError("Test error")

    assert execute_echo(3) == 3
    assert execute_echo.__name__ == "execute_echo"
    with pytest.raises(ValueError, match="Test error"):
        execute_failing()


def test_get_schema_validation():
    """Test schema validation for non-command functions."""

    def regular_function():
        pass

    with pytest.raises(ValueError, match="is not a command"):
        get_schema(regular_function)


def test_get_schema_description():
    """Test that the description stops at the Args section."""

    @command()
    def execute_gram(config):
        """Gram matrix of each cell module.

        Rank and determinant too.

        Args:
            config: Run configuration
        """

    schema = get_schema(execute_gram)
    assert schema["name"] == "gram"
    assert schema["description"] == "Gram matrix of each cell module.\n\nRank and determinant too."
