"""Unit tests for the blobalg command line."""

import json
from unittest.mock import patch

import pytest

from blobalg.cli import EXIT_ERROR, EXIT_FAILED, EXIT_OK, build_parser, main, run
from blobalg.commands.command_decorator import command
from blobalg.core.config import RunConfig
from blobalg.core.exceptions import SeparationFailure
from blobalg.core.reports import CommandResult, VerificationReport


class TestParser:
    """Tests for argument parsing."""

    def test_defaults(self):
        """Test default argument values."""
        with patch.dict("os.environ", {}, clear=True):
            args = build_parser().parse_args(["dim"])
        assert args.subcommand == "dim"
        assert args.algebra == "blob"
        assert (args.n, args.l, args.m) == (3, 5, 2)
        assert args.field == "cyclo"
        assert args.output_format == "text"
        assert args.workers == 1
        assert args.log_level == "WARNING"

    def test_env_defaults(self):
        """Test that workers and log level fall back to the environment."""
        with patch.dict("os.environ", {"BLOBALG_WORKERS": "4", "BLOBALG_LOG_LEVEL": "DEBUG"}):
            args = build_parser().parse_args(["verify-klr"])
        assert args.workers == 4
        assert args.log_level == "DEBUG"

    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(["frobnicate"])


class TestMain:
    """Tests for the main entry point."""

    def test_dim_text(self, capsys):
        assert main(["dim", "--algebra", "tl", "--n", "3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "5"

    def test_dim_json(self, capsys):
        """Test the JSON envelope."""
        assert main(["dim", "--n", "2", "--format", "json"]) == EXIT_OK
        envelope = json.loads(capsys.readouterr().out)
        assert set(envelope) == {"config", "results", "pass"}
        assert envelope["pass"] is True
        assert envelope["config"]["n"] == 2
        assert envelope["results"] == [
            {
                "command": "dim",
                "data": {"dimension": 6, "cells": {"((2),(0))": 1, "((1),(1))": 2, "((0),(2))": 1}},
            }
        ]

    def test_gamma_csv(self, capsys):
        assert main(["gamma", "--n", "2", "--format", "csv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "tableau,gamma"
        assert len(lines) == 5

    def test_invalid_config(self, capsys):
        """Test that configuration errors exit with status 2."""
        assert main(["dim", "--l", "4"]) == EXIT_ERROR
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "l must be an odd integer" in captured.err

    def test_separation_failure(self, capsys):
        assert main(["dim", "--l", "3", "--m", "1"]) == EXIT_ERROR
        assert "separation condition" in capsys.readouterr().err

    def test_jm_matrix_without_k(self, capsys):
        assert main(["jm-matrix", "--n", "2"]) == EXIT_ERROR
        payload = json.loads(capsys.readouterr().err)
        assert payload["error_type"] == "CONFIGURATION_ERROR"
        assert payload["message"] == "jm-matrix requires --k"

    def test_config_file(self, config_file, capsys):
        """Test loading the run configuration from a file."""
        assert main(["dim", "--config", str(config_file)]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[0] == "20"

    def test_failed_check(self, mocker, capsys):
        """Test that a failing check exits with status 1."""

        @command(name="dim")
        def execute_failing(config):
            """Always fails."""
            report = VerificationReport(title="broken")
            report.add("identity", False, witness="1 != 2")
            return CommandResult(command="dim", text="broken: FAIL", reports=[report])

        mocker.patch.dict("blobalg.cli.COMMANDS", {"dim": execute_failing})
        assert main(["dim"]) == EXIT_FAILED
        assert capsys.readouterr().out.strip() == "broken: FAIL"


class TestRun:
    """Tests for dispatch."""

    def test_unknown_command(self):
        status, output = run(RunConfig(subcommand="frobnicate"))
        assert status == EXIT_ERROR
        assert "Unknown command frobnicate" in output

    def test_json_envelope(self):
        """Test the JSON rendering of a successful run."""
        status, output = run(
            RunConfig(subcommand="gamma", n=2, field="cyclo", output_format="json")
        )
        assert status == EXIT_OK
        assert json.loads(output)["results"][0]["command"] == "gamma"

    def test_algebra_error(self):
        """Test that algebra errors exit with status 2 and keep their type."""

        @command(name="dim")
        def execute_raising(config):
            """Always raises."""
            raise SeparationFailure("contents do not separate", details={"n": config.n})

        with patch.dict("blobalg.cli.COMMANDS", {"dim": execute_raising}):
            status, output = run(RunConfig(output_format="json"))
        assert status == EXIT_ERROR
        envelope = json.loads(output)
        assert envelope["pass"] is False
        assert envelope["results"] == [
            {
                "error_type": "SEPARATION_FAILURE",
                "message": "contents do not separate",
                "details": {"n": 3},
            }
        ]
