"""
Integration tests running the command-line tool as a separate process.

Covers the console entry point end to end: exit codes, stdout/stderr
separation, exported files and JSON log lines.
"""

import json
import subprocess
import sys
from pathlib import Path

import pytest

from src.reporting import CSV_COLUMNS, read_csv

REPO_ROOT = Path(__file__).resolve().parents[2]


def run_cli(
    *argv: str, env: dict[str, str] | None = None
) -> subprocess.CompletedProcess[str]:
    return subprocess.run(
        [sys.executable, "-m", "src.reporting", *argv],
        cwd=REPO_ROOT,
        capture_output=True,
        text=True,
        timeout=240,
        env=env,
        check=False,
    )


@pytest.mark.integration
class TestCliProcess:
    """The tool behaves the same in a fresh interpreter."""

    def test_compute_reports_disagreement_but_exits_zero(self):
        """
        Why: compute is an inspection tool, not a gate
        What: Tests G(2,2,2) prints both decompositions and exits 0
        How: Runs compute and reads stdout
        """
        result = run_cli("compute", "-p", "2", "-m", "2", "-n", "2")

        assert result.returncode == 0, result.stderr
        assert "decomposition 2xK4+2xK2" in result.stdout
        assert "decomposition 3xK4" in result.stdout
        assert "agrees:  no" in result.stdout

    @pytest.mark.parametrize(("max_order", "expected"), [(16, 0), (32, 1)])
    def test_verify_exit_codes(self, max_order, expected):
        """
        Why: verify gates on the first grid that contains an n = 2 row
        What: Tests order 16 passes and order 32 (adding G(2,2,2)) fails
        How: Runs verify over p = 2 with two order bounds
        """
        result = run_cli("verify", "--primes", "2", "--max-order", str(max_order))

        assert result.returncode == expected, result.stderr
        assert "checked against brute force" in result.stdout

    def test_export_file(self, tmp_path):
        """
        Why: Exported CSV is the stable machine-readable product
        What: Tests the written file has the fixed header and one row per triple
        How: Exports p in {2, 3} up to order 81 and reads it back
        """
        target = tmp_path / "sweep.csv"

        result = run_cli(
            "export", "--primes", "2,3", "--max-order", "81", "-o", str(target)
        )

        assert result.returncode == 0, result.stderr
        assert result.stdout == ""
        records = read_csv(target)
        assert len(records) == 8
        assert tuple(records[0]) == CSV_COLUMNS
        assert [r["p"] for r in records] == ["2"] * 6 + ["3"] * 2

    def test_json_export_to_stdout(self):
        """
        Why: Piping JSON must not be polluted by log lines
        What: Tests stdout parses as the JSON report while logs go to stderr
        How: Exports JSON at INFO level and parses both streams
        """
        result = run_cli(
            "--log-level",
            "INFO",
            "--log-json",
            "export",
            "--primes",
            "2",
            "--max-order",
            "16",
            "--format",
            "json",
        )

        assert result.returncode == 0, result.stderr
        payload = json.loads(result.stdout)
        assert payload["columns"] == list(CSV_COLUMNS)
        assert [row["m"] for row in payload["rows"]] == ["1", "2"]
        events = [json.loads(line) for line in result.stderr.splitlines() if line]
        assert any(event["event"] == "Finished sweep" for event in events)

    def test_invalid_environment_is_usage_error(self):
        """
        Why: A bad CCC_* variable must stop the tool before any work
        What: Tests an out-of-range CCC_WORKERS exits 2
        How: Runs table with the variable set
        """
        env = {"PATH": "", "CCC_WORKERS": "0"}

        result = run_cli("table", "--primes", "2", env=env)

        assert result.returncode == 2
        assert result.stderr.startswith("error:")
        assert "(workers)" in result.stderr
