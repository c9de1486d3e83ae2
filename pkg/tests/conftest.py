"""Shared fixtures; the expensive full-corpus verify run happens once."""

from __future__ import annotations

import subprocess
import sys
import time
from dataclasses import dataclass

import pytest


@dataclass
class VerifyRun:
    exit_code: int
    csv_path: str
    stderr: str
    elapsed: float


@pytest.fixture(scope="session")
def theorem_verify_run(tmp_path_factory) -> VerifyRun:
    """Run the full verification sweep through the CLI, once per session."""
    out = tmp_path_factory.mktemp("verify") / "theorem.csv"
    start = time.perf_counter()
    proc = subprocess.run(
        [
            sys.executable,
            "-m",
            "vattol.cli",
            "verify",
            "--corpus",
            "theorem",
            "--checks",
            "all",
            "--jobs",
            "2",
            "--format",
            "csv",
            "-o",
            str(out),
        ],
        capture_output=True,
        text=True,
        timeout=900,
    )
    elapsed = time.perf_counter() - start
    return VerifyRun(
        exit_code=proc.returncode,
        csv_path=str(out),
        stderr=proc.stderr,
        elapsed=elapsed,
    )
