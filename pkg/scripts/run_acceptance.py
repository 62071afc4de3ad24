#!/usr/bin/env python3
"""Run the acceptance suite with its per-criterion verdict lines shown.

Usage::

    python3 scripts/run_acceptance.py [extra pytest args]
"""

import sys
from pathlib import Path

import pytest


def main() -> int:
    suite = Path(__file__).resolve().parents[1] / "tests" / "test_acceptance.py"
    return pytest.main([str(suite), "-v", "-s", *sys.argv[1:]])


if __name__ == "__main__":
    sys.exit(main())
