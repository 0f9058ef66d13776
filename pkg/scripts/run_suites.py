#!/usr/bin/env python3
"""Run one or all verification suites and print the JSON report.

Usage:
    python3 scripts/run_suites.py all
    python3 scripts/run_suites.py cat-folk --seed 1 --json-out report.json
    python3 scripts/run_suites.py cat-folk --cap 3   # demonstrates exit 2
"""

import sys

from awfslab.cli import main

if __name__ == "__main__":
    sys.exit(main(["run"] + sys.argv[1:]))
