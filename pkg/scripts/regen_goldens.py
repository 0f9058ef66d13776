#!/usr/bin/env python3
"""Regenerate (or check) the golden files in goldens/.

Usage:
    python3 scripts/regen_goldens.py          # check against stored goldens
    python3 scripts/regen_goldens.py --write  # overwrite stored goldens
"""

import argparse
import json
import os
import sys

from awfslab.cli import diff_goldens, emit_goldens

GOLDENS = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
                       "goldens")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--write", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if args.write:
        rep = emit_goldens(GOLDENS, seed=args.seed)
    else:
        rep = diff_goldens(GOLDENS, seed=args.seed)
    print(json.dumps(rep, indent=1))
    return 0 if rep["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
