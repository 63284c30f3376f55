#!/usr/bin/env python3
"""Export the diagram-containment hierarchy colored by representation type."""

import argparse
import sys

from stairalg.cli import run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=10)
    parser.add_argument("--json", action="store_true",
                        help="emit JSON instead of DOT")
    args = parser.parse_args()
    argv = ["hierarchy", "--max-n", str(args.max_n)]
    if not args.json:
        argv.append("--dot")
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
