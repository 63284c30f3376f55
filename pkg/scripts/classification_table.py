#!/usr/bin/env python3
"""Print the representation-type census of all diagrams up to a given size."""

import argparse
from collections import Counter

from stairalg import classify, format_partition, partitions_of


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12)
    args = parser.parse_args()

    grand = Counter()
    for n in range(1, args.max_n + 1):
        rows = [(format_partition(lam), classify(lam).value)
                for lam in partitions_of(n)]
        counts = Counter(t for _, t in rows)
        grand.update(counts)
        print(f"n = {n}  ({len(rows)} partitions)  "
              + "  ".join(f"{k}:{v}" for k, v in sorted(counts.items())))
        for name, t in rows:
            print(f"    {name:<18} {t}")
    print("\ntotals:", "  ".join(f"{k}:{v}" for k, v in sorted(grand.items())))


if __name__ == "__main__":
    main()
