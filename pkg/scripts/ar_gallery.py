#!/usr/bin/env python3
"""Knit every finite-type diagram up to a size bound and dump DOT files.

Writes one .dot file per diagram into the output directory, together with
a short index of vertex counts (= numbers of indecomposables).
"""

import argparse
from pathlib import Path

from stairalg import classify, format_partition, partitions_of
from stairalg.arquiver import ar_to_dot, knit
from stairalg.classify import RepType


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--out", type=Path, default=Path("ar_gallery"))
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    index = []
    for n in range(1, args.max_n + 1):
        for lam in partitions_of(n):
            if classify(lam) is not RepType.FINITE:
                continue
            ar = knit(lam)
            assert ar.complete
            name = format_partition(lam).replace("^", "p").replace(",", "_")
            (args.out / f"{name}.dot").write_text(ar_to_dot(ar))
            index.append(f"{format_partition(lam):<18} {len(ar.vertices):>4}")
    (args.out / "INDEX.txt").write_text("\n".join(index) + "\n")
    print(f"wrote {len(index)} components to {args.out}/")


if __name__ == "__main__":
    main()
