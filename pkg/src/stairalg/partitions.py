"""Partitions in increasing order, with the diagram containment order.

A partition is stored as a non-decreasing tuple of positive integers
(lambda_1 <= ... <= lambda_l).  Its Young diagram Y(lambda) is drawn
bottom-heavy: boxes are addressed as (i, j) with i the row index counted
from the bottom and j the column index from the left, so row i holds
lambda_{l+1-i} boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby


class PartitionError(ValueError):
    """Raised for malformed partition text or invalid part lists."""


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise PartitionError("partition needs at least one part")
        if any((not isinstance(p, int)) or p < 1 for p in self.parts):
            raise PartitionError(f"parts must be positive integers: {self.parts}")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise PartitionError(f"parts must be non-decreasing: {self.parts}")

    # -- basic measures -------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def steps(self) -> int:
        """Number of distinct part values (entries in potency notation)."""
        return len(set(self.parts))

    def row_length(self, i: int) -> int:
        """Boxes in row i, counted from the bottom (row 1 is the longest)."""
        if not 1 <= i <= self.length:
            raise IndexError(f"row {i} out of range for {self}")
        return self.parts[self.length - i]

    def boxes(self):
        """All (i, j) box coordinates, in lexicographic order."""
        return [(i, j) for i in range(1, self.length + 1)
                for j in range(1, self.row_length(i) + 1)]

    # -- structure ------------------------------------------------------

    def transpose(self) -> "Partition":
        """Partition of the column heights of the diagram."""
        widest = self.parts[-1]
        cols = [sum(1 for p in self.parts if p >= j) for j in range(1, widest + 1)]
        return Partition(tuple(sorted(cols)))

    def __str__(self) -> str:
        return format_partition(self)

    def __iter__(self):
        return iter(self.parts)


def partition(*parts: int) -> Partition:
    """Build a partition from parts given in any order."""
    return Partition(tuple(sorted(parts)))


def parse_partition(text: str) -> Partition:
    """Parse comma-separated parts with optional potencies, e.g. "1^2,2^3,6,8^2".

    Whitespace is ignored and parts are sorted into canonical increasing
    order, so "3,1,2" parses to (1,2,3).
    """
    items = [t.strip() for t in text.split(",")]
    parts: list[int] = []
    for item in items:
        if not item:
            raise PartitionError(f"empty item in partition text {text!r}")
        value_s, sep, count_s = item.partition("^")
        try:
            value = int(value_s.strip())
            count = int(count_s.strip()) if sep else 1
        except ValueError:
            raise PartitionError(f"malformed partition item {item!r}") from None
        if value < 1 or count < 1:
            raise PartitionError(f"partition item {item!r} must use positive integers")
        parts.extend([value] * count)
    return Partition(tuple(sorted(parts)))


def format_partition(lam: Partition) -> str:
    """Canonical potency notation with ascending parts, e.g. "1^2,2^3,6,8^2"."""
    chunks = []
    for value, group in groupby(lam.parts):
        k = len(list(group))
        chunks.append(f"{value}^{k}" if k > 1 else str(value))
    return ",".join(chunks)


def measures(lam: Partition) -> tuple[int, int, int]:
    """(size, length, steps) of the partition."""
    return lam.size, lam.length, lam.steps


def transpose(lam: Partition) -> Partition:
    return lam.transpose()


def is_subdiagram(lam: Partition, mu: Partition) -> bool:
    """Whether Y(lam) fits inside Y(mu) with bottom-left corners identified.

    Rows are compared largest-to-largest: this is exactly the containment
    under which the smaller staircase quiver is a convex subquiver of the
    larger one.
    """
    if lam.length > mu.length:
        return False
    a = sorted(lam.parts, reverse=True)
    b = sorted(mu.parts, reverse=True)
    return all(x <= y for x, y in zip(a, b))


def subdiagram_offsets(lam: Partition, mu: Partition) -> list[tuple[int, int]]:
    """All translations (di, dj) placing Y(lam) inside Y(mu) box-by-box.

    (0, 0) is the bottom-left-aligned placement of `is_subdiagram`; other
    offsets shift the whole diagram up and/or right.  Every placement is a
    convex subquiver of the bigger staircase quiver.
    """
    placements = []
    mu_boxes = set(mu.boxes())
    lam_boxes = lam.boxes()
    max_di = mu.length - lam.length
    max_dj = mu.parts[-1] - lam.parts[-1]
    for di in range(max_di + 1):
        for dj in range(max_dj + 1):
            if all((i + di, j + dj) in mu_boxes for i, j in lam_boxes):
                placements.append((di, dj))
    return placements


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, in lexicographic order of the increasing parts."""
    if n < 1:
        raise PartitionError("partitions are defined for n >= 1")
    out: list[Partition] = []

    def grow(prefix, remaining, minimum):
        if remaining == 0:
            out.append(Partition(tuple(reversed(prefix))))
            return
        # build parts in decreasing order so the reversed tuple is increasing
        for p in range(min(minimum, remaining), 0, -1):
            grow(prefix + [p], remaining - p, p)

    grow([], n, n)
    return sorted(out, key=lambda lam: lam.parts)
