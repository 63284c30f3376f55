"""Staircase quiver of a partition, with commutativity relations.

Vertices are the boxes (i, j) of Y(lambda).  Arrows run coordinatewise
downward: horizontal arrows a(i,j): (i,j) -> (i-1,j) and vertical arrows
b(i,j): (i,j) -> (i,j-1), whenever the target box exists.  Every unit
square inside the diagram carries one commutativity relation; we anchor
it at the square's top-right box (i, j), equating the two length-2 paths
to (i-1, j-1).

Vertex-indexed integer vectors ("dim vectors") are stored as rows, bottom
row first, each row left-aligned with j ascending.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import Partition

Vertex = tuple[int, int]
# arrow kinds: "a" = horizontal (drops i), "b" = vertical (drops j)
Arrow = tuple[str, int, int]
Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class StaircaseQuiver:
    lam: Partition
    vertices: tuple[Vertex, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[Vertex, ...]  # anchors (i, j) of commuting squares

    def __contains__(self, v: Vertex) -> bool:
        i, j = v
        return 1 <= i <= self.lam.length and 1 <= j <= self.lam.row_length(i)

    @property
    def n(self) -> int:
        return len(self.vertices)


def arrow_source(a: Arrow) -> Vertex:
    return (a[1], a[2])


def arrow_target(a: Arrow) -> Vertex:
    kind, i, j = a
    return (i - 1, j) if kind == "a" else (i, j - 1)


def build_quiver(lam: Partition) -> StaircaseQuiver:
    """Quiver, arrows and relation anchors of Y(lam), in lexicographic order."""
    vertices = tuple(lam.boxes())
    arrows: list[Arrow] = []
    relations: list[Vertex] = []
    for (i, j) in vertices:
        if i >= 2:
            arrows.append(("a", i, j))  # target (i-1, j) exists: lower rows are longer
        if j >= 2:
            arrows.append(("b", i, j))
        if i >= 2 and j >= 2:
            relations.append((i, j))
    return StaircaseQuiver(lam, vertices, tuple(arrows), tuple(relations))


# -- dim vectors --------------------------------------------------------


def zero_rows(lam: Partition) -> Rows:
    return tuple(tuple(0 for _ in range(lam.row_length(i)))
                 for i in range(1, lam.length + 1))


def check_shape(lam: Partition, rows, allow_negative=False) -> Rows:
    """Validate row layout against Y(lam) and return a canonical tuple form."""
    rows = tuple(tuple(int(x) for x in row) for row in rows)
    if len(rows) != lam.length:
        raise ValueError(f"expected {lam.length} rows for {lam}, got {len(rows)}")
    for i, row in enumerate(rows, start=1):
        if len(row) != lam.row_length(i):
            raise ValueError(
                f"row {i} of {lam} needs {lam.row_length(i)} entries, got {len(row)}")
        if not allow_negative and any(x < 0 for x in row):
            raise ValueError(f"negative entry in dimension vector row {i}: {row}")
    return rows


def entry(rows: Rows, v: Vertex) -> int:
    i, j = v
    return rows[i - 1][j - 1]


def with_entry(rows: Rows, v: Vertex, value: int) -> Rows:
    i, j = v
    out = [list(r) for r in rows]
    out[i - 1][j - 1] = value
    return tuple(tuple(r) for r in out)


def unit_rows(lam: Partition, v: Vertex) -> Rows:
    return with_entry(zero_rows(lam), v, 1)


def add_rows(x: Rows, y: Rows) -> Rows:
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def sub_rows(x: Rows, y: Rows) -> Rows:
    return tuple(tuple(a - b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def dominates(x: Rows, y: Rows) -> bool:
    """Componentwise x >= y."""
    return all(a >= b for rx, ry in zip(x, y) for a, b in zip(rx, ry))


def transpose_rows(lam: Partition, rows: Rows) -> Rows:
    """Relabel a vector along (i, j) -> (j, i) onto the transposed diagram."""
    lamt = lam.transpose()
    return tuple(tuple(rows[j - 1][i - 1] for j in range(1, lamt.row_length(i) + 1))
                 for i in range(1, lamt.length + 1))


def extend_by_zeros(rows: Rows, lam: Partition, mu: Partition,
                    offset: tuple[int, int] = (0, 0)) -> Rows:
    """Embed a vector on Y(lam) into Y(mu) at the given translation, zero elsewhere."""
    di, dj = offset
    out = [list(r) for r in zero_rows(mu)]
    for i in range(1, lam.length + 1):
        for j in range(1, lam.row_length(i) + 1):
            ti, tj = i + di, j + dj
            if not (1 <= ti <= mu.length and tj <= mu.row_length(ti)):
                raise ValueError(f"box ({i},{j})+({di},{dj}) falls outside {mu}")
            out[ti - 1][tj - 1] = rows[i - 1][j - 1]
    return tuple(tuple(r) for r in out)


# -- distinguished vectors ----------------------------------------------


def projective_vector(q: StaircaseQuiver, v: Vertex) -> Rows:
    """Indicator of the lower-left rectangle {(k, l): k <= i, l <= j} in Y."""
    if v not in q:
        raise ValueError(f"vertex {v} not in quiver of {q.lam}")
    i, j = v
    return tuple(tuple(1 if (k <= i and l <= j) else 0
                       for l in range(1, q.lam.row_length(k) + 1))
                 for k in range(1, q.lam.length + 1))


def injective_vector(q: StaircaseQuiver, v: Vertex) -> Rows:
    """Indicator of the upper-right rectangle {(k, l) in Y: k >= i, l >= j}."""
    if v not in q:
        raise ValueError(f"vertex {v} not in quiver of {q.lam}")
    i, j = v
    return tuple(tuple(1 if (k >= i and l >= j) else 0
                       for l in range(1, q.lam.row_length(k) + 1))
                 for k in range(1, q.lam.length + 1))


# -- serialization -------------------------------------------------------


def rows_to_json(lam: Partition, rows: Rows) -> dict:
    return {"lambda": list(lam.parts), "rows": [list(r) for r in rows]}


def rows_from_json(obj: dict, allow_negative=True) -> tuple[Partition, Rows]:
    lam = Partition(tuple(obj["lambda"]))
    rows = check_shape(lam, obj["rows"], allow_negative=allow_negative)
    return lam, rows


def to_dot(q: StaircaseQuiver) -> str:
    """DOT digraph; relation squares appear as dotted diagonals."""
    lines = ["digraph staircase {"]
    lines.append('  rankdir=LR;')
    for (i, j) in q.vertices:
        lines.append(f'  "{i},{j}" [label="{i},{j}"];')
    for a in q.arrows:
        si, sj = arrow_source(a)
        ti, tj = arrow_target(a)
        lines.append(f'  "{si},{sj}" -> "{ti},{tj}";')
    for (i, j) in q.relations:
        lines.append(f'  "{i},{j}" -> "{i-1},{j-1}" [style=dotted, dir=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"
