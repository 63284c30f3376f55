"""Graded nilpotent pairs on bigraded vector spaces.

A bigraded space V = sum of V_{s,t} carries pairs of commuting operators
that lower one grading index each; such a pair is the same data as a
representation of the staircase algebra of the partition lambda(V) cut out
by the grading.  Finiteness of pairs up to graded base change is decided
through the representation type and, for a fixed space, through
containment of minimal nullroots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import product

import numpy as np

from . import quadform
from .classify import (RepType, TAME_CONCEALED_SET, bundled_data, classify)
from .partitions import Partition, subdiagram_offsets
from .quiver import (Rows, add_rows, arrow_source, arrow_target, build_quiver,
                     check_shape, dominates, entry, extend_by_zeros,
                     transpose_rows, unit_rows, Vertex)
from .reps import (Representation, fmat, fzeros, make_representation,
                   realize_preprojective, relation_violations,
                   transpose_representation)


@dataclass(frozen=True)
class BigradedSpace:
    """Finitely supported dimension table over Z_{>=1} x Z_{>=1}."""
    dims: tuple  # sorted tuple of ((s, t), dim) with dim > 0

    @staticmethod
    def from_dict(d: dict) -> "BigradedSpace":
        cleaned = []
        for (s, t), k in d.items():
            if s < 1 or t < 1:
                raise ValueError(f"grading indices must be >= 1, got ({s},{t})")
            if k < 0:
                raise ValueError(f"negative dimension at ({s},{t})")
            if k > 0:
                cleaned.append(((int(s), int(t)), int(k)))
        return BigradedSpace(tuple(sorted(cleaned)))

    def dim(self, s: int, t: int) -> int:
        for (key, k) in self.dims:
            if key == (s, t):
                return k
        return 0

    @property
    def total_dim(self) -> int:
        return sum(k for _, k in self.dims)

    def to_json(self) -> dict:
        return {"dims": {f"{s},{t}": k for (s, t), k in self.dims}}

    @staticmethod
    def from_json(obj: dict) -> "BigradedSpace":
        out = {}
        for key, k in obj["dims"].items():
            s, t = (int(x) for x in key.split(","))
            out[(s, t)] = k
        return BigradedSpace.from_dict(out)


def shape_lambda(v: BigradedSpace) -> tuple[set, Partition]:
    """Downward closure of the support and the partition of its row counts.

    The partition counts boxes at each second index t, from the largest t
    down, so it comes out non-decreasing.
    """
    if not v.dims:
        raise ValueError("zero bigraded space has no shape")
    shape = set()
    for (s, t), _ in v.dims:
        for a in range(1, s + 1):
            for b in range(1, t + 1):
                shape.add((a, b))
    height = max(t for (_, t) in shape)
    counts = [sum(1 for (s, t) in shape if t == h) for h in range(height, 0, -1)]
    return shape, Partition(tuple(counts))


@dataclass(frozen=True)
class GradedPair:
    """Commuting graded operator pair: phi lowers s, psi lowers t.

    Component matrices are stored per source index (s, t); missing entries
    mean zero maps.  Nilpotency is automatic since both operators strictly
    lower a grading index.
    """
    space: BigradedSpace
    phi: dict = field(default_factory=dict)  # (s,t) -> matrix V_{s,t} -> V_{s-1,t}
    psi: dict = field(default_factory=dict)  # (s,t) -> matrix V_{s,t} -> V_{s,t-1}

    def component(self, table, s, t):
        m = table.get((s, t))
        shape = ((self.space.dim(s - 1, t), self.space.dim(s, t)) if table is self.phi
                 else (self.space.dim(s, t - 1), self.space.dim(s, t)))
        if m is None:
            return fzeros(*shape)
        return m if isinstance(m, np.ndarray) else fmat(m, shape=shape)

    def to_json(self) -> dict:
        def dump(table):
            out = {}
            for (s, t) in sorted(table):
                arr = self.component(table, s, t)
                out[f"{s},{t}"] = [[str(arr[i, j]) for j in range(arr.shape[1])]
                                   for i in range(arr.shape[0])]
            return out
        obj = self.space.to_json()
        obj["phi"] = dump(self.phi)
        obj["psi"] = dump(self.psi)
        return obj

    @staticmethod
    def from_json(obj: dict) -> "GradedPair":
        space = BigradedSpace.from_json(obj)

        def load(block):
            out = {}
            for key, rows in obj.get(block, {}).items():
                s, t = (int(x) for x in key.split(","))
                out[(s, t)] = [[Fraction(x) for x in row] for row in rows]
            return out

        return GradedPair(space, load("phi"), load("psi"))


def validate_pair(pair: GradedPair) -> list:
    """Shape and commutation violations; an empty list means a valid pair."""
    violations = []
    space = pair.space
    for table, name, target in ((pair.phi, "phi", lambda s, t: (s - 1, t)),
                                (pair.psi, "psi", lambda s, t: (s, t - 1))):
        for (s, t), m in sorted(table.items()):
            arr = m if isinstance(m, np.ndarray) else fmat(m)
            want = (space.dim(*target(s, t)), space.dim(s, t))
            if arr.shape != want:
                violations.append((name, (s, t),
                                   f"shape {arr.shape} != expected {want}"))
    if violations:
        return violations
    indices = {key for key, _ in space.dims}
    squares = set()
    for (s, t) in indices:
        for a in range(1, s + 1):
            for b in range(1, t + 1):
                if a >= 2 and b >= 2:
                    squares.add((a, b))
    for (s, t) in sorted(squares):
        left = pair.component(pair.psi, s - 1, t) @ pair.component(pair.phi, s, t)
        right = pair.component(pair.phi, s, t - 1) @ pair.component(pair.psi, s, t)
        if any(x != y for x, y in zip(left.flat, right.flat)):
            violations.append(("square", (s, t), "phi/psi square does not commute"))
    return violations


def to_representation(pair: GradedPair) -> Representation:
    """The staircase representation of the pair on Q(lambda(V)).

    Vertex (i, j) carries the component with grading (s, t) = (j, i); the
    arrows dropping i carry the t-lowering maps and the arrows dropping j
    carry the s-lowering maps, so the commuting squares become the quiver
    relations.
    """
    bad = validate_pair(pair)
    if bad:
        raise ValueError(f"invalid graded pair: {bad}")
    _, lam = shape_lambda(pair.space)
    dims = tuple(tuple(pair.space.dim(j, i) for j in range(1, lam.row_length(i) + 1))
                 for i in range(1, lam.length + 1))
    q = build_quiver(lam)
    mats = {}
    for a in q.arrows:
        kind, i, j = a
        if kind == "a":
            mats[a] = pair.component(pair.psi, j, i)
        else:
            mats[a] = pair.component(pair.phi, j, i)
    rep = make_representation(lam, dims, mats)
    if relation_violations(rep):
        raise ArithmeticError("valid pair produced a non-commuting representation")
    return rep


# -- finiteness --------------------------------------------------------------


class Finiteness(Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


def finiteness_partition(lam: Partition) -> bool:
    """Finitely many pairs of shape lam up to graded base change."""
    return classify(lam) is RepType.FINITE


def _minimal_nullroot_of(parts: tuple) -> tuple[Partition, Rows]:
    mu = Partition(parts)
    form = quadform.form_of(mu)
    return mu, quadform.minimal_nullroot(form, mu)


def finiteness_space(v: BigradedSpace) -> Finiteness:
    """Finiteness of pairs on the fixed space, decided where the theory decides.

    Finite type is always finite.  On the critical tame diagrams the answer
    is exact: infinite iff the dimension table dominates the minimal
    nullroot.  Otherwise domination of an embedded critical nullroot forces
    infinitude, and anything else is left unknown.
    """
    _, lam = shape_lambda(v)
    if classify(lam) is RepType.FINITE:
        return Finiteness.FINITE
    dims = tuple(tuple(v.dim(j, i) for j in range(1, lam.row_length(i) + 1))
                 for i in range(1, lam.length + 1))
    if lam.parts in TAME_CONCEALED_SET:
        _, root = _minimal_nullroot_of(lam.parts)
        return Finiteness.INFINITE if dominates(dims, root) else Finiteness.FINITE
    for parts in sorted(TAME_CONCEALED_SET):
        mu, root = _minimal_nullroot_of(parts)
        for offset in subdiagram_offsets(mu, lam):
            placed = extend_by_zeros(root, mu, lam, offset)
            if dominates(dims, placed):
                return Finiteness.INFINITE
    return Finiteness.UNKNOWN


# -- explicit wild families ---------------------------------------------------


_MPRIME_CACHE: dict = {}


def _realized_frame(frame: Partition, rows: Rows) -> Representation:
    key = (frame.parts, rows)
    if key not in _MPRIME_CACHE:
        _MPRIME_CACHE[key] = realize_preprojective(frame, rows)
    return _MPRIME_CACHE[key]


def _descriptor_for(lam: Partition):
    """(descriptor, attachment, transposed?) for a bundled wild diagram."""
    for desc in bundled_data()["family_descriptors"]:
        for att in desc["attachments"]:
            if tuple(att["wild"]) == lam.parts:
                return desc, att, False
    lamt = lam.transpose()
    for desc in bundled_data()["family_descriptors"]:
        for att in desc["attachments"]:
            if tuple(att["wild"]) == lamt.parts:
                return desc, att, True
    return None


def family_dim_vector(lam: Partition) -> Rows:
    """Dimension vector of the bundled two-parameter family on lam."""
    found = _descriptor_for(lam)
    if found is None:
        raise ValueError(f"no bundled family descriptor for {lam}")
    desc, att, transposed = found
    frame = Partition(tuple(desc["frame"]))
    wild = Partition(tuple(att["wild"]))
    rows = check_shape(frame, desc["mprime"])
    full = add_rows(extend_by_zeros(rows, frame, wild),
                    unit_rows(wild, tuple(att["source"])))
    return transpose_rows(wild, full) if transposed else full


def two_param_family(lam: Partition, params) -> Representation:
    """Member of the bundled two-parameter wild family at the given point.

    The bundled preprojective module over the one-box-smaller frame is
    extended by a one-dimensional space at the extra source box, embedded
    along the parameter column.  Distinct projective parameter points give
    non-isomorphic members.
    """
    found = _descriptor_for(lam)
    if found is None:
        raise ValueError(f"no bundled family descriptor for {lam}")
    desc, att, transposed = found
    frame = Partition(tuple(desc["frame"]))
    wild = Partition(tuple(att["wild"]))
    source: Vertex = tuple(att["source"])
    target: Vertex = tuple(att["target"])
    mprime_rows = check_shape(frame, desc["mprime"])
    params = [Fraction(x) for x in params]
    if len(params) != entry(mprime_rows, target):
        raise ValueError(
            f"need {entry(mprime_rows, target)} parameters, got {len(params)}")
    if all(x == 0 for x in params):
        raise ValueError("parameter vector must be nonzero")

    mprime = _realized_frame(frame, mprime_rows)
    dims = add_rows(extend_by_zeros(mprime_rows, frame, wild),
                    unit_rows(wild, source))
    q = build_quiver(wild)
    mats = dict(mprime.mats)
    out_arrows = [a for a in q.arrows if arrow_source(a) == source]
    if len(out_arrows) != 1 or any(arrow_target(a) == source for a in q.arrows):
        raise ArithmeticError(f"box {source} is not a one-arrow source of {wild}")
    arrow = out_arrows[0]
    if arrow_target(arrow) != target:
        raise ArithmeticError(f"descriptor target {target} does not match {arrow}")
    mats[arrow] = fmat([[x] for x in params], shape=(len(params), 1))
    rep = make_representation(wild, dims, mats)
    if relation_violations(rep):
        raise ArithmeticError("family member violates a commutativity relation")
    if transposed:
        rep = transpose_representation(rep)
    return rep


# -- micro-scale brute-force oracle -------------------------------------------


def _gl_generators(n: int, p: int):
    """Elementary transvections and dilations generating GL_n(F_p)."""
    gens = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for c in range(1, p):
                g = [[int(a == b) for b in range(n)] for a in range(n)]
                g[i][j] = c
                gens.append(tuple(tuple(r) for r in g))
    for u in range(2, p):
        g = [[int(a == b) for b in range(n)] for a in range(n)]
        g[0][0] = u
        gens.append(tuple(tuple(r) for r in g))
    if not gens:  # n == 0 or p == 2 with n == 1
        gens.append(tuple(tuple([1]) for _ in range(n)) if n else ())
    return gens


def _mat_inv_mod(g, p):
    n = len(g)
    aug = [list(map(int, g[i])) + [int(i == j) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] % p)
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], p - 2, p)
        aug[c] = [x * inv % p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def _mat_mul_mod(a, b, p):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p
                       for j in range(m)) for i in range(n))


def oracle_count_small(lam: Partition, d, field_size: int) -> int:
    """Exhaustive count of base-change orbits of relation-satisfying tuples.

    Ground truth at micro scale: enumerates every matrix tuple over F_p
    (p <= 3) and marks orbits under the product of the vertex groups.  The
    total number of matrix entries over all arrows is capped at 12.
    """
    if field_size not in (2, 3):
        raise ValueError("field size must be a prime <= 3")
    p = field_size
    d = check_shape(lam, d)
    q = build_quiver(lam)
    arrows = [a for a in q.arrows]
    cells = sum(entry(d, arrow_source(a)) * entry(d, arrow_target(a))
                for a in arrows)
    if cells > 12:
        raise ValueError(f"enumeration cap exceeded: {cells} matrix entries > 12")

    def shapes(a):
        return entry(d, arrow_target(a)), entry(d, arrow_source(a))

    def unpack(flat):
        mats = {}
        pos = 0
        for a in arrows:
            r, c = shapes(a)
            mats[a] = tuple(tuple(flat[pos + i * c + j] for j in range(c))
                            for i in range(r))
            pos += r * c
        return mats

    def satisfies(mats):
        for (i, j) in q.relations:
            left = _mat_mul_mod(mats[("b", i - 1, j)], mats[("a", i, j)], p)
            right = _mat_mul_mod(mats[("a", i, j - 1)], mats[("b", i, j)], p)
            if left != right:
                return False
        return True

    points = []
    for flat in product(range(p), repeat=cells):
        mats = unpack(flat)
        if satisfies(mats):
            points.append(tuple(mats[a] for a in arrows))
    point_set = set(points)

    vertex_gens = {}
    for v in q.vertices:
        n = entry(d, v)
        vertex_gens[v] = [(g, _mat_inv_mod(g, p)) for g in _gl_generators(n, p)] \
            if n else []

    def act(point, v, g, ginv):
        new = list(point)
        for k, a in enumerate(arrows):
            if arrow_target(a) == v:
                new[k] = _mat_mul_mod(g, new[k], p)
            if arrow_source(a) == v:
                new[k] = _mat_mul_mod(new[k], ginv, p)
        return tuple(new)

    unseen = set(point_set)
    orbits = 0
    while unseen:
        start = unseen.pop()
        orbits += 1
        queue = [start]
        while queue:
            cur = queue.pop()
            for v in q.vertices:
                for g, ginv in vertex_gens[v]:
                    nxt = act(cur, v, g, ginv)
                    if nxt in unseen:
                        unseen.remove(nxt)
                        queue.append(nxt)
    return orbits
