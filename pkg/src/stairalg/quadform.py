"""Exact unit quadratic form engine for staircase quivers (and plain graphs).

The form of a staircase quiver is q(x) = sum x_v^2 - sum_{arrows u->v} x_u x_v
+ sum_{squares} x_anchor x_corner, a unit form with integer coefficients.
All decisions here are exact: positive semidefiniteness by rational
elimination, the radical as a saturated integer kernel lattice, weak
positivity and root enumeration by a complete bounded search.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from . import linalg
from .partitions import Partition
from .quiver import (StaircaseQuiver, arrow_source, arrow_target, build_quiver,
                     check_shape, Rows)


@dataclass(frozen=True)
class UnitForm:
    """Unit form on a finite ordered vertex set with off-diagonal coefficients.

    `coeff` maps unordered vertex pairs (stored with index u < v) to the
    integer coefficient of x_u x_v; the diagonal is implicitly 1.
    """
    labels: tuple
    coeff: dict

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)

    def neighbours(self):
        """Adjacency list: for each vertex index, (other index, coefficient)."""
        adj = [[] for _ in self.labels]
        for (u, v), c in self.coeff.items():
            adj[u].append((v, c))
            adj[v].append((u, c))
        return adj


@dataclass(frozen=True)
class FormVerdict:
    decision: str  # "holds" | "fails" | "inconclusive"
    witness: Optional[tuple] = None  # flat coefficient tuple in label order
    bound: Optional[int] = None

    def to_json(self, form: UnitForm, lam: Partition | None = None) -> dict:
        witness = None
        if self.witness is not None:
            if lam is not None:
                witness = {"lambda": list(lam.parts),
                           "rows": [list(r) for r in unflatten(lam, self.witness)]}
            else:
                witness = list(self.witness)
        return {"decision": self.decision, "witness": witness, "bound": self.bound}


# default search caps; see is_weakly_positive / is_weakly_nonnegative
@dataclass(frozen=True)
class SearchBounds:
    root_entry_bound: int = 6
    nonneg_entry_bound: int = 18


DEFAULT_BOUNDS = SearchBounds()


def tits_form(q: StaircaseQuiver) -> UnitForm:
    """Unit form of the bound quiver: -1 per arrow, +1 per commuting square."""
    labels = q.vertices
    pos = {v: k for k, v in enumerate(labels)}
    coeff: dict = {}

    def bump(u, v, c):
        key = (min(u, v), max(u, v))
        coeff[key] = coeff.get(key, 0) + c

    for a in q.arrows:
        bump(pos[arrow_source(a)], pos[arrow_target(a)], -1)
    for (i, j) in q.relations:
        bump(pos[(i, j)], pos[(i - 1, j - 1)], +1)
    return UnitForm(labels, {k: c for k, c in coeff.items() if c})


def form_of(lam: Partition) -> UnitForm:
    return tits_form(build_quiver(lam))


def graph_form(n: int, edges) -> UnitForm:
    """Unit form of an undirected multigraph: -multiplicity per edge."""
    coeff: dict = {}
    for (u, v) in edges:
        if u == v:
            raise ValueError("graph forms here have no loops")
        key = (min(u, v), max(u, v))
        coeff[key] = coeff.get(key, 0) - 1
    return UnitForm(tuple(range(n)), coeff)


# -- evaluation ----------------------------------------------------------


def flatten(lam: Partition, rows) -> tuple[int, ...]:
    rows = check_shape(lam, rows, allow_negative=True)
    return tuple(x for row in rows for x in row)


def unflatten(lam: Partition, flat) -> Rows:
    out = []
    it = iter(flat)
    for i in range(1, lam.length + 1):
        out.append(tuple(next(it) for _ in range(lam.row_length(i))))
    return tuple(out)


def eval_flat(f: UnitForm, x) -> int:
    if len(x) != f.n:
        raise ValueError(f"vector length {len(x)} != {f.n} vertices")
    total = sum(v * v for v in x)
    for (u, v), c in f.coeff.items():
        total += c * x[u] * x[v]
    return total


def eval_form(f: UnitForm, lam: Partition, rows) -> int:
    """q(x) for a vector given in the canonical row layout of Y(lam)."""
    return eval_flat(f, flatten(lam, rows))


def bilinear_flat(f: UnitForm, x, y) -> int:
    """Symmetric bilinear form b(x, y) = q(x+y) - q(x) - q(y)."""
    if len(x) != f.n or len(y) != f.n:
        raise ValueError("vector length mismatch")
    total = 2 * sum(a * b for a, b in zip(x, y))
    for (u, v), c in f.coeff.items():
        total += c * (x[u] * y[v] + x[v] * y[u])
    return total


def bilinear(f: UnitForm, lam: Partition, rows_x, rows_y) -> int:
    return bilinear_flat(f, flatten(lam, rows_x), flatten(lam, rows_y))


def gram(f: UnitForm):
    """Symmetric rational G with q(x) = x^T G x (diagonal 1, halves off it)."""
    g = [[Fraction(0)] * f.n for _ in range(f.n)]
    for i in range(f.n):
        g[i][i] = Fraction(1)
    for (u, v), c in f.coeff.items():
        g[u][v] = Fraction(c, 2)
        g[v][u] = Fraction(c, 2)
    return g


def is_psd(f: UnitForm) -> bool:
    return linalg.is_psd(gram(f))


# -- radical and isotropic structure (PSD forms only) ---------------------


def _require_psd(f: UnitForm):
    if not is_psd(f):
        raise ValueError("radical defined here only for non-negative forms")


def radical_basis(f: UnitForm) -> list[tuple[int, ...]]:
    """HNF basis of the integer kernel lattice of the Gram matrix.

    For a PSD form the radical {q = 0} coincides with the kernel of the
    bilinear form, a saturated sublattice of Z^n.
    """
    _require_psd(f)
    two_g = [[int(2 * x) for x in row] for row in gram(f)]
    basis = linalg.integer_kernel(two_g)
    hnf = linalg.lattice_hnf(basis)
    return [tuple(b) for b in hnf]


def radical_rank(f: UnitForm) -> int:
    return len(radical_basis(f))


def _kernel_cone_rays(f: UnitForm):
    """Generators of (kernel of G) meeting the non-negative orthant.

    The cone {y : K y >= 0} in kernel coordinates is pointed (K has full
    column rank), so every extreme ray is cut out by rank-1 fewer tight
    constraints; candidate rays are checked against all inequalities.
    """
    basis = radical_basis(f)
    r = len(basis)
    if r == 0:
        return []
    cols = [list(b) for b in zip(*basis)]  # K: n rows, r cols

    def feasible(y):
        return all(sum(row[k] * y[k] for k in range(r)) >= 0 for row in cols)

    rays = []
    if r == 1:
        for sign in (1, -1):
            if feasible([sign]):
                rays.append([sign])
    else:
        seen = set()
        for subset in combinations(range(len(cols)), r - 1):
            sub = [[Fraction(cols[i][k]) for k in range(r)] for i in subset]
            ker = linalg.nullspace(sub, cols=r)
            if len(ker) != 1:
                continue
            den = 1
            for x in ker[0]:
                den = den * x.denominator // gcd(den, x.denominator)
            vec = [int(x * den) for x in ker[0]]
            g = 0
            for x in vec:
                g = gcd(g, abs(x))
            vec = [x // g for x in vec] if g else vec
            for cand in (vec, [-x for x in vec]):
                key = tuple(cand)
                if key not in seen and feasible(cand):
                    seen.add(key)
                    rays.append(list(cand))
    # rays in ambient coordinates
    out = []
    for y in rays:
        amb = tuple(sum(basis[k][i] * y[k] for k in range(r)) for i in range(f.n))
        if any(amb):
            out.append(amb)
    return out


def corank0(f: UnitForm) -> int:
    """Dimension of the span of the kernel's non-negative part."""
    rays = _kernel_cone_rays(f)
    if not rays:
        return 0
    return linalg.rank([[Fraction(x) for x in ray] for ray in rays])


def nonnegative_nullvector(f: UnitForm):
    """Some nonzero x >= 0 with q(x) = 0, or None (PSD forms)."""
    rays = _kernel_cone_rays(f)
    return rays[0] if rays else None


def minimal_nullroot(f: UnitForm, lam: Partition) -> Rows:
    """Primitive positive generator of a rank-1 radical."""
    basis = radical_basis(f)
    if len(basis) != 1:
        raise ValueError(f"radical rank is {len(basis)}, not 1")
    gen = basis[0]
    if all(x >= 0 for x in gen):
        pass
    elif all(x <= 0 for x in gen):
        gen = tuple(-x for x in gen)
    else:
        raise ValueError("radical generator mixes signs")
    return unflatten(lam, gen)


# -- weak positivity, roots, weak non-negativity --------------------------


def _root_search(f: UnitForm, entry_bound: int, keep_isotropic: bool,
                 stop_value: int):
    """Breadth-first growth of positive vectors with small q from unit vectors.

    Walks x -> x + e_i restricted to entries <= entry_bound, keeping vectors
    with q = 1 (and q = 0 when keep_isotropic).  Any generated vector with
    q <= stop_value is returned as a violation witness.  A minimal vector
    with q <= stop_value is reachable through such a chain with all entries
    bounded by its own, so the cap loses no violations within it.
    """
    n = f.n
    adj = f.neighbours()
    simples = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        simples.append(tuple(e))
    frontier = {x for x in simples}
    seen = set(frontier)
    roots = set(frontier)
    isotropic = set()
    qvals = {x: 1 for x in frontier}
    while frontier:
        nxt = set()
        for x in frontier:
            qx = qvals[x]
            for i in range(n):
                if x[i] >= entry_bound:
                    continue
                y = x[:i] + (x[i] + 1,) + x[i + 1:]
                if y in seen:
                    continue
                # q(x + e_i) = q(x) + b(x, e_i) + 1
                b = 2 * x[i] + sum(c * x[j] for j, c in adj[i])
                qy = qx + b + 1
                if qy <= stop_value:
                    return None, None, y
                if qy == 1 or (keep_isotropic and qy == 0):
                    seen.add(y)
                    qvals[y] = qy
                    nxt.add(y)
                    (roots if qy == 1 else isotropic).add(y)
        frontier = nxt
    return roots, isotropic, None


def is_weakly_positive(f: UnitForm,
                       bounds: SearchBounds = DEFAULT_BOUNDS) -> FormVerdict:
    """Decide q(x) > 0 for all nonzero x >= 0.

    PSD forms are decided through the kernel cone.  Otherwise a complete
    search with entries <= 6 applies: a failing unit form restricts to a
    critical one, whose violating vectors stay within that box.
    """
    if is_psd(f):
        null = nonnegative_nullvector(f)
        if null is None:
            return FormVerdict("holds", bound=bounds.root_entry_bound)
        return FormVerdict("fails", witness=tuple(null),
                           bound=bounds.root_entry_bound)
    roots, _, violation = _root_search(f, bounds.root_entry_bound,
                                       keep_isotropic=False, stop_value=0)
    if violation is not None:
        return FormVerdict("fails", witness=violation,
                           bound=bounds.root_entry_bound)
    return FormVerdict("holds", bound=bounds.root_entry_bound)


def positive_roots(f: UnitForm, bounds: SearchBounds = DEFAULT_BOUNDS):
    """All nonzero x >= 0 with q(x) = 1, sorted by (height, lex).

    Complete for weakly positive forms: roots have entries <= 6 and each
    non-simple root is a simple-vector increment of a smaller root.
    """
    verdict = is_weakly_positive(f, bounds)
    if verdict.decision != "holds":
        raise ValueError("positive roots are enumerated only for weakly positive forms")
    roots, _, violation = _root_search(f, bounds.root_entry_bound,
                                       keep_isotropic=False, stop_value=0)
    assert violation is None
    return sorted(roots, key=lambda x: (sum(x), x))


def is_weakly_nonnegative(f: UnitForm, bound: int = DEFAULT_BOUNDS.nonneg_entry_bound
                          ) -> FormVerdict:
    """Decide q(x) >= 0 for all x >= 0: exact via PSD, else bounded refutation.

    The refutation search grows chains through vectors with q in {0, 1}
    (a minimal vector with q < 0 is one simple-vector step above such a
    chain) with entries capped by `bound`; exhaustion is inconclusive.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if is_psd(f):
        return FormVerdict("holds", bound=bound)
    _, _, violation = _root_search(f, bound, keep_isotropic=True, stop_value=-1)
    if violation is not None:
        return FormVerdict("fails", witness=violation, bound=bound)
    return FormVerdict("inconclusive", bound=bound)
