"""Representations of a staircase quiver with exact rational matrices.

Matrices are numpy object arrays of Fractions so zero-dimensional spaces
keep their shapes.  Besides Hom computations and a randomized isomorphism
test over a large prime field, this module computes the inverse
Auslander-Reiten translate at matrix level (through a minimal injective
copresentation), which is what realizes preprojective modules with a
prescribed dimension vector.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .partitions import Partition
from .quiver import (Arrow, Rows, arrow_source, arrow_target, build_quiver,
                     check_shape, entry, Vertex)

PRIMES = (46337, 46327, 46271, 46237)  # int64-safe sampling primes


def fmat(rows, shape=None):
    if shape is None:
        shape = (len(rows), len(rows[0]) if rows else 0)
    a = np.empty(shape, dtype=object)
    a[...] = Fraction(0)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            a[i, j] = Fraction(x)
    return a


def fzeros(r, c):
    a = np.empty((r, c), dtype=object)
    a[...] = Fraction(0)
    return a


def feye(n):
    a = fzeros(n, n)
    for i in range(n):
        a[i, i] = Fraction(1)
    return a


def _is_zero(a) -> bool:
    return all(x == 0 for x in a.flat)


@dataclass
class Representation:
    lam: Partition
    dims: Rows
    mats: dict  # Arrow -> object ndarray, shape (dim target, dim source)

    def dim(self, v: Vertex) -> int:
        return entry(self.dims, v)

    @property
    def total_dim(self) -> int:
        return sum(x for row in self.dims for x in row)

    def mat(self, a: Arrow):
        if a in self.mats:
            return self.mats[a]
        return fzeros(self.dim(arrow_target(a)), self.dim(arrow_source(a)))

    def to_json(self) -> dict:
        mats = {}
        for a in sorted(self.mats):
            m = self.mats[a]
            mats[f"{a[0]}:{a[1]},{a[2]}"] = [
                [str(m[i, j]) for j in range(m.shape[1])]
                for i in range(m.shape[0])]
        return {"lambda": list(self.lam.parts),
                "rows": [list(r) for r in self.dims],
                "matrices": mats}


def rep_from_json(obj: dict) -> Representation:
    lam = Partition(tuple(obj["lambda"]))
    dims = check_shape(lam, obj["rows"])
    mats = {}
    for key, rows in obj.get("matrices", {}).items():
        kind, _, coords = key.partition(":")
        i, j = (int(x) for x in coords.split(","))
        a: Arrow = (kind, i, j)
        src, tgt = arrow_source(a), arrow_target(a)
        shape = (entry(dims, tgt), entry(dims, src))
        mats[a] = fmat([[Fraction(x) for x in row] for row in rows], shape=shape)
    return make_representation(lam, dims, mats)


def make_representation(lam: Partition, dims, mats=None) -> Representation:
    """Normalize and shape-check a representation; missing matrices are zero."""
    dims = check_shape(lam, dims)
    q = build_quiver(lam)
    out = {}
    mats = mats or {}
    for a in q.arrows:
        src, tgt = arrow_source(a), arrow_target(a)
        shape = (entry(dims, tgt), entry(dims, src))
        m = mats.get(a)
        if m is None:
            continue
        m = m if isinstance(m, np.ndarray) else fmat(m, shape=shape)
        if m.shape != shape:
            raise ValueError(f"matrix for arrow {a} has shape {m.shape}, "
                             f"expected {shape}")
        if 0 not in shape:
            out[a] = m
    return Representation(lam, dims, out)


def relation_violations(rep: Representation) -> list[Vertex]:
    """Anchors (i, j) of commuting squares that fail as matrix identities."""
    q = build_quiver(rep.lam)
    bad = []
    for (i, j) in q.relations:
        left = rep.mat(("b", i - 1, j)) @ rep.mat(("a", i, j))
        right = rep.mat(("a", i, j - 1)) @ rep.mat(("b", i, j))
        if not _is_zero(left - right):
            bad.append((i, j))
    return bad


def simple_rep(lam: Partition, v: Vertex) -> Representation:
    from .quiver import unit_rows
    return make_representation(lam, unit_rows(lam, v))


def _thin_rep(lam: Partition, member) -> Representation:
    """0/1 representation with identity maps on an arrow-closed support."""
    q = build_quiver(lam)
    dims = tuple(tuple(1 if member((i, j)) else 0
                       for j in range(1, lam.row_length(i) + 1))
                 for i in range(1, lam.length + 1))
    mats = {}
    for a in q.arrows:
        if member(arrow_source(a)) and member(arrow_target(a)):
            mats[a] = feye(1)
    return make_representation(lam, dims, mats)


def projective_rep(lam: Partition, v: Vertex) -> Representation:
    i, j = v
    return _thin_rep(lam, lambda u: u[0] <= i and u[1] <= j)


def injective_rep(lam: Partition, v: Vertex) -> Representation:
    i, j = v
    return _thin_rep(lam, lambda u: u[0] >= i and u[1] >= j)


def path_matrix(rep: Representation, u: Vertex, v: Vertex):
    """Composite M_u -> M_v along any monotone path (relations make it unique)."""
    if not (u[0] >= v[0] and u[1] >= v[1]):
        raise ValueError(f"no path from {u} to {v}")
    m = feye(rep.dim(u))
    cur = u
    while cur[0] > v[0]:
        m = rep.mat(("a", cur[0], cur[1])) @ m
        cur = (cur[0] - 1, cur[1])
    while cur[1] > v[1]:
        m = rep.mat(("b", cur[0], cur[1])) @ m
        cur = (cur[0], cur[1] - 1)
    return m


def direct_sum(a: Representation, b: Representation) -> Representation:
    if a.lam != b.lam:
        raise ValueError("summands live on different diagrams")
    from .quiver import add_rows
    dims = add_rows(a.dims, b.dims)
    q = build_quiver(a.lam)
    mats = {}
    for ar in q.arrows:
        ma, mb = a.mat(ar), b.mat(ar)
        m = fzeros(ma.shape[0] + mb.shape[0], ma.shape[1] + mb.shape[1])
        m[:ma.shape[0], :ma.shape[1]] = ma
        m[ma.shape[0]:, ma.shape[1]:] = mb
        mats[ar] = m
    return make_representation(a.lam, dims, mats)


def _inverse(g):
    n = g.shape[0]
    if n == 0:
        return g
    aug = [list(g[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    red, pivots = linalg.rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix not invertible")
    return fmat([row[n:] for row in red], shape=(n, n))


def transpose_representation(rep: Representation) -> Representation:
    """Relabel a representation along (i, j) -> (j, i)."""
    from .quiver import transpose_rows
    lamt = rep.lam.transpose()
    dims = transpose_rows(rep.lam, rep.dims)
    mats = {}
    for a, m in rep.mats.items():
        kind, i, j = a
        mats[("b" if kind == "a" else "a", j, i)] = m
    return make_representation(lamt, dims, mats)


def base_change(rep: Representation, rng: random.Random) -> Representation:
    """Conjugate all matrices by random invertible rational matrices."""
    gs = {}
    for v in build_quiver(rep.lam).vertices:
        d = rep.dim(v)
        while True:
            g = fmat([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)],
                     shape=(d, d))
            if d == 0 or linalg.rank([list(r) for r in g]) == d:
                gs[v] = g
                break
    mats = {}
    for a, m in rep.mats.items():
        src, tgt = arrow_source(a), arrow_target(a)
        mats[a] = gs[tgt] @ m @ _inverse(gs[src])
    return make_representation(rep.lam, rep.dims, mats)


# -- Hom spaces ------------------------------------------------------------


def _vertex_offsets(m_dims, n_dims, vertices):
    offsets = {}
    total = 0
    for v in vertices:
        offsets[v] = total
        total += entry(m_dims, v) * entry(n_dims, v)
    return offsets, total


def _hom_rows(m: Representation, n: Representation):
    """Intertwiner equations f_w M_a = N_a f_v, one row per scalar equation."""
    q = build_quiver(m.lam)
    offsets, total = _vertex_offsets(m.dims, n.dims, q.vertices)
    rows = []
    for a in q.arrows:
        v, w = arrow_source(a), arrow_target(a)
        dv, dw = m.dim(v), m.dim(w)
        ev, ew = n.dim(v), n.dim(w)
        if dv == 0 or ew == 0:
            continue
        ma, na = m.mat(a), n.mat(a)
        for r in range(ew):
            for c in range(dv):
                row = [Fraction(0)] * total
                for k in range(dw):
                    if ma[k, c]:
                        row[offsets[w] + r * dw + k] += ma[k, c]
                for k in range(ev):
                    if na[r, k]:
                        row[offsets[v] + k * dv + c] -= na[r, k]
                rows.append(row)
    return rows, total, offsets


def hom_dim(m: Representation, n: Representation) -> int:
    """Dimension of Hom(m, n), by exact rational elimination."""
    if m.lam != n.lam:
        raise ValueError("representations live on different diagrams")
    rows, total, _ = _hom_rows(m, n)
    return total - linalg.rank(rows)


def _frac_mod(x: Fraction, p: int) -> int:
    den = x.denominator % p
    if den == 0:
        raise ZeroDivisionError
    return x.numerator % p * pow(den, p - 2, p) % p


def _hom_system_mod_p(m, n, p):
    q = build_quiver(m.lam)
    offsets, total = _vertex_offsets(m.dims, n.dims, q.vertices)
    rows = []
    for a in q.arrows:
        v, w = arrow_source(a), arrow_target(a)
        dv, dw = m.dim(v), m.dim(w)
        ev, ew = n.dim(v), n.dim(w)
        if dv == 0 or ew == 0:
            continue
        ma, na = m.mat(a), n.mat(a)
        for r in range(ew):
            for c in range(dv):
                row = np.zeros(total, dtype=np.int64)
                for k in range(dw):
                    if ma[k, c]:
                        idx = offsets[w] + r * dw + k
                        row[idx] = (row[idx] + _frac_mod(ma[k, c], p)) % p
                for k in range(ev):
                    if na[r, k]:
                        idx = offsets[v] + k * dv + c
                        row[idx] = (row[idx] - _frac_mod(na[r, k], p)) % p
                rows.append(row)
    sys = np.array(rows, dtype=np.int64) if rows \
        else np.zeros((0, total), dtype=np.int64)
    return sys % p, total, offsets


def _det_mod_p(a: np.ndarray, p: int) -> int:
    m = a.copy() % p
    n = m.shape[0]
    det = 1
    for c in range(n):
        piv = np.nonzero(m[c:, c])[0]
        if piv.size == 0:
            return 0
        pr = c + int(piv[0])
        if pr != c:
            m[[c, pr]] = m[[pr, c]]
            det = -det % p
        det = det * int(m[c, c]) % p
        inv = pow(int(m[c, c]), p - 2, p)
        m[c] = m[c] * inv % p
        nz = np.nonzero(m[c + 1:, c])[0]
        if nz.size:
            idx = nz + c + 1
            m[idx] = (m[idx] - np.outer(m[idx, c], m[c])) % p
    return det


def is_isomorphic(m: Representation, n: Representation, trials: int = 16,
                  seed: int = 0) -> bool:
    """Randomized isomorphism test over a large prime field.

    Necessary Hom-dimension checks run first; then random elements of the
    intertwiner space are sampled and tested for invertibility at every
    vertex.  Errors are one-sided: a True answer carries an explicit
    invertible intertwiner mod p, a False answer may (with probability
    vanishing in `trials`) be a missed isomorphism.
    """
    if m.lam != n.lam:
        raise ValueError("representations live on different diagrams")
    if m.dims != n.dims:
        return False
    if m.total_dim == 0:
        return True
    for p in PRIMES:
        try:
            return _is_isomorphic_mod_p(m, n, trials, seed, p)
        except ZeroDivisionError:
            continue
    raise ArithmeticError("all sampling primes divide a denominator")


def _is_isomorphic_mod_p(m, n, trials, seed, p):
    sys_mn, total, offsets = _hom_system_mod_p(m, n, p)
    h_mn = total - linalg.rank_mod_p(sys_mn, p)
    sys_mm, total_mm, _ = _hom_system_mod_p(m, m, p)
    h_mm = total_mm - linalg.rank_mod_p(sys_mm, p)
    sys_nn, total_nn, _ = _hom_system_mod_p(n, n, p)
    h_nn = total_nn - linalg.rank_mod_p(sys_nn, p)
    if not (h_mm == h_nn == h_mn) or h_mn == 0:
        return False
    basis = linalg.nullspace_mod_p(sys_mn, p)
    q = build_quiver(m.lam)
    blocks = [(offsets[v], m.dim(v)) for v in q.vertices if m.dim(v)]
    rng = random.Random(seed)
    for _ in range(trials):
        vec = np.zeros(total, dtype=np.int64)
        for b in basis:
            vec = (vec + rng.randrange(p) * b) % p
        if all(_det_mod_p(vec[off:off + d * d].reshape(d, d), p) for off, d in blocks):
            return True
    return False


# -- inverse AR translate ---------------------------------------------------


def _socle(rep: Representation) -> dict:
    """Per vertex, a column basis of the largest subspace killed by all arrows."""
    q = build_quiver(rep.lam)
    soc = {}
    for v in q.vertices:
        d = rep.dim(v)
        if d == 0:
            soc[v] = fzeros(0, 0)
            continue
        stacked = []
        for a in q.arrows:
            if arrow_source(a) == v and rep.dim(arrow_target(a)) > 0:
                stacked.extend([list(r) for r in rep.mat(a)])
        if not stacked:
            soc[v] = feye(d)
            continue
        basis = [linalg.primitive_column(col)
                 for col in linalg.nullspace(stacked, cols=d)]
        mat = fzeros(d, len(basis))
        for jj, col in enumerate(basis):
            for ii in range(d):
                mat[ii, jj] = Fraction(col[ii])
        soc[v] = mat
    return soc


class _ThinFamily:
    """Direct sum of thin rectangle modules, one summand per listed anchor."""

    def __init__(self, lam: Partition, anchors: list[Vertex], kind: str):
        # kind "inj": summand anchored at w lives on {u >= w}; "proj": {u <= w}
        self.lam = lam
        self.anchors = anchors
        self.kind = kind
        self.q = build_quiver(lam)

    def supports(self, u: Vertex, w: Vertex) -> bool:
        if self.kind == "inj":
            return u[0] >= w[0] and u[1] >= w[1]
        return u[0] <= w[0] and u[1] <= w[1]

    def coords(self, u: Vertex) -> list[int]:
        return [k for k, w in enumerate(self.anchors) if self.supports(u, w)]

    def dim(self, u: Vertex) -> int:
        return len(self.coords(u))

    def as_representation(self) -> Representation:
        dims = tuple(tuple(self.dim((i, j))
                           for j in range(1, self.lam.row_length(i) + 1))
                     for i in range(1, self.lam.length + 1))
        mats = {}
        for a in self.q.arrows:
            src_c = self.coords(arrow_source(a))
            tgt_c = self.coords(arrow_target(a))
            m = fzeros(len(tgt_c), len(src_c))
            for r, kt in enumerate(tgt_c):
                for c, ks in enumerate(src_c):
                    if kt == ks:
                        m[r, c] = Fraction(1)
            mats[a] = m
        return make_representation(self.lam, dims, mats)


def _socle_embedding(rep: Representation):
    """Embedding of rep into the injective hull I(soc rep).

    Returns (family, per-vertex embedding matrices); the family's summand
    list repeats each anchor once per socle dimension, and the embedding
    row for a summand is a socle-dual functional composed with path maps.
    """
    soc = _socle(rep)
    anchors: list[Vertex] = []
    func_rows = {}  # summand index -> (anchor, row of the dual functional block)
    for v in sorted(soc):
        s = soc[v]
        if s.shape[1] == 0:
            continue
        xi = fmat(linalg.left_inverse([list(r) for r in s]),
                  shape=(s.shape[1], s.shape[0]))
        for t in range(s.shape[1]):
            func_rows[len(anchors)] = (v, xi[t:t + 1, :])
            anchors.append(v)
    fam = _ThinFamily(rep.lam, anchors, "inj")
    embed = {}
    for u in fam.q.vertices:
        du = rep.dim(u)
        coords = fam.coords(u)
        e = fzeros(len(coords), du)
        for pos, k in enumerate(coords):
            w, xi_row = func_rows[k]
            e[pos:pos + 1, :] = xi_row @ path_matrix(rep, u, w)
        embed[u] = e
        if linalg.rank([list(r) for r in e]) != du:
            raise ArithmeticError("socle embedding failed to be injective")
    return fam, embed


def _cokernel(ambient: Representation, images: dict):
    """Quotient of `ambient` by the column span of per-vertex image matrices.

    The image family must be arrow-stable.  Returns the quotient and the
    per-vertex projection matrices.
    """
    q = build_quiver(ambient.lam)
    proj = {}
    sect = {}
    dims_rows = []
    for i in range(1, ambient.lam.length + 1):
        row = []
        for j in range(1, ambient.lam.row_length(i) + 1):
            v = (i, j)
            d = ambient.dim(v)
            img = images.get(v, fzeros(d, 0))
            # only the column span matters: rescale columns to primitive
            # integer vectors to keep later inverses small
            prim = [linalg.primitive_column([img[r, c] for r in range(d)])
                    for c in range(img.shape[1])]
            img = fzeros(d, len(prim))
            for c, col in enumerate(prim):
                for r in range(d):
                    img[r, c] = Fraction(col[r])
            k = img.shape[1]
            # one elimination of [img | I] finds both an image column basis
            # and the complementary unit vectors
            aug = [[img[r, c] for c in range(k)]
                   + [Fraction(int(r == c)) for c in range(d)] for r in range(d)]
            _, pivots = linalg.rref(aug) if aug else ([], [])
            img_pivots = [p for p in pivots if p < k]
            chosen = [p - k for p in pivots if p >= k]
            r_img = len(img_pivots)
            current = [[img[r, c] for c in img_pivots]
                       + [Fraction(int(r == u)) for u in chosen] for r in range(d)]
            t_mat = fmat(current, shape=(d, d))
            t_inv = _inverse(t_mat)
            proj[v] = t_inv[r_img:, :]
            s = fzeros(d, d - r_img)
            for c, unit in enumerate(chosen):
                s[unit, c] = Fraction(1)
            sect[v] = s
            row.append(d - r_img)
        dims_rows.append(tuple(row))
    mats = {}
    for a in q.arrows:
        src, tgt = arrow_source(a), arrow_target(a)
        mats[a] = proj[tgt] @ ambient.mat(a) @ sect[src]
    quotient = make_representation(ambient.lam, tuple(dims_rows), mats)
    return quotient, proj


def tau_minus(rep: Representation) -> Representation:
    """Inverse AR translate via a minimal injective copresentation.

    The copresentation map between sums of thin injectives is carried over
    to the corresponding sums of thin projectives summand by summand (each
    Hom space between thin rectangles is at most one-dimensional), and the
    translate is the cokernel of the carried map.
    """
    lam = rep.lam
    q = build_quiver(lam)
    fam0, embed0 = _socle_embedding(rep)
    i0 = fam0.as_representation()
    coker, proj = _cokernel(i0, embed0)
    fam1, embed1 = _socle_embedding(coker)
    # block scalars of g = embed1 . proj : I0 -> I1, read off at each anchor
    scal = {}
    for mi, w in enumerate(fam1.anchors):
        g_w = embed1[w] @ proj[w]
        row_pos = fam1.coords(w).index(mi)
        cols = fam0.coords(w)
        for col_pos, ki in enumerate(cols):
            val = g_w[row_pos, col_pos]
            if val:
                vk = fam0.anchors[ki]
                if not (vk[0] <= w[0] and vk[1] <= w[1]):
                    raise ArithmeticError("copresentation block outside Hom support")
                scal[(mi, ki)] = val
    p0 = _ThinFamily(lam, fam0.anchors, "proj")
    p1 = _ThinFamily(lam, fam1.anchors, "proj")
    p1_rep = p1.as_representation()
    images = {}
    for u in q.vertices:
        rows_idx = p1.coords(u)
        cols_idx = p0.coords(u)
        h = fzeros(len(rows_idx), len(cols_idx))
        for rpos, mi in enumerate(rows_idx):
            for cpos, ki in enumerate(cols_idx):
                h[rpos, cpos] = scal.get((mi, ki), Fraction(0))
        images[u] = h
    result, _ = _cokernel(p1_rep, images)
    return result


def realize_preprojective(lam: Partition, dims: Rows,
                          slice_limit: int | None = None) -> Representation:
    """Concrete preprojective module with the given dimension vector.

    Locates the vector in the knitted component, then applies the inverse
    translate to the orbit's projective the recorded number of times.
    """
    from .arquiver import knit

    dims = check_shape(lam, dims)
    ar = knit(lam, slice_limit)
    match = next((v for v in ar.vertices if v.dim == dims), None)
    if match is None:
        raise ValueError(f"dimension vector not found in the knitted component of {lam}")
    seed_vertex = next(v for v in ar.vertices
                       if v.tau_orbit == match.tau_orbit and v.depth == 0)
    rep = projective_rep(lam, seed_vertex.projective)
    for _ in range(match.depth):
        rep = tau_minus(rep)
    if rep.dims != dims:
        raise ArithmeticError(
            f"translate chain produced {rep.dims}, expected {dims}")
    return rep
