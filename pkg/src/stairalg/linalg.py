"""Small exact linear algebra kit over the rationals and over Z.

Matrices are lists of lists of Fractions/ints (row major).  Everything here
is deterministic and exact; the only floating-free shortcut is the mod-p
elimination used by randomized isomorphism sampling, which works in
F_p with p = 46337 (p^2 fits comfortably in int64).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

SAMPLING_PRIME = 46337  # largest prime with p^2 < 2^31; int64-safe products


def rref(a):
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    m = [[Fraction(x) for x in row] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    if not a or not a[0]:
        return 0
    return len(rref(a)[1])


def nullspace(a, cols=None):
    """Basis of the right kernel over Q, as a list of column vectors."""
    if not a:
        return [[Fraction(int(i == j)) for i in range(cols)] for j in range(cols)] \
            if cols else []
    n = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution x of a x = b, or None if inconsistent."""
    if not a:
        return [] if all(x == 0 for x in b) else None
    n = len(a[0])
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = red[r][n]
    return x


def left_inverse(a):
    """Matrix L with L a = I, for a with full column rank."""
    m = len(a)
    n = len(a[0]) if a else 0
    aug = [list(row) + [Fraction(int(i == j)) for j in range(m)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if [p for p in pivots if p < n] != list(range(n)):
        raise ValueError("matrix does not have full column rank")
    return [row[n:] for row in red[:n]]


def primitive_column(vec):
    """Scale a rational vector to a primitive integer vector (first sign kept)."""
    den = 1
    for x in vec:
        f = Fraction(x)
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def is_psd(g) -> bool:
    """Exact positive-semidefiniteness of a symmetric rational matrix.

    Symmetric Gaussian elimination: a zero diagonal pivot must have a zero
    row in the remaining block, a negative one refutes PSD.
    """
    n = len(g)
    m = [[Fraction(x) for x in row] for row in g]
    for k in range(n):
        d = m[k][k]
        if d < 0:
            return False
        if d == 0:
            if any(m[k][j] != 0 for j in range(k, n)):
                return False
            continue
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / d
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return True


# -- integer lattices ----------------------------------------------------


def _primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g > 1:
        vec = [x // g for x in vec]
    return vec


def integer_kernel(a):
    """Basis of {x in Z^n : a x = 0} for an integer matrix, via column HNF.

    Column operations by unimodular U give a U = [H | 0]; the columns of U
    under the zero block form a basis of the saturated kernel lattice.
    """
    if not a:
        raise ValueError("need explicit column count for empty matrix")
    rows = len(a)
    n = len(a[0])
    w = [[int(x) for x in row] for row in a]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_cols(c1, c2):
        for r in range(rows):
            w[r][c1], w[r][c2] = w[r][c2], w[r][c1]
        for r in range(n):
            u[r][c1], u[r][c2] = u[r][c2], u[r][c1]

    def addmul_col(dst, src, f):
        for r in range(rows):
            w[r][dst] += f * w[r][src]
        for r in range(n):
            u[r][dst] += f * u[r][src]

    col = 0
    for row in range(rows):
        if col >= n:
            break
        # euclidean reduction across columns col..n-1 on this row
        while True:
            nz = [c for c in range(col, n) if w[row][c] != 0]
            if not nz:
                break
            cmin = min(nz, key=lambda c: abs(w[row][c]))
            swap_cols(col, cmin)
            done = True
            for c in range(col + 1, n):
                if w[row][c] != 0:
                    addmul_col(c, col, -(w[row][c] // w[row][col]))
                    if w[row][c] != 0:
                        done = False
            if done:
                break
        if w[row][col] != 0:
            col += 1
    kernel_cols = [c for c in range(col, n)]
    basis = [[u[r][c] for r in range(n)] for c in kernel_cols]
    return [b for b in basis if any(b)]


def lattice_hnf(basis):
    """Canonical (row-style HNF) basis of the lattice spanned by integer rows."""
    if not basis:
        return []
    work = [list(map(int, b)) for b in basis]
    n = len(work[0])
    out = []
    col = 0
    while work and col < n:
        nz = [r for r in work if r[col] != 0]
        if not nz:
            col += 1
            continue
        while True:
            nz = [r for r in work if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            for r in nz[1:]:
                f = r[col] // piv[col]
                for j in range(n):
                    r[j] -= f * piv[j]
            work = [r for r in work if any(r)]
        nz = [r for r in work if r[col] != 0]
        if nz:
            piv = nz[0]
            if piv[col] < 0:
                piv = [-x for x in piv]
            out.append(piv)
            work = [r for r in work if r is not nz[0] and any(r)]
        col += 1
    # reduce entries above each pivot for a unique normal form
    for idx in range(len(out) - 1, -1, -1):
        pc = next(c for c, x in enumerate(out[idx]) if x != 0)
        for above in out[:idx]:
            f = above[pc] // out[idx][pc]
            if f:
                for j in range(len(above)):
                    above[j] -= f * out[idx][j]
    return out


def in_lattice(vec, hnf_basis) -> bool:
    """Membership of an integer vector in a lattice given by an HNF row basis."""
    v = list(map(int, vec))
    for row in hnf_basis:
        pc = next(c for c, x in enumerate(row) if x != 0)
        if v[pc] % row[pc] != 0:
            return False
        f = v[pc] // row[pc]
        for j in range(len(v)):
            v[j] -= f * row[j]
    return not any(v)


# -- mod-p elimination (numpy) -------------------------------------------


def _to_mod_p(rows, p):
    out = np.zeros((len(rows), len(rows[0]) if rows else 0), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            f = Fraction(x)
            den = f.denominator % p
            if den == 0:
                raise ZeroDivisionError("denominator vanishes mod p")
            out[i, j] = (f.numerator % p) * pow(den, p - 2, p) % p
    return out


def rank_mod_p(a: np.ndarray, p: int) -> int:
    m = a % p
    rows, cols = m.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = np.nonzero(m[r:, c])[0]
        if piv.size == 0:
            continue
        pr = r + int(piv[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = m[r] * inv % p
        nz = np.nonzero(m[r + 1:, c])[0]
        if nz.size:
            idx = nz + r + 1
            m[idx] = (m[idx] - np.outer(m[idx, c], m[r])) % p
        r += 1
    return r


def nullspace_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    """Kernel basis mod p, one basis vector per row of the returned array."""
    m = a % p
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = np.nonzero(m[r:, c])[0]
        if piv.size == 0:
            continue
        pr = r + int(piv[0])
        if pr != r:
            m[[r, pr]] = m[[pr, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = m[r] * inv % p
        nz = np.nonzero(m[:, c])[0]
        nz = nz[nz != r]
        if nz.size:
            m[nz] = (m[nz] - np.outer(m[nz, c], m[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for rr, pc in enumerate(pivots):
            basis[k, pc] = (-int(m[rr, fc])) % p
    return basis
