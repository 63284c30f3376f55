import random
from fractions import Fraction

import pytest

from stairalg.partitions import Partition
from stairalg.quiver import build_quiver
from stairalg.reps import (base_change, direct_sum, hom_dim, injective_rep,
                           is_isomorphic, make_representation, path_matrix,
                           projective_rep, realize_preprojective,
                           relation_violations, rep_from_json, simple_rep,
                           tau_minus, transpose_representation)

SQUARE = Partition((2, 2))


def random_square_rep(rng, max_dim=2):
    """Random representation of the commutative square, exact by construction."""
    d11, d12, d21, d22 = (rng.randint(0, max_dim) for _ in range(4))
    dims = ((d11, d12), (d21, d22))
    a21 = [[Fraction(rng.randint(-2, 2)) for _ in range(d21)] for _ in range(d11)]
    b12 = [[Fraction(rng.randint(-2, 2)) for _ in range(d12)] for _ in range(d11)]
    a22 = [[Fraction(rng.randint(-2, 2)) for _ in range(d22)] for _ in range(d12)]
    # solve the single relation b(1,2) a(2,2) = a(2,1) b(2,2) for b(2,2):
    # easiest exact choice: make both sides zero by zeroing b(2,2) and a(2,2)
    # half the time; otherwise keep a(2,2) and zero the left factor path
    if rng.random() < 0.5:
        a22 = [[Fraction(0)] * d22 for _ in range(d12)]
    else:
        a21 = [[Fraction(0)] * d21 for _ in range(d11)]
        b12 = [[Fraction(0)] * d12 for _ in range(d11)]
    b22 = [[Fraction(rng.randint(-2, 2)) for _ in range(d22)] for _ in range(d21)]
    if any(any(r) for r in a21) or any(any(r) for r in b12):
        b22 = [[Fraction(0)] * d22 for _ in range(d21)]
    mats = {("a", 2, 1): a21, ("b", 1, 2): b12, ("a", 2, 2): a22,
            ("b", 2, 2): b22}
    rep = make_representation(SQUARE, dims, mats)
    assert relation_violations(rep) == []
    return rep


def test_simple_projective_injective_shapes():
    lam = Partition((2, 2))
    s = simple_rep(lam, (1, 2))
    assert s.dims == ((0, 1), (0, 0))
    p = projective_rep(lam, (2, 2))
    assert p.dims == ((1, 1), (1, 1))
    assert relation_violations(p) == []
    i = injective_rep(lam, (1, 1))
    assert i.dims == ((1, 1), (1, 1))


def test_path_matrix_commutes():
    lam = Partition((2, 2))
    p = projective_rep(lam, (2, 2))
    m = path_matrix(p, (2, 2), (1, 1))
    assert m.shape == (1, 1) and m[0, 0] == 1


def test_hom_simples():
    lam = Partition((2, 2))
    for v in build_quiver(lam).vertices:
        assert hom_dim(simple_rep(lam, v), simple_rep(lam, v)) == 1
    assert hom_dim(simple_rep(lam, (1, 1)), simple_rep(lam, (2, 2))) == 0


def test_hom_from_projective_counts_dimension():
    rng = random.Random(7)
    lam = SQUARE
    for _ in range(10):
        m = random_square_rep(rng)
        for v in build_quiver(lam).vertices:
            assert hom_dim(projective_rep(lam, v), m) == m.dim(v)


def test_hom_direct_sum_additive():
    rng = random.Random(3)
    a, b = random_square_rep(rng), random_square_rep(rng)
    c = random_square_rep(rng)
    assert hom_dim(direct_sum(a, b), c) == hom_dim(a, c) + hom_dim(b, c)


def test_is_isomorphic_reflexive_and_dims_guard():
    rng = random.Random(11)
    m = random_square_rep(rng)
    assert is_isomorphic(m, m)
    other = simple_rep(SQUARE, (1, 1))
    if m.dims != other.dims:
        assert not is_isomorphic(m, other)


def test_identity_vs_zero_maps_not_isomorphic():
    lam = SQUARE
    dims = ((1, 1), (1, 1))
    ident = projective_rep(lam, (2, 2))
    zero = make_representation(lam, dims)
    assert relation_violations(zero) == []
    assert not is_isomorphic(ident, zero)
    assert hom_dim(ident, ident) == 1
    assert hom_dim(zero, zero) == 4


def test_base_change_preserves_iso_class():
    rng = random.Random(23)
    for trial in range(8):
        m = random_square_rep(rng)
        g = base_change(m, rng)
        assert relation_violations(g) == []
        assert is_isomorphic(m, g, seed=trial)


def test_base_change_invariance_across_diagrams():
    # ~100 trials over assorted diagrams of size <= 6, entries <= 2
    rng = random.Random(77)
    shapes = [Partition(p) for p in
              [(2,), (3,), (1, 2), (2, 2), (1, 1, 2), (2, 3), (1, 2, 3), (3, 3)]]
    trials = 0
    while trials < 100:
        lam = shapes[trials % len(shapes)]
        q = build_quiver(lam)
        verts = list(q.vertices)
        summands = [projective_rep(lam, verts[rng.randrange(len(verts))])
                    for _ in range(rng.randint(1, 2))]
        m = summands[0]
        for s in summands[1:]:
            m = direct_sum(m, s)
        g = base_change(m, rng)
        assert is_isomorphic(m, g, seed=trials)
        trials += 1


def test_transpose_representation_round_trip():
    rng = random.Random(5)
    m = random_square_rep(rng)
    t = transpose_representation(m)
    assert relation_violations(t) == []
    tt = transpose_representation(t)
    assert tt.dims == m.dims
    assert is_isomorphic(tt, m)


def test_json_round_trip():
    rng = random.Random(9)
    m = random_square_rep(rng)
    again = rep_from_json(m.to_json())
    assert again.dims == m.dims
    for a in m.mats:
        assert (again.mat(a) == m.mat(a)).all()


# -- inverse translate -------------------------------------------------------


def test_tau_minus_matches_mesh_dims():
    # follow one orbit of the square: P(1,1) -> rad P(2,2) -> ... closes at I
    lam = SQUARE
    rep = projective_rep(lam, (1, 1))
    expected_chain = [((1, 1), (1, 0)), ((0, 1), (1, 1)), ((0, 0), (0, 1))]
    for want in expected_chain:
        rep = tau_minus(rep)
        assert rep.dims == want
        assert relation_violations(rep) == []


def test_tau_minus_chain_against_knitting():
    from stairalg.arquiver import knit
    lam = Partition((1, 2, 3))
    ar = knit(lam)
    # verify matrix-level translates reproduce every knitted orbit
    for orbit in sorted({v.tau_orbit for v in ar.vertices}):
        chain = sorted((v for v in ar.vertices if v.tau_orbit == orbit),
                       key=lambda v: v.depth)
        rep = projective_rep(lam, chain[0].projective)
        assert rep.dims == chain[0].dim
        for node in chain[1:4]:
            rep = tau_minus(rep)
            assert rep.dims == node.dim
            assert relation_violations(rep) == []


def test_realize_preprojective_brick():
    lam = Partition((2, 3, 3))
    rep = realize_preprojective(lam, ((1, 3, 3), (3, 4, 2), (2, 1)))
    assert rep.dims == ((1, 3, 3), (3, 4, 2), (2, 1))
    assert relation_violations(rep) == []
    assert hom_dim(rep, rep) == 1


def test_realize_preprojective_rejects_unknown_vector():
    with pytest.raises(ValueError):
        realize_preprojective(Partition((2, 2)), ((5, 5), (5, 5)))
