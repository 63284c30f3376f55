import pytest
from hypothesis import given
from hypothesis import strategies as st

from stairalg.partitions import (Partition, PartitionError, format_partition,
                                 is_subdiagram, measures, parse_partition,
                                 partitions_of, subdiagram_offsets, transpose)

small_partitions = st.lists(st.integers(1, 6), min_size=1, max_size=6).map(
    lambda parts: Partition(tuple(sorted(parts))))


def test_parse_potency_notation():
    assert parse_partition("1^2,2^3,6,8^2").parts == (1, 1, 2, 2, 2, 6, 8, 8)


def test_parse_single_part():
    assert parse_partition("5").parts == (5,)


def test_parse_sorts_canonically():
    assert parse_partition("3,1,2").parts == (1, 2, 3)


def test_parse_ignores_whitespace():
    assert parse_partition(" 1 ^ 2 , 3 ").parts == (1, 1, 3)


@pytest.mark.parametrize("bad", ["", "0", "2^0", "-3", "a", "1,,2", "2^", "^2"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(PartitionError):
        parse_partition(bad)


def test_parse_error_names_token():
    with pytest.raises(PartitionError, match="x7"):
        parse_partition("1,x7,3")


def test_transpose_values():
    assert transpose(Partition((1, 1, 3, 4))).parts == (1, 2, 2, 4)
    assert transpose(Partition((5,))).parts == (1, 1, 1, 1, 1)
    assert transpose(Partition((1, 1, 2, 3))).parts == (1, 2, 4)


def test_measures():
    assert measures(parse_partition("1^2,2^3,6,8^2")) == (30, 8, 4)
    assert measures(Partition((5,))) == (5, 1, 1)
    assert measures(Partition((3, 3, 3))) == (9, 3, 1)


def test_subdiagram_examples():
    assert is_subdiagram(Partition((3, 6)), Partition((4, 6)))
    assert not is_subdiagram(Partition((2, 2)), Partition((1, 4)))
    lam = Partition((2, 3))
    assert is_subdiagram(lam, lam)


def test_subdiagram_offsets_translations():
    # a 2-box column fits into the square at two horizontal positions
    assert subdiagram_offsets(Partition((1, 1)), Partition((2, 2))) == [(0, 0), (0, 1)]


def test_row_lengths_bottom_up():
    lam = Partition((1, 1, 2, 3))
    assert [lam.row_length(i) for i in range(1, 5)] == [3, 2, 1, 1]
    assert (4, 1) in {tuple(b) for b in lam.boxes()}
    assert (1, 3) in {tuple(b) for b in lam.boxes()}


def test_partitions_of_counts():
    # partition numbers p(1..10)
    expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert [len(partitions_of(n)) for n in range(1, 11)] == expected


@given(small_partitions)
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam


@given(small_partitions)
def test_transpose_preserves_size(lam):
    assert transpose(lam).size == lam.size


@given(small_partitions)
def test_format_parse_roundtrip(lam):
    assert parse_partition(format_partition(lam)) == lam


def test_subdiagram_partial_order_up_to_10():
    import numpy as np

    universe = [lam for m in range(1, 11) for lam in partitions_of(m)]
    k = len(universe)
    rel = np.zeros((k, k), dtype=bool)
    for a in range(k):
        for b in range(k):
            rel[a, b] = is_subdiagram(universe[a], universe[b])
    assert rel.diagonal().all()  # reflexive
    antisym = rel & rel.T
    assert (antisym == np.eye(k, dtype=bool)).all()  # antisymmetric
    closure = (rel.astype(int) @ rel.astype(int)) > 0
    assert not (closure & ~rel).any()  # transitive
