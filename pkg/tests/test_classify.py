import pytest

from stairalg.classify import (RepType, bundled_witnesses, classify,
                               orbit_type, tensor_type, verify_classification,
                               wildness_witness)
from stairalg.partitions import Partition, parse_partition, partitions_of, transpose
from stairalg.quadform import eval_form, form_of


@pytest.mark.parametrize("text,expected", [
    ("3,6", RepType.TAME_CONCEALED),
    ("2,3,4", RepType.WILD),
    ("1,1,1,1,9", RepType.FINITE),
    ("5,5", RepType.TAME_NOT_CONCEALED),
    ("1,2,6", RepType.TAME_CONCEALED),
    ("2,17", RepType.FINITE),
    ("1^5,2^2", RepType.FINITE),
    ("2,2,4", RepType.FINITE),
    ("1,3,4", RepType.TAME_CONCEALED),
    ("2,3,3", RepType.TAME_NOT_CONCEALED),
    ("4,7", RepType.WILD),
])
def test_classify_examples(text, expected):
    assert classify(parse_partition(text)) is expected


def test_exactly_four_nonfinite_at_8():
    non_finite = {lam.parts for lam in partitions_of(8)
                  if classify(lam) is not RepType.FINITE}
    assert non_finite == {(1, 3, 4), (2, 3, 3), (1, 2, 2, 3), (1, 1, 2, 4)}
    assert len(list(partitions_of(8))) == 22


def test_tame_lists_exact():
    tame_c = set()
    tame_nc = set()
    for n in range(1, 13):
        for lam in partitions_of(n):
            t = classify(lam)
            if t is RepType.TAME_CONCEALED:
                tame_c.add(lam.parts)
            elif t is RepType.TAME_NOT_CONCEALED:
                tame_nc.add(lam.parts)
    assert tame_c == {
        (3, 6), (1, 2, 6), (1, 3, 4), (2, 2, 5), (1, 1, 2, 4), (1, 2, 2, 3),
        (1, 1, 1, 3, 3), (1, 1, 1, 2, 2, 2), (1, 1, 1, 1, 2, 3)}
    assert tame_nc == {
        (4, 5), (5, 5), (1, 4, 4), (2, 3, 3), (3, 3, 3), (2, 2, 2, 3),
        (1, 2, 2, 2, 2), (2, 2, 2, 2, 2)}


def test_classify_transpose_invariant_up_to_12():
    for n in range(1, 13):
        for lam in partitions_of(n):
            assert classify(lam) is classify(transpose(lam))


def test_classify_monotone_along_subdiagrams():
    from stairalg.partitions import is_subdiagram
    order = {RepType.FINITE: 0, RepType.TAME_CONCEALED: 1,
             RepType.TAME_NOT_CONCEALED: 1, RepType.WILD: 2}
    universe = [lam for n in range(1, 11) for lam in partitions_of(n)]
    for sub in universe:
        for sup in universe:
            if is_subdiagram(sub, sup):
                assert order[classify(sub)] <= order[classify(sup)]


@pytest.mark.parametrize("text,expected", [
    ("1,2,3", "E6"), ("5,5", "E8~"), ("2,6", "D8"), ("1,1,1,1,9", "A13"),
    ("2,2", "D4"), ("3,3", "E6"), ("4,4", "E8"), ("2,3,3", "E7~"),
    ("2,2,2,2,2", "E8~"), ("3,3,4", "wild"),
])
def test_orbit_type_examples(text, expected):
    assert str(orbit_type(parse_partition(text))) == expected


def test_orbit_type_correlates_with_rep_type():
    for n in range(1, 13):
        for lam in partitions_of(n):
            ot = orbit_type(lam)
            t = classify(lam)
            assert ot.is_dynkin == (t is RepType.FINITE)
            assert ot.is_euclidean == t.is_tame
            assert (ot.family == "wild") == (t is RepType.WILD)


def test_orbit_type_transpose_invariant():
    for n in range(1, 13):
        for lam in partitions_of(n):
            a, b = orbit_type(lam), orbit_type(transpose(lam))
            assert (a.family, a.rank) == (b.family, b.rank)


@pytest.mark.parametrize("m,l,expected", [
    (2, 3, RepType.FINITE), (3, 3, RepType.TAME_NOT_CONCEALED),
    (4, 3, RepType.WILD), (1, 7, RepType.FINITE), (7, 1, RepType.FINITE),
    (2, 2, RepType.FINITE), (4, 2, RepType.FINITE), (2, 4, RepType.FINITE),
    (2, 5, RepType.TAME_NOT_CONCEALED), (5, 2, RepType.TAME_NOT_CONCEALED),
    (6, 2, RepType.WILD),
])
def test_tensor_type(m, l, expected):
    assert tensor_type(m, l) is expected


def test_tensor_type_validates():
    with pytest.raises(ValueError):
        tensor_type(0, 3)


def test_bundled_witnesses_all_evaluate_to_minus_one():
    table = bundled_witnesses()
    # 8 shipped diagrams plus transposes; (1,1,2,4)... none self-transpose here
    assert len(table) == 16
    for parts, rows in table.items():
        lam = Partition(parts)
        assert eval_form(form_of(lam), lam, rows) == -1
        assert all(x >= 0 for row in rows for x in row)


@pytest.mark.parametrize("text", ["3,7", "2,2,6", "1,1,2,5", "2,3,4"])
def test_wildness_witness_bundled(text):
    lam = parse_partition(text)
    rows = wildness_witness(lam)
    assert eval_form(form_of(lam), lam, rows) == -1


def test_wildness_witness_frozen_rows():
    assert wildness_witness(Partition((3, 7))) == \
        ((2, 6, 8, 6, 4, 2, 1), (4, 6, 4))
    assert wildness_witness(Partition((2, 2, 6))) == \
        ((4, 8, 6, 4, 2, 1), (6, 6), (4, 2))
    assert wildness_witness(Partition((1, 1, 2, 5))) == \
        ((4, 6, 4, 2, 1), (6, 4), (4,), (2,))


def test_wildness_witness_zero_extension():
    lam = Partition((4, 7))
    rows = wildness_witness(lam)
    assert eval_form(form_of(lam), lam, rows) == -1
    assert sum(1 for r in rows for x in r if x) <= 10  # extension keeps support


def test_wildness_witness_covers_all_wild_up_to_11():
    for n in range(9, 12):
        for lam in partitions_of(n):
            if classify(lam) is RepType.WILD:
                rows = wildness_witness(lam)
                assert eval_form(form_of(lam), lam, rows) == -1


def test_wildness_witness_rejects_non_wild():
    with pytest.raises(ValueError):
        wildness_witness(Partition((3, 6)))


def test_verify_classification_examples():
    report = verify_classification(Partition((1, 3, 4)))
    assert report.claimed is RepType.TAME_CONCEALED
    assert report.consistent
    names = [c.criterion for c in report.checks]
    assert "psd" in names and "not-weakly-positive" in names

    report = verify_classification(Partition((2, 2, 4)))
    assert report.claimed is RepType.FINITE and report.consistent

    report = verify_classification(Partition((4, 6)))
    assert report.claimed is RepType.WILD and report.consistent
    cert = next(c for c in report.checks if c.criterion == "wildness-certificate")
    assert cert.certificate["q"] == -1


def test_verify_classification_budget():
    report = verify_classification(Partition((20, 20)), max_size=10)
    assert report.inconclusive
    assert report.consistent


def test_report_json_shape():
    report = verify_classification(Partition((2, 2)))
    obj = report.to_json()
    assert obj["lambda"] == [2, 2]
    assert obj["claimed"] == "finite"
    assert isinstance(obj["checks"], list) and obj["consistent"] is True
