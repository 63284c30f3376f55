"""Representation-type and orbit-type classification of staircase algebras.

`classify` is the closed-form answer (a finite table plus three infinite
families); `verify_classification` re-derives the claim through the Tits
form, so the two routes check each other.  Wildness claims always come
with an explicit certificate vector of form value -1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Optional

from . import quadform
from .partitions import Partition, is_subdiagram, subdiagram_offsets
from .quiver import (Rows, check_shape, extend_by_zeros, transpose_rows)


class RepType(Enum):
    FINITE = "finite"
    TAME_CONCEALED = "tame-concealed"
    TAME_NOT_CONCEALED = "tame-not-concealed"
    WILD = "wild"

    @property
    def is_tame(self) -> bool:
        return self in (RepType.TAME_CONCEALED, RepType.TAME_NOT_CONCEALED)


@dataclass(frozen=True)
class OrbitType:
    family: str  # "A" | "D" | "E6" | "E7" | "E8" | "E7~" | "E8~" | "wild"
    rank: Optional[int] = None

    def __str__(self) -> str:
        if self.family in ("A", "D"):
            return f"{self.family}{self.rank}"
        return self.family

    @property
    def is_dynkin(self) -> bool:
        return self.family in ("A", "D", "E6", "E7", "E8")

    @property
    def is_euclidean(self) -> bool:
        return self.family in ("E6~", "E7~", "E8~")


WILD_ORBIT = OrbitType("wild")


# the two sporadic tame lists; everything is stored as ascending part tuples
TAME_CONCEALED_SET = {
    (3, 6), (1, 2, 6), (1, 3, 4), (2, 2, 5), (1, 1, 2, 4), (1, 2, 2, 3),
    (1, 1, 1, 3, 3), (1, 1, 1, 2, 2, 2), (1, 1, 1, 1, 2, 3),
}
TAME_NOT_CONCEALED_SET = {
    (4, 5), (5, 5), (1, 4, 4), (2, 3, 3), (3, 3, 3), (2, 2, 2, 3),
    (1, 2, 2, 2, 2), (2, 2, 2, 2, 2),
}
FINITE_EXCEPTIONS_AT_8 = {(1, 3, 4), (2, 3, 3), (1, 2, 2, 3), (1, 1, 2, 4)}

_E6 = {(1, 2, 3), (2, 2, 2), (3, 3)}
_E7 = {(1, 1, 2, 3), (1, 2, 4), (1, 2, 2, 2), (3, 4), (1, 3, 3), (2, 2, 3)}
_E8 = {(1, 1, 1, 2, 3), (1, 2, 5), (1, 1, 2, 2, 2), (3, 5), (1, 1, 3, 3),
       (2, 2, 4), (2, 2, 2, 2), (4, 4)}
_E7T = {(1, 3, 4), (1, 2, 2, 3), (2, 3, 3), (1, 1, 2, 4), (3, 3, 3),
        (1, 4, 4), (2, 2, 2, 3)}
# closed under transposition: (2^5) pairs with (5^2)
_E8T = {(3, 6), (4, 5), (1, 2, 6), (2, 2, 5), (1, 1, 1, 3, 3),
        (1, 2, 2, 2, 2), (1, 1, 1, 1, 2, 3), (1, 1, 1, 2, 2, 2),
        (5, 5), (2, 2, 2, 2, 2)}


def _at_most_one_big_part(parts) -> bool:
    return sum(1 for p in parts if p > 1) <= 1


def _two_twos_rest_ones(parts) -> bool:
    return parts[-1] == 2 and sum(1 for p in parts if p == 2) == 2 \
        and all(p in (1, 2) for p in parts)


def classify(lam: Partition) -> RepType:
    """Representation type of the staircase algebra of lam."""
    t = lam.parts
    if t in TAME_CONCEALED_SET:
        return RepType.TAME_CONCEALED
    if t in TAME_NOT_CONCEALED_SET:
        return RepType.TAME_NOT_CONCEALED
    if _at_most_one_big_part(t):
        return RepType.FINITE
    if len(t) == 2 and t[0] == 2:
        return RepType.FINITE
    if _two_twos_rest_ones(t):
        return RepType.FINITE
    if lam.size <= 8 and t not in FINITE_EXCEPTIONS_AT_8:
        return RepType.FINITE
    return RepType.WILD


def orbit_type(lam: Partition) -> OrbitType:
    """Type of the orbit quiver of the preprojective component (closed form)."""
    t = lam.parts
    n = lam.size
    if _at_most_one_big_part(t):
        return OrbitType("A", n)
    if (len(t) == 2 and t[0] == 2) or _two_twos_rest_ones(t):
        return OrbitType("D", n)
    for fam, table in (("E6", _E6), ("E7", _E7), ("E8", _E8),
                       ("E7~", _E7T), ("E8~", _E8T)):
        if t in table:
            return OrbitType(fam)
    return WILD_ORBIT


def tensor_type(m: int, l: int) -> RepType:
    """Representation type of the grid with l rows of length m."""
    if m < 1 or l < 1:
        raise ValueError("tensor factors need m, l >= 1")
    return classify(Partition((m,) * l))


# -- bundled wildness certificates ----------------------------------------


def _load_data() -> dict:
    path = resources.files("stairalg").joinpath("data/witnesses.json")
    with path.open() as fh:
        return json.load(fh)


_DATA = None


def bundled_data() -> dict:
    global _DATA
    if _DATA is None:
        _DATA = _load_data()
    return _DATA


def bundled_witnesses() -> dict[tuple, Rows]:
    """Certificate vectors with q = -1, keyed by partition parts; includes transposes."""
    out: dict[tuple, Rows] = {}
    for entry in bundled_data()["wild_witnesses"]:
        lam = Partition(tuple(entry["lambda"]))
        rows = check_shape(lam, entry["rows"])
        out.setdefault(lam.parts, rows)
        lamt = lam.transpose()
        out.setdefault(lamt.parts, transpose_rows(lam, rows))
    return out


def wildness_witness(lam: Partition) -> Rows:
    """Non-negative vector with q(x) = -1 certifying wildness.

    Tries bundled certificates, then zero-extensions of bundled ones along
    diagram embeddings (translations allowed), then a bounded search.
    """
    if classify(lam) is not RepType.WILD:
        raise ValueError(f"{lam} is not of wild type")
    table = bundled_witnesses()
    if lam.parts in table:
        return table[lam.parts]
    form = quadform.form_of(lam)
    for mu_parts in sorted(table):
        mu = Partition(mu_parts)
        if not is_subdiagram(mu, lam):
            continue
        rows = extend_by_zeros(table[mu_parts], mu, lam)
        if quadform.eval_form(form, lam, rows) == -1:
            return rows
    for mu_parts in sorted(table):
        mu = Partition(mu_parts)
        for offset in subdiagram_offsets(mu, lam):
            rows = extend_by_zeros(table[mu_parts], mu, lam, offset)
            if quadform.eval_form(form, lam, rows) == -1:
                return rows
    verdict = quadform.is_weakly_nonnegative(form)
    if verdict.decision == "fails":
        return quadform.unflatten(lam, verdict.witness)
    raise ValueError(f"no wildness certificate found for {lam}")


# -- independent verification ---------------------------------------------


@dataclass(frozen=True)
class Check:
    criterion: str
    verdict: str  # "pass" | "fail" | "inconclusive"
    certificate: object = None


@dataclass(frozen=True)
class ClassificationReport:
    lam: Partition
    claimed: RepType
    checks: tuple[Check, ...] = field(default_factory=tuple)
    consistent: bool = True

    @property
    def inconclusive(self) -> bool:
        return any(c.verdict == "inconclusive" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "lambda": list(self.lam.parts),
            "claimed": self.claimed.value,
            "checks": [{"criterion": c.criterion, "verdict": c.verdict,
                        "certificate": c.certificate} for c in self.checks],
            "consistent": self.consistent,
        }


def verify_classification(lam: Partition, max_size: int = 16) -> ClassificationReport:
    """Re-check the claimed type through the quadratic form.

    Finite must be weakly positive (and conversely); tame must be PSD with
    isotropic corank at most 1 and a radical of rank 1 or 2; wild must admit
    a certificate vector with q = -1.
    """
    claimed = classify(lam)
    if lam.size > max_size:
        return ClassificationReport(
            lam, claimed, (Check("compute-budget", "inconclusive",
                                 {"max_size": max_size}),), True)
    form = quadform.form_of(lam)
    checks: list[Check] = []

    def record(name, ok, certificate=None):
        checks.append(Check(name, "pass" if ok else "fail", certificate))

    wpos = quadform.is_weakly_positive(form)
    if claimed is RepType.FINITE:
        record("weakly-positive", wpos.decision == "holds",
               wpos.to_json(form, lam))
    else:
        record("not-weakly-positive", wpos.decision == "fails",
               wpos.to_json(form, lam))
        if claimed.is_tame:
            psd = quadform.is_psd(form)
            record("psd", psd)
            if psd:
                wnn = quadform.is_weakly_nonnegative(form)
                record("weakly-nonnegative", wnn.decision == "holds")
                record("isotropic-corank<=1", quadform.corank0(form) <= 1)
                record("radical-rank-1-or-2",
                       quadform.radical_rank(form) in (1, 2))
        else:
            witness = wildness_witness(lam)
            value = quadform.eval_form(form, lam, witness)
            record("wildness-certificate", value == -1,
                   {"rows": [list(r) for r in witness], "q": value})

    consistent = all(c.verdict == "pass" for c in checks)
    return ClassificationReport(lam, claimed, tuple(checks), consistent)
