"""Exhaustive small-field censuses checked against frozen totals and the
permutation-filter oracle."""

from fractions import Fraction

import numpy as np
import pytest

from orthokit import (PreconditionError, census, enumerate_orthomorphisms,
                      irregular_fraction, interpolate)
from orthokit.census import (_degree_histogram, _irregular_count,
                             _min_pairwise_distance, _value_tuples)

from conftest import xl_only
from oracles import OracleField, all_orthomorphisms

# Frozen census results.  Totals factor as q times the zero-fixing counts
# because translation by theta(1-t) freely moves theta(0) over the field.
FROZEN = {
    (2, 1): dict(total=0, hist={}, mind=None, irr=0),
    (3, 1): dict(total=3, hist={1: 3}, mind=3, irr=0),
    (2, 2): dict(total=8, hist={1: 8}, mind=3, irr=0),
    (5, 1): dict(total=15, hist={1: 15}, mind=4, irr=0),
    (7, 1): dict(total=133, hist={1: 35, 4: 98}, mind=3, irr=0),
    (2, 3): dict(total=384, hist={1: 48, 4: 336}, mind=4, irr=336),
    (3, 2): dict(total=2241, hist={1: 63, 3: 180, 5: 486, 6: 1512}, mind=3,
                 irr=1512),
}
FROZEN_11 = dict(total=37851, hist={1: 99, 6: 1452, 7: 7260, 8: 29040},
                 mind=3, irr=29040, bound=32315817)
FROZEN_13 = dict(total=1030367,
                 hist={1: 143, 5: 2028, 7: 6422, 9: 67938, 10: 953836},
                 mind=3, irr=965328, bound=1470579470)


def _full_min_distance(tables):
    """Independent minimum pairwise distance: no early exit, whole matrix."""
    a = np.asarray(tables, dtype=np.int16)
    n, q = a.shape
    best = q + 1
    for i in range(n - 1):
        d = (a[i + 1:] != a[i]).sum(axis=1).min()
        best = min(best, int(d))
    return best


@pytest.mark.parametrize("p,r", sorted(FROZEN))
def test_census_frozen_values(field, p, r):
    rep = census(field(p, r))
    want = FROZEN[(p, r)]
    assert rep.total == want["total"]
    assert rep.degree_histogram == want["hist"]
    assert rep.min_pairwise_distance == want["mind"]
    assert rep.irregular_count == want["irr"]
    assert rep.q == p ** r


@pytest.mark.slow
def test_census_gf11(field):
    rep = census(field(11, 1))
    assert rep.total == FROZEN_11["total"]
    assert rep.degree_histogram == FROZEN_11["hist"]
    assert rep.min_pairwise_distance == FROZEN_11["mind"]
    assert rep.irregular_count == FROZEN_11["irr"]
    assert rep.non_irregular_bound == FROZEN_11["bound"]
    assert irregular_fraction(field(11, 1), report=rep) == Fraction(880, 1147)


@xl_only
def test_census_gf13(field):
    rep = census(field(13, 1), jobs=4)
    assert rep.total == FROZEN_13["total"]
    assert rep.degree_histogram == FROZEN_13["hist"]
    assert rep.min_pairwise_distance == FROZEN_13["mind"]
    assert rep.irregular_count == FROZEN_13["irr"]
    assert rep.non_irregular_bound == FROZEN_13["bound"]


@pytest.mark.parametrize("p,r", [(2, 2), (5, 1), (7, 1), (2, 3)])
def test_census_total_matches_permutation_filter(field, p, r):
    fs = field(p, r)
    of = OracleField(p, r, fs.modulus)
    oracle_set = set(all_orthomorphisms(of))
    mine = {t.values for t in enumerate_orthomorphisms(fs)}
    assert mine == oracle_set
    assert len(mine) == FROZEN[(p, r)]["total"]


@pytest.mark.slow
def test_census_total_matches_permutation_filter_gf9(field):
    fs = field(3, 2)
    of = OracleField(3, 2, fs.modulus)
    assert len(all_orthomorphisms(of)) == 2241


def test_gf3_members_in_lex_order(field):
    tables = [t.values for t in enumerate_orthomorphisms(field(3, 1))]
    assert tables == [(0, 2, 1), (1, 0, 2), (2, 1, 0)]
    assert tables == sorted(tables)


def test_enumeration_is_lexicographic(field):
    tables = [t.values for t in enumerate_orthomorphisms(field(7, 1))]
    assert tables == sorted(tables)


def test_enumeration_cap(field):
    with pytest.raises(PreconditionError, match="capped"):
        list(enumerate_orthomorphisms(field(2, 4)))
    with pytest.raises(PreconditionError, match="capped"):
        census(field(17, 1))
    with pytest.raises(PreconditionError, match="jobs"):
        census(field(5, 1), jobs=0)


def test_parallel_census_matches_serial(field):
    fs = field(7, 1)
    assert census(fs, jobs=2) == census(fs, jobs=1)


def test_pin1_partition_is_a_partition(field):
    fs = field(5, 1)
    whole = sorted(_value_tuples(fs))
    parts = []
    for v in range(5):
        parts.extend(_value_tuples(fs, pin1=v))
    assert sorted(parts) == whole


def test_degree_histogram_numpy_matches_scalar(field):
    fs = field(7, 1)
    tables = list(_value_tuples(fs))
    assert (_degree_histogram(fs, tables, use_numpy=True)
            == _degree_histogram(fs, tables, use_numpy=False)
            == FROZEN[(7, 1)]["hist"])


def test_irregular_count_numpy_matches_scalar(field):
    fs = field(7, 1)
    tables = list(_value_tuples(fs))
    assert (_irregular_count(fs, tables, use_numpy=True)
            == _irregular_count(fs, tables, use_numpy=False) == 0)


@pytest.mark.slow
def test_irregular_count_numpy_matches_scalar_gf11_sample(field):
    fs = field(11, 1)
    tables = list(_value_tuples(fs))[:2000]
    assert (_irregular_count(fs, tables, use_numpy=True)
            == _irregular_count(fs, tables, use_numpy=False))


@pytest.mark.parametrize("p,r", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2)])
def test_enumerated_degree_and_distance_properties(field, p, r):
    # every orthomorphism reduces to degree <= q-3 for q > 3, and distinct
    # orthomorphisms never come closer than Hamming distance 3
    fs = field(p, r)
    q = fs.q
    tables = [t.values for t in _enumerate_cached(fs)]
    for t in tables:
        from orthokit import MapTable
        d = interpolate(MapTable(fs, t)).degree
        assert d <= q - 3
    full_min = _full_min_distance(tables)
    assert full_min >= 3
    assert full_min == FROZEN[(p, r)]["mind"]
    assert full_min == _min_pairwise_distance(q, tables)


def _enumerate_cached(fs, _cache={}):
    if fs.q not in _cache:
        _cache[fs.q] = list(enumerate_orthomorphisms(fs))
    return _cache[fs.q]


def test_min_distance_degenerate_cases(field):
    assert _min_pairwise_distance(2, []) is None
    assert _min_pairwise_distance(3, [(0, 2, 1)]) is None
    assert _min_pairwise_distance(3, [(0, 2, 1), (1, 0, 2)]) == 3


def test_irregular_fraction_small(field):
    assert irregular_fraction(field(3, 1)) == Fraction(0, 1)
    assert irregular_fraction(field(2, 1)) == Fraction(0, 1)
    assert irregular_fraction(field(7, 1)) == Fraction(0, 1)
    assert irregular_fraction(field(2, 3)) == Fraction(336, 384)


def test_report_json_shape(field):
    doc = census(field(5, 1)).to_json()
    assert set(doc) == {"q", "total", "degree_histogram",
                        "min_pairwise_distance", "irregular_count",
                        "non_irregular_bound"}
    assert doc["degree_histogram"] == {"1": 15}
    assert doc["total"] == 15 and doc["min_pairwise_distance"] == 4
