"""Bitrade assembly and the k-homogeneity validator."""

from dataclasses import replace

import pytest

from orthokit import (PreconditionError, Triple, build_bitrade, distance3_pair,
                      linear_map, validate_homogeneous)


def _pair_bitrade(field, p, r):
    pair = distance3_pair(field(p, r))
    return build_bitrade(pair.f, pair.g)


def test_triple_field_names():
    t = Triple(1, 2, 3)
    assert (t.row, t.col, t.sym) == (1, 2, 3)


@pytest.mark.parametrize("p,r", [(3, 1), (7, 1), (2, 2), (3, 2), (2, 5)])
def test_distance3_pairs_give_3_homogeneous_bitrades(field, p, r):
    b = _pair_bitrade(field, p, r)
    q = p ** r
    assert b.k == 3
    assert len(b.first) == len(b.second) == 3 * q
    assert validate_homogeneous(b)


def test_rows_enumerate_whole_field(field):
    b = _pair_bitrade(field, 7, 1)
    assert {t.row for t in b.first} == set(range(7))
    # each disagreement point contributes one full diagonal of cells
    assert sorted(t.row for t in b.first) == sorted(list(range(7)) * 3)


def test_triples_follow_map_translates(field):
    fs = field(7, 1)
    pair = distance3_pair(fs)
    b = build_bitrade(pair.f, pair.g)
    expected = set()
    for j in range(7):
        if pair.f[j] == pair.g[j]:
            continue
        for i in range(7):
            expected.add(Triple(i, fs.add(fs.sub(pair.f[j], j), i),
                                fs.add(pair.f[j], i)))
    assert set(b.first) == expected


def test_f5_linear_pair_gives_4_homogeneous_bitrade(field):
    fs = field(5, 1)
    b = build_bitrade(linear_map(fs, 2), linear_map(fs, 3))
    assert b.k == 4
    assert len(b.first) == len(b.second) == 20
    assert validate_homogeneous(b)


def test_halves_are_disjoint_and_share_shape(field):
    b = _pair_bitrade(field, 3, 2)
    assert not set(b.first) & set(b.second)
    assert {(t.row, t.col) for t in b.first} == {(t.row, t.col) for t in b.second}


def test_validator_rejects_perturbations(field):
    b = _pair_bitrade(field, 7, 1)
    assert validate_homogeneous(b)
    # duplicate one triple (size preserved, set collapses)
    broken = replace(b, first=b.first[:1] + b.first[:1] + b.first[2:])
    assert not validate_homogeneous(broken)
    # leak a triple across halves: breaks disjointness
    broken = replace(b, second=b.first[:1] + b.second[1:])
    assert not validate_homogeneous(broken)
    # rewrite one symbol: breaks the shared-shape projections
    t0 = b.first[0]
    swapped = Triple(t0.row, t0.col, (t0.sym + 1) % 7)
    broken = replace(b, first=(swapped,) + b.first[1:])
    assert not validate_homogeneous(broken)
    # wrong k
    broken = replace(b, k=2)
    assert not validate_homogeneous(broken)


def test_build_bitrade_preconditions(field):
    f7, f5 = field(7, 1), field(5, 1)
    with pytest.raises(PreconditionError, match="different fields"):
        build_bitrade(linear_map(f7, 2), linear_map(f5, 2))
    with pytest.raises(PreconditionError, match="orthomorphisms"):
        build_bitrade(linear_map(f7, 1), linear_map(f7, 2))
    with pytest.raises(PreconditionError, match="differ"):
        build_bitrade(linear_map(f7, 2), linear_map(f7, 2))


def test_serialization_wire_format(field):
    b = _pair_bitrade(field, 3, 1)
    doc = b.to_json()
    assert set(doc) == {"field", "k", "L1", "L2"}
    assert doc["k"] == 3
    assert len(doc["L1"]) == len(doc["L2"]) == 9
    assert all(len(row) == 3 for row in doc["L1"])
    assert doc["L1"] == [list(t) for t in b.first]
    csv = b.to_csv().splitlines()
    assert len(csv) == 18
    assert csv[0] == "L1,%d,%d,%d" % b.first[0]
    assert csv[9].startswith("L2,")
    assert all(line.count(",") == 3 for line in csv)
