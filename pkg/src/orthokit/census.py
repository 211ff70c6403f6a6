"""Exhaustive enumeration of orthomorphisms over small fields.

census() walks every orthomorphism of GF(q) (q <= 13) by backtracking over
value and difference bitmasks, then aggregates degree statistics, the
minimum pairwise Hamming distance, and the count of irregular members,
alongside the theoretical ceiling on how many non-irregular ones can exist.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator

import numpy as np

from .errors import PreconditionError
from .gf import FieldSpec
from .ortho import MapTable, is_irregular
from .polyops import interpolate

#: Largest field order the exhaustive walk will attempt.
ENUM_CAP = 13

_BLOCK = 512


def _value_tuples(spec: FieldSpec, pin1: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every orthomorphism of the field as a raw value tuple, in
    lexicographic order; pin1 freezes theta(1) for partitioned runs."""
    q = spec.q
    sub = spec.sub
    theta = [-1] * q
    base_v = 0
    base_d = 0
    if pin1 is None:
        positions = list(range(q))
    else:
        positions = [0] + list(range(2, q))
        theta[1] = pin1
        base_v = 1 << pin1
        base_d = 1 << sub(pin1, 1)
    n = len(positions)

    def rec(i: int, used_v: int, used_d: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(theta)
            return
        x = positions[i]
        for v in range(q):
            vb = 1 << v
            if used_v & vb:
                continue
            db = 1 << sub(v, x)
            if used_d & db:
                continue
            theta[x] = v
            yield from rec(i + 1, used_v | vb, used_d | db)
        theta[x] = -1

    yield from rec(0, base_v, base_d)


def enumerate_orthomorphisms(spec: FieldSpec) -> Iterator[MapTable]:
    """All orthomorphisms of GF(q), q <= 13, in lexicographic table order."""
    if spec.q > ENUM_CAP:
        raise PreconditionError(
            f"exhaustive enumeration is capped at q = {ENUM_CAP}, got q = {spec.q}")
    for vals in _value_tuples(spec):
        yield MapTable(spec, vals)


def _census_worker(args: tuple[FieldSpec, int]) -> list[tuple[int, ...]]:
    spec, v = args
    return list(_value_tuples(spec, pin1=v))


def _degree_histogram(spec: FieldSpec, tables: list[tuple[int, ...]],
                      use_numpy: bool | None = None) -> dict[int, int]:
    if use_numpy is None:
        use_numpy = spec.r == 1 and len(tables) > 256
    hist: dict[int, int] = {}
    if use_numpy and spec.r == 1 and tables:
        p, q = spec.p, spec.q
        # coefficient-extraction matrix: row j dotted with a value table
        # gives coefficient j of the interpolating reduced polynomial
        m = np.zeros((q, q), dtype=np.int64)
        m[0, 0] = 1
        for j in range(1, q):
            for y in range(1, q):
                m[j, y] = (-pow(y, q - 1 - j, p)) % p
        m[q - 1, 0] = (m[q - 1, 0] + p - 1) % p
        a = np.asarray(tables, dtype=np.int64)
        coeffs = (a @ m.T) % p
        nonzero = coeffs[:, ::-1] != 0
        degrees = q - 1 - np.argmax(nonzero, axis=1)
        for d in degrees.tolist():
            hist[d] = hist.get(d, 0) + 1
        return hist
    for vals in tables:
        d = interpolate(MapTable(spec, vals)).degree
        hist[d] = hist.get(d, 0) + 1
    return hist


def _min_pairwise_distance(q: int, tables: list[tuple[int, ...]]) -> int | None:
    n = len(tables)
    if n < 2:
        return None
    a = np.asarray(tables, dtype=np.uint8)
    best = q + 1
    for i0 in range(0, n, _BLOCK):
        bi = a[i0:i0 + _BLOCK]
        for j0 in range(i0, n, _BLOCK):
            bj = a[j0:j0 + _BLOCK]
            eq = (bi[:, None, :] == bj[None, :, :]).sum(axis=2, dtype=np.int16)
            dist = q - eq
            if i0 == j0:
                # only the strict upper triangle holds genuine pairs
                r, c = np.tril_indices(len(bi), m=len(bj))
                dist[r, c] = q + 1
            m = int(dist.min()) if dist.size else q + 1
            if m < best:
                best = m
            if best <= 3:
                # 3 is the floor: distinct permutations cannot differ in one
                # place, and a two-place difference would force the two
                # difference maps to trade values between the same two
                # points, contradicting injectivity
                return best
    return best


def _irregular_count(spec: FieldSpec, tables: list[tuple[int, ...]],
                     use_numpy: bool | None = None) -> int:
    if use_numpy is None:
        use_numpy = spec.r == 1 and len(tables) > 512
    if not (use_numpy and spec.r == 1 and tables):
        return sum(1 for vals in tables if is_irregular(MapTable(spec, vals)))
    # vectorized over all tables at once, prime fields only: a table fails
    # irregularity when some translation has log(t(gamma^k)) - k constant
    # on every coset of some proper index n | q-1
    p, q = spec.p, spec.q
    q1 = q - 1
    exp = np.asarray(spec.exp_table, dtype=np.int64)
    log = np.asarray(spec.log_table, dtype=np.int64)
    ks = np.arange(q1, dtype=np.int64)
    divisors = [n for n in range(1, q1) if q1 % n == 0]
    total_regular = 0
    for lo in range(0, len(tables), 65536):
        a = np.asarray(tables[lo:lo + 65536], dtype=np.int64)
        not_irr = np.zeros(len(a), dtype=bool)
        for g in range(q):
            tg = (a[:, (exp + g) % p] - a[:, g:g + 1]) % p
            ratio_log = (log[tg] - ks) % q1
            for n in divisors:
                match = ratio_log == ratio_log[:, ks % n]
                not_irr |= match.all(axis=1)
        total_regular += int(not_irr.sum())
    return len(tables) - total_regular


@dataclass(frozen=True)
class CensusReport:
    q: int
    total: int
    degree_histogram: dict[int, int]
    min_pairwise_distance: int | None
    irregular_count: int
    non_irregular_bound: int

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "total": self.total,
            "degree_histogram": {str(k): v for k, v in sorted(self.degree_histogram.items())},
            "min_pairwise_distance": self.min_pairwise_distance,
            "irregular_count": self.irregular_count,
            "non_irregular_bound": self.non_irregular_bound,
        }


def census(spec: FieldSpec, jobs: int = 1) -> CensusReport:
    """Full orthomorphism census of GF(q), q <= 13.

    jobs > 1 partitions the walk on the value of theta(1) across a process
    pool; the aggregate is identical to a single-job run.
    """
    q = spec.q
    if q > ENUM_CAP:
        raise PreconditionError(
            f"exhaustive enumeration is capped at q = {ENUM_CAP}, got q = {q}")
    if jobs < 1:
        raise PreconditionError("jobs must be a positive integer")
    if jobs == 1:
        tables = list(_value_tuples(spec))
    else:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_census_worker, [(spec, v) for v in range(q)])
        tables = [t for part in parts for t in part]
        tables.sort()
    irregular = _irregular_count(spec, tables)
    return CensusReport(
        q=q,
        total=len(tables),
        degree_histogram=_degree_histogram(spec, tables),
        min_pairwise_distance=_min_pairwise_distance(q, tables),
        irregular_count=irregular,
        non_irregular_bound=isqrt(q ** (q + 4)) // 2,
    )


def irregular_fraction(spec: FieldSpec, report: CensusReport | None = None,
                       jobs: int = 1) -> Fraction:
    """Fraction of orthomorphisms of GF(q) that are irregular, with the
    non-irregular count checked against its theoretical ceiling."""
    if report is None:
        report = census(spec, jobs=jobs)
    if report.total == 0:
        return Fraction(0, 1)
    regular = report.total - report.irregular_count
    # ceiling check in exact integers: regular <= q^(q/2 + 2) / 2
    assert 4 * regular * regular <= spec.q ** (spec.q + 4), \
        "non-irregular count exceeds its theoretical ceiling"
    return Fraction(report.irregular_count, report.total)
