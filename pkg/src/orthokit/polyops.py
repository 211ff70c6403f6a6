"""Reduced-polynomial view of maps: interpolation, degree, Hamming distance.

Interpolation works from the fact that the product of (x - z) over all z in
GF(q) is x^q - x, whose derivative is the constant -1: the basis polynomial
attached to node y is -(x^q - x)/(x - y), one synthetic division away, and
no denominators ever need inverting.  O(q^2) overall, which is fine at the
field sizes the searches target, and simple enough to serve as the
reference implementation the rest of the package is measured against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .gf import FieldSpec
from .ortho import MapTable


@dataclass(frozen=True)
class ReducedPoly:
    """The unique degree < q polynomial of a map.

    coeffs[i] multiplies x^i; trailing zeros are trimmed.  The zero
    polynomial has empty coeffs and degree None: a dedicated sentinel rather
    than an overloaded 0, so degree comparisons stay honest.
    """

    field: FieldSpec
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}


def reduced_poly(field: FieldSpec, coeffs) -> ReducedPoly:
    cs = [int(c) for c in coeffs]
    if len(cs) > field.q:
        raise PreconditionError("a reduced polynomial has degree < q")
    if any(not 0 <= c < field.q for c in cs):
        raise PreconditionError("coefficients must be codes in [0, q)")
    while cs and cs[-1] == 0:
        cs.pop()
    return ReducedPoly(field, tuple(cs))


def evaluate(f: ReducedPoly, x: int) -> int:
    fs = f.field
    acc = 0
    for c in reversed(f.coeffs):
        acc = fs.add(fs.mul(acc, x), c)
    return acc


def tabulate(f: ReducedPoly) -> MapTable:
    return MapTable(f.field, tuple(evaluate(f, x) for x in range(f.field.q)))


def interpolate(t: MapTable) -> ReducedPoly:
    """The unique reduced polynomial agreeing with t on every element."""
    fs = t.field
    q = fs.q
    vals = t.values
    if len(vals) != q:
        raise PreconditionError("table must have exactly q entries")
    exp = fs.exp_table
    log = fs.log_table
    add = fs.add
    q1 = q - 1
    coeffs = [0] * q
    coeffs[0] = vals[0]
    if vals[0]:
        # node 0 contributes -(x^{q-1} - 1) * t(0)
        coeffs[q - 1] = fs.neg(vals[0])
    for k in range(q1):
        ty = vals[exp[k]]
        if ty == 0:
            continue
        # node y = gamma^k adds -t(y) * y^{q-1-j} to coefficient j >= 1
        idx = (log[fs.neg(ty)] - k) % q1
        for j in range(1, q):
            coeffs[j] = add(coeffs[j], exp[idx])
            idx -= k
            if idx < 0:
                idx += q1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return ReducedPoly(fs, tuple(coeffs))


def reduced_degree(t: MapTable) -> int | None:
    return interpolate(t).degree


def hamming_distance(f: MapTable, g: MapTable) -> int:
    if not f.field.same_as(g.field):
        raise PreconditionError("maps live over different fields")
    return sum(a != b for a, b in zip(f.values, g.values))
