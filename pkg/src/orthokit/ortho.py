"""Maps of a finite field as value tables.

Permutation and orthomorphism tests, translations, cyclotomic maps, the
minimal proper cyclotomic index of a map, and the brute-force irregularity
decision.  Everything here is an O(q) or O(q * divisors) table scan; these
are the ground-truth verifiers the constructions are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .gf import FieldSpec


@dataclass(frozen=True)
class MapTable:
    """A total map F_q -> F_q; values[x] is the image of the code x."""

    field: FieldSpec
    values: tuple[int, ...]

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def __len__(self) -> int:
        return len(self.values)

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "values": list(self.values)}


def map_table(field: FieldSpec, values) -> MapTable:
    """Validated MapTable constructor for external data."""
    vals = tuple(int(v) for v in values)
    if len(vals) != field.q or any(not 0 <= v < field.q for v in vals):
        raise PreconditionError(
            f"a map over GF({field.q}) needs exactly q values with codes in [0, q)")
    return MapTable(field, vals)


def linear_map(field: FieldSpec, a: int) -> MapTable:
    return MapTable(field, tuple(field.mul(a, x) for x in range(field.q)))


def is_permutation(t: MapTable) -> bool:
    seen = 0
    for v in t.values:
        bit = 1 << v
        if seen & bit:
            return False
        seen |= bit
    return True


def difference_map(t: MapTable) -> MapTable:
    """x -> t(x) - x, the second permutation an orthomorphism must induce."""
    sub = t.field.sub
    return MapTable(t.field, tuple(sub(v, x) for x, v in enumerate(t.values)))


def is_orthomorphism(t: MapTable) -> bool:
    return is_permutation(t) and is_permutation(difference_map(t))


def translate(t: MapTable, g: int) -> MapTable:
    """T_g: x -> t(x + g) - t(g).  Maps orthomorphisms to orthomorphisms
    and always fixes 0."""
    fs = t.field
    tg = t.values[g]
    return MapTable(fs, tuple(fs.sub(t.values[fs.add(x, g)], tg)
                              for x in range(fs.q)))


def cyclotomic_map(field: FieldSpec, n: int, coeffs) -> MapTable:
    """0 -> 0 and x -> coeffs[i] * x on the i-th index-n cyclotomic coset,
    cosets taken with respect to the field's gamma."""
    q = field.q
    if n <= 0 or (q - 1) % n:
        raise PreconditionError(f"index n={n} does not divide q-1={q - 1}")
    cs = tuple(int(a) for a in coeffs)
    if len(cs) != n or any(not 0 <= a < q for a in cs):
        raise PreconditionError("need one coefficient per coset, as codes in [0, q)")
    vals = [0] * q
    for t in range(q - 1):
        x = field.exp_table[t]
        vals[x] = field.mul(cs[t % n], x)
    return MapTable(field, tuple(vals))


@dataclass(frozen=True)
class CyclotomicProfile:
    """Smallest proper cyclotomic index of a map, with its coefficients.

    min_index is None when the map is cyclotomic of no index n < q-1.  The
    top index q-1 is excluded on purpose: every 0-fixing map qualifies there,
    so it carries no information.
    """

    min_index: int | None
    coeffs: tuple[int, ...] | None

    def to_json(self) -> dict:
        return {"min_index": self.min_index,
                "coeffs": None if self.coeffs is None else list(self.coeffs)}


def _proper_divisors(n: int) -> list[int]:
    """Divisors of n strictly below n, ascending."""
    return [d for d in range(1, n) if n % d == 0]


def cyclotomic_profile(t: MapTable) -> CyclotomicProfile:
    fs = t.field
    q = fs.q
    if t.values[0] != 0:
        return CyclotomicProfile(None, None)
    # ratios[k] = t(gamma^k) / gamma^k; index-n cyclotomic means the ratio
    # only depends on k mod n.
    ratios = [fs.mul(t.values[fs.exp_table[k]], fs.inv(fs.exp_table[k]))
              for k in range(q - 1)]
    for n in _proper_divisors(q - 1):
        if all(ratios[k] == ratios[k % n] for k in range(q - 1)):
            return CyclotomicProfile(n, tuple(ratios[:n]))
    return CyclotomicProfile(None, None)


def is_irregular(t: MapTable) -> bool:
    """True when no translation of t is cyclotomic of any proper index."""
    if not is_orthomorphism(t):
        raise PreconditionError("irregularity is defined for orthomorphisms only")
    for g in range(t.field.q):
        if cyclotomic_profile(translate(t, g)).min_index is not None:
            return False
    return True
