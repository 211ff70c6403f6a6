"""Latin bitrades from pairs of orthomorphisms.

Two orthomorphisms that disagree in exactly k places yield a k-homogeneous
Latin bitrade: two disjoint partial Latin squares of size k*q that can be
swapped for one another inside any Latin square containing either.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import PreconditionError
from .gf import FieldSpec
from .ortho import MapTable, is_orthomorphism


class Triple(NamedTuple):
    row: int
    col: int
    sym: int


@dataclass(frozen=True)
class Bitrade:
    """A pair of disjoint partial Latin squares covering the same shape."""

    field: FieldSpec
    k: int
    first: tuple[Triple, ...]
    second: tuple[Triple, ...]

    def to_json(self) -> dict:
        return {
            "field": self.field.to_json(),
            "k": self.k,
            "L1": [list(t) for t in self.first],
            "L2": [list(t) for t in self.second],
        }

    def to_csv(self) -> str:
        """Flat form: one triple per line, tagged by the half it belongs to."""
        lines = [f"L1,{t.row},{t.col},{t.sym}" for t in self.first]
        lines += [f"L2,{t.row},{t.col},{t.sym}" for t in self.second]
        return "\n".join(lines)


def _half(fs: FieldSpec, t: MapTable, disagree: list[int]) -> tuple[Triple, ...]:
    out = []
    for j in disagree:
        shift = fs.sub(t[j], j)
        for i in range(fs.q):
            out.append(Triple(i, fs.add(shift, i), fs.add(t[j], i)))
    return tuple(sorted(out))


def build_bitrade(f: MapTable, g: MapTable) -> Bitrade:
    """Bitrade from orthomorphisms f and g of the same field; k is their
    Hamming distance and must be positive."""
    fs = f.field
    if not fs.same_as(g.field):
        raise PreconditionError("maps live over different fields")
    if not is_orthomorphism(f) or not is_orthomorphism(g):
        raise PreconditionError("both maps must be orthomorphisms")
    disagree = [j for j in range(fs.q) if f[j] != g[j]]
    if not disagree:
        raise PreconditionError("maps must differ somewhere")
    return Bitrade(
        field=fs,
        k=len(disagree),
        first=_half(fs, f, disagree),
        second=_half(fs, g, disagree),
    )


def validate_homogeneous(b: Bitrade) -> bool:
    """Check the k-homogeneous bitrade axioms exhaustively.

    Both halves must be partial Latin squares on the same kq cells with the
    same row/column/symbol supports, disjoint cell-by-cell in symbols, and
    every row, column and symbol must occur exactly k times in each half.
    """
    q = b.field.q
    k = b.k
    size = k * q
    for half in (b.first, b.second):
        if len(half) != size or len(set(half)) != size:
            return False
    if set(b.first) & set(b.second):
        return False
    # pairwise projections: each pair of coordinates determines the third,
    # and the two halves occupy identical shapes in all three views
    for i, j in ((0, 1), (0, 2), (1, 2)):
        pf = {(t[i], t[j]) for t in b.first}
        pg = {(t[i], t[j]) for t in b.second}
        if len(pf) != size or len(pg) != size or pf != pg:
            return False
    # k-homogeneity: every line in every direction carries exactly k cells
    for half in (b.first, b.second):
        for i in range(3):
            counts = [0] * q
            for t in half:
                counts[t[i]] += 1
            if any(c != k for c in counts):
                return False
    return True
