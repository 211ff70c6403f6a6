"""Finite fields GF(p^r) with table-driven arithmetic.

A field element is a plain int in [0, q): the code sum(c_i * p**i) of its
polynomial-basis coordinates, c_0 being the constant term.  Code 0 is the
additive identity, code 1 the multiplicative identity, and codes 0..p-1 are
exactly the prime subfield.  Addition works digit-wise in base p (XOR when
p == 2); multiplication, inversion and powers go through exp/log tables for
a fixed primitive element gamma, so each costs a couple of lookups.

Construction policy, fully deterministic:

* the default modulus is the lexicographically smallest monic irreducible of
  degree r, coefficients compared constant term first; for r == 1 the
  convention is y - gamma;
* the default gamma is the smallest code generating the whole multiplicative
  group;
* callers may supply either explicitly, e.g. to match element codes from a
  published table.

FieldSpec instances are frozen and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError

#: Largest supported field order; every table here is Theta(q) ints.
ORDER_CAP = 2**20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _distinct_prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _low_digits(m: int, p: int, k: int) -> list[int]:
    """k base-p digits of m, least significant first."""
    digs = []
    for _ in range(k):
        digs.append(m % p)
        m //= p
    return digs


def _poly_divisible(f: Sequence[int], d: Sequence[int], p: int) -> bool:
    """Whether monic d divides f over Z_p (both constant term first)."""
    rem = list(f)
    dd = len(d) - 1
    for i in range(len(f) - 1 - dd, -1, -1):
        c = rem[i + dd]
        if c:
            rem[i + dd] = 0
            for j in range(dd):
                rem[i + j] = (rem[i + j] - c * d[j]) % p
    return not any(rem[:dd])


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Trial factorization; fine at the degrees this package meets."""
    deg = len(f) - 1
    if deg == 1:
        return True
    for dd in range(1, deg // 2 + 1):
        for m in range(p**dd):
            if _poly_divisible(f, _low_digits(m, p, dd) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    for m in range(p**r):
        digs = _low_digits(m, p, r)
        digs.reverse()  # slowest-varying digit of m becomes the constant term
        f = digs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible of degree {r} over Z_{p}")


def _raw_mul(a: int, b: int, p: int, r: int, modulus: Sequence[int]) -> int:
    """Table-free multiply; used only while building a field."""
    if r == 1:
        return a * b % p
    if p == 2:
        top = 1 << r
        mod_int = 0
        for i, c in enumerate(modulus):
            if c:
                mod_int |= 1 << i
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod_int
        return acc
    av = _low_digits(a, p, r)
    bv = _low_digits(b, p, r)
    prod = [0] * (2 * r - 1)
    for i, ai in enumerate(av):
        if ai:
            for j, bj in enumerate(bv):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(2 * r - 2, r - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(r):
                prod[i - r + j] = (prod[i - r + j] - c * modulus[j]) % p
    code = 0
    for d in reversed(prod[:r]):
        code = code * p + d
    return code


def _raw_pow(a: int, e: int, p: int, r: int, modulus: Sequence[int]) -> int:
    acc = 1
    base = a
    while e:
        if e & 1:
            acc = _raw_mul(acc, base, p, r, modulus)
        base = _raw_mul(base, base, p, r, modulus)
        e >>= 1
    return acc


def _is_primitive(cand: int, p: int, r: int, modulus, q: int, factors) -> bool:
    if cand == 0:
        return False
    for ell in factors:
        e = (q - 1) // ell
        power = pow(cand, e, p) if r == 1 else _raw_pow(cand, e, p, r, modulus)
        if power == 1:
            return False
    return True


@dataclass(frozen=True, eq=False, repr=False)
class FieldSpec:
    """Immutable description of GF(p^r) plus its arithmetic tables."""

    p: int
    r: int
    q: int
    modulus: tuple[int, ...]  # monic, constant term first, length r + 1
    gamma: int
    exp_table: tuple[int, ...]  # exp_table[i] == gamma**i, length q - 1
    log_table: tuple[int, ...]  # inverse of exp on 1..q-1; log_table[0] == -1

    def __repr__(self) -> str:
        return (f"FieldSpec(p={self.p}, r={self.r}, q={self.q}, "
                f"modulus={self.modulus}, gamma={self.gamma})")

    # -- additive structure --------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        s, m = 0, 1
        for _ in range(self.r):
            s += ((a % p) + (b % p)) % p * m
            a //= p
            b //= p
            m *= p
        return s

    def sub(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        s, m = 0, 1
        for _ in range(self.r):
            s += ((a % p) - (b % p)) % p * m
            a //= p
            b //= p
            m *= p
        return s

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    # -- multiplicative structure ----------------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.exp_table[-self.log_table[a] % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 cannot be raised to a negative power")
            return 0 if e else 1
        return self.exp_table[self.log_table[a] * e % (self.q - 1)]

    def trace(self, a: int) -> int:
        """Sum of the r Frobenius conjugates; lands in the prime subfield."""
        if self.r == 1 or a == 0:
            return a
        e = self.log_table[a]
        q1 = self.q - 1
        acc = 0
        pe = 1
        for _ in range(self.r):
            acc = self.add(acc, self.exp_table[e * pe % q1])
            pe *= self.p
        return acc

    def coset_index(self, a: int, n: int) -> int:
        """Index j with a in gamma^j * <gamma^n>; needs a != 0 and n | q-1."""
        if a == 0:
            raise PreconditionError("0 lies in no multiplicative coset")
        if n <= 0 or (self.q - 1) % n:
            raise PreconditionError(f"n={n} does not divide q-1={self.q - 1}")
        return self.log_table[a] % n

    def prime_subfield(self) -> range:
        """The copy of Z_p inside the field: exactly the codes 0..p-1."""
        return range(self.p)

    def elements(self) -> range:
        return range(self.q)

    def same_as(self, other: "FieldSpec") -> bool:
        return (self.p, self.r, self.modulus, self.gamma) == \
            (other.p, other.r, other.modulus, other.gamma)

    def to_json(self) -> dict:
        return {"p": self.p, "r": self.r,
                "modulus": list(self.modulus), "gamma": self.gamma}


def build_field(p: int, r: int, modulus: Iterable[int] | None = None,
                gamma: int | None = None) -> FieldSpec:
    """Construct GF(p^r); see the module docstring for the default policy."""
    if not isinstance(p, int) or not is_prime(p):
        raise PreconditionError(f"p={p} is not prime")
    if not isinstance(r, int) or r < 1:
        raise PreconditionError(f"extension degree r={r} must be a positive integer")
    q = p**r
    if q > ORDER_CAP:
        raise PreconditionError(f"q={q} exceeds the supported cap {ORDER_CAP}")

    mod: tuple[int, ...] | None
    if modulus is not None:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != r + 1 or mod[-1] != 1:
            raise PreconditionError("modulus must be monic of degree r, constant term first")
        if not _is_irreducible(mod, p):
            raise PreconditionError(f"modulus {mod} is reducible over Z_{p}")
    elif r > 1:
        mod = _smallest_irreducible(p, r)
    else:
        mod = None  # degree-1 convention y - gamma, fixed once gamma is known

    factors = _distinct_prime_factors(q - 1)
    probe = mod if mod is not None else (0, 1)
    if gamma is None:
        for cand in range(1, q):
            if _is_primitive(cand, p, r, probe, q, factors):
                gamma = cand
                break
    elif not isinstance(gamma, int) or not 0 < gamma < q \
            or not _is_primitive(gamma, p, r, probe, q, factors):
        raise PreconditionError(f"gamma={gamma} is not a primitive element")
    assert gamma is not None
    if mod is None:
        mod = (-gamma % p, 1)

    exp = [0] * (q - 1)
    x = 1
    for i in range(q - 1):
        exp[i] = x
        x = _raw_mul(x, gamma, p, r, mod)
    assert x == 1 and len(set(exp)) == q - 1, "exp table failed to cycle the group"
    log = [-1] * q
    for i, v in enumerate(exp):
        log[v] = i

    return FieldSpec(p=p, r=r, q=q, modulus=mod, gamma=gamma,
                     exp_table=tuple(exp), log_table=tuple(log))


def field_from_json(data: dict) -> FieldSpec:
    return build_field(int(data["p"]), int(data["r"]),
                       data.get("modulus"), data.get("gamma"))
