"""Exact arithmetic in finite fields GF(p^r).

An element with polynomial representation c0 + c1*t + ... + c_{r-1}*t^(r-1)
over GF(p) is encoded as the integer c0 + c1*p + ... + c_{r-1}*p^(r-1), so
encodings run through 0 .. q-1.  A FieldSpec precomputes complete addition,
multiplication, negation, and inverse tables at construction (the library
targets desk-scale fields, q <= a few hundred), after which every element
operation is a table lookup.  All arithmetic is exact integer work; the
numpy copies of the tables exist only so matrix/codeword routines can do
vectorized lookups.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegreeMismatchError,
    NotPrimeError,
    ReducibleModulusError,
    SpecMismatchError,
)


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


# -- polynomials over GF(p), little-endian coefficient tuples ----------------
# Trailing zeros are trimmed; () is the zero polynomial.


def _trim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_add(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m, coefficients mod p."""
    r = list(a)
    dm = len(m) - 1
    while len(r) - 1 >= dm and r:
        lead = r[-1] % p
        if lead:
            shift = len(r) - 1 - dm
            for i, mi in enumerate(m):
                r[shift + i] = (r[shift + i] - lead * mi) % p
        r.pop()
    return _trim(r)


def _monic_polys(p: int, degree: int) -> Iterable[tuple[int, ...]]:
    """All monic polynomials of the given degree, smallest encoding first."""
    for low in range(p**degree):
        coeffs = []
        v = low
        for _ in range(degree):
            v, d = divmod(v, p)
            coeffs.append(d)
        yield tuple(coeffs) + (1,)


def _is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for q in _monic_polys(p, d):
            if not _poly_mod(m, q, p):
                return False
    return True


def _smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    for m in _monic_polys(p, r):
        if _is_irreducible(m, p):
            return m
    raise RuntimeError(f"no irreducible polynomial of degree {r} over GF({p})")  # unreachable


class FieldSpec:
    """Immutable description of GF(p^r) plus its full operation tables.

    Integer-level operations (add, sub, mul, neg, inv, pow) act on element
    encodings and are the fast path used by the matrix and code layers;
    element() wraps an encoding in a FieldElement for operator syntax.
    """

    __slots__ = ("p", "r", "q", "modulus", "_add", "_mul", "_neg", "_inv", "np_add", "np_mul")

    def __init__(self, p: int, r: int, modulus: tuple[int, ...]):
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        polys = [self.decode(v) for v in range(q)]
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = polys[a]
            for b in range(a, q):
                s = self.encode(_poly_add(pa, polys[b], p))
                add[a][b] = add[b][a] = s
                m = self.encode(_poly_mod(_poly_mul(pa, polys[b], p), self.modulus, p))
                mul[a][b] = mul[b][a] = m
        self._add = add
        self._mul = mul
        self._neg = [add[a].index(0) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = mul[a].index(1)
        self._inv = inv
        self.np_add = np.array(add, dtype=np.int16)
        self.np_mul = np.array(mul, dtype=np.int16)

    # -- encoding helpers

    def encode(self, coeffs: Sequence[int]) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + c % self.p
        return v

    def decode(self, value: int) -> tuple[int, ...]:
        """Little-endian coefficient tuple of length r."""
        out = []
        for _ in range(self.r):
            value, d = divmod(value, self.p)
            out.append(d)
        return tuple(out)

    # -- integer-level arithmetic on encodings

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in " + repr(self))
        return self._inv[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self._mul[result][a]
            a = self._mul[a][a]
            e >>= 1
        return result

    # -- element-level API

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def element(self, value) -> "FieldElement":
        """Element from an integer encoding or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise SpecMismatchError("element belongs to a different field")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise ValueError(f"encoding {value} out of range for {self!r}")
            return FieldElement(self, value)
        return FieldElement(self, self.encode(value))

    def elements(self) -> list["FieldElement"]:
        """All q elements in ascending encoding order (0 first, then 1)."""
        return [FieldElement(self, v) for v in range(self.q)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def modulus_str(self) -> str:
        terms = []
        for i, c in enumerate(self.modulus):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        return " + ".join(terms) if terms else "0"


def field_new(p: int, r: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """Build GF(p^r) with an explicit or canonically chosen modulus.

    When no modulus is supplied the monic irreducible of degree r whose
    coefficient vector has the smallest integer encoding is selected, so
    serialized codes are reproducible across runs.  A supplied modulus must
    be monic of degree r and irreducible over GF(p).
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if r < 1:
        raise DegreeMismatchError(f"extension degree must be >= 1, got {r}")
    if modulus is None:
        mod = (0, 1) if r == 1 else _smallest_irreducible(p, r)
    else:
        mod = tuple(c % p for c in modulus)
        if len(mod) != r + 1 or mod[-1] != 1:
            raise DegreeMismatchError(f"modulus must be monic of degree {r}")
        if r > 1 and not _is_irreducible(mod, p):
            raise ReducibleModulusError(f"modulus {list(mod)} factors over GF({p})")
    return FieldSpec(p, r, mod)


class FieldElement:
    """A single element of a FieldSpec, wrapping its integer encoding."""

    __slots__ = ("spec", "val")

    def __init__(self, spec: FieldSpec, val: int):
        self.spec = spec
        self.val = val

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.decode(self.val)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatchError("operands from different fields")
            return other.val
        if isinstance(other, int):
            return other % self.spec.p  # ints coerce via the prime subfield
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(self.val, v))

    def __rsub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.sub(v, self.val))

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.val, v))

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec.mul(self.val, self.spec.inv(v)))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.val))

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec.pow(self.val, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.val))

    def __bool__(self) -> bool:
        return self.val != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.spec.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.val))

    def __repr__(self) -> str:
        return f"{self.spec!r}[{self.val}]"
