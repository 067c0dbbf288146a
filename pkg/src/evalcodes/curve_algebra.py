"""Quotient algebras F_q[x,y]/<f> for two plane-curve families, with their
monomial bases and weight functions.

Family A: f = x^m + y^(m-1) + G(x,y), total degree of G below m-1.  The
monomials x^a y^b with a < m form a basis; x and y carry weights m-1 and m.

Family B: f = y^2 - g(x) with deg g = m odd and odd characteristic.  The
monomials x^a y^b with b < 2 form a basis; x and y carry weights 2 and m.

Elements are kept in normal form: a dict from basis exponent pairs (a, b)
to nonzero coefficient encodings.  Reduction rewrites x^m (family A) or
y^2 (family B) until every monomial respects the exponent cap; the weight
of a nonzero element is the largest a*wx + b*wy over its support, which is
achieved by exactly one monomial because those values are pairwise
distinct on the basis.
"""

from __future__ import annotations

import random
from typing import Iterable, Mapping

from .errors import (
    CurveMismatchError,
    EvenCharacteristicError,
    EvenDegreeError,
    TailTooBigError,
)
from .gf import FieldSpec
from .linear import Matrix
from .semigroup import NumericalSemigroup

NEG_INF = float("-inf")

Terms = Mapping[tuple[int, int], int]


class PlaneCurve:
    """One curve from family A or B, with its weight semigroup."""

    __slots__ = ("spec", "family", "m", "tail", "g", "wx", "wy", "semigroup")

    def __init__(self, spec: FieldSpec, family: str, m: int, tail: dict | None, g: tuple | None):
        self.spec = spec
        self.family = family
        self.m = m
        self.tail = tail
        self.g = g
        if family == "A":
            self.wx, self.wy = m - 1, m
        else:
            self.wx, self.wy = 2, m
        self.semigroup = NumericalSemigroup({self.wx, self.wy})
        self._sanity_checks()

    # -- construction-time sanity: distinct basis weights, no zero divisors
    # on a small deterministic sample

    def _sanity_checks(self) -> None:
        rhos = [self.semigroup.nth(l) for l in range(1, 16)]
        monos = [self.monomial_for_rho(r) for r in rhos]
        assert len(set(monos)) == len(monos)
        assert all(a < b for a, b in zip(rhos, rhos[1:]))
        rng = random.Random(0xC0DE)
        for _ in range(12):
            f = random_element(self, rng, max_weight=3 * self.m, max_terms=3, nonzero=True)
            g = random_element(self, rng, max_weight=3 * self.m, max_terms=3, nonzero=True)
            assert not (f * g).is_zero, "zero divisor found: curve is not in the family"

    # -- basis bookkeeping

    @property
    def exponent_cap(self) -> int:
        """Upper bound (exclusive) on the capped exponent: x for family A,
        y for family B."""
        return self.m if self.family == "A" else 2

    def monomial_for_rho(self, rho: int) -> tuple[int, int]:
        """The unique basis monomial of weight rho (rho must lie in the
        weight semigroup)."""
        if self.family == "A":
            for a in range(self.exponent_cap):
                rem = rho - a * self.wx
                if rem >= 0 and rem % self.wy == 0:
                    return (a, rem // self.wy)
        else:
            for b in range(2):
                rem = rho - b * self.wy
                if rem >= 0 and rem % 2 == 0:
                    return (rem // 2, b)
        raise ValueError(f"{rho} is not a weight of a basis monomial")

    def basis_prefix(self, l: int) -> tuple[list[tuple[int, int]], list[int]]:
        """First l basis monomials in strictly increasing weight order,
        together with their weights (the semigroup's first l elements)."""
        if l < 1:
            raise ValueError(f"basis prefix length must be >= 1, got {l}")
        rhos = [self.semigroup.nth(i) for i in range(1, l + 1)]
        return [self.monomial_for_rho(r) for r in rhos], rhos

    def l_index(self, i: int, j: int) -> int:
        """Index l with weight(f_i * f_j) equal to the l-th semigroup
        element; additivity of the weight makes it nth^-1(rho_i + rho_j)."""
        sg = self.semigroup
        return sg.index_of(sg.nth(i) + sg.nth(j))

    def genus(self) -> int:
        return self.semigroup.genus

    # -- element constructors

    def element(self, terms: Terms | Iterable[tuple[int, int, int]]) -> "AlgebraElement":
        """Reduce an arbitrary exponent->coefficient mapping (or iterable of
        (a, b, coeff) triples) to normal form."""
        if isinstance(terms, Mapping):
            triples = [(a, b, c) for (a, b), c in terms.items()]
        else:
            triples = [tuple(t) for t in terms]
        q = self.spec.q
        for a, b, c in triples:
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in ({a}, {b})")
            if not 0 <= c < q:
                raise ValueError(f"coefficient {c} is not an encoding of {self.spec!r}")
        return AlgebraElement(self, self._reduce(triples))

    def monomial(self, a: int, b: int, coeff: int = 1) -> "AlgebraElement":
        return self.element([(a, b, coeff)])

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {(0, 0): 1})

    # -- the rewriting engine

    def _reduce(self, triples: list[tuple[int, int, int]]) -> dict[tuple[int, int], int]:
        f = self.spec
        add, mul, neg = f.add, f.mul, f.neg
        out: dict[tuple[int, int], int] = {}
        work = list(triples)
        if self.family == "A":
            m = self.m
            tail = self.tail
            while work:
                a, b, c = work.pop()
                if c == 0:
                    continue
                if a < m:
                    key = (a, b)
                    s = add(out.get(key, 0), c)
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
                    continue
                # x^a y^b = x^(a-m) y^b * (-y^(m-1) - G)
                a2 = a - m
                nc = neg(c)
                work.append((a2, b + m - 1, nc))
                for (ga, gb), gc in tail.items():
                    work.append((a2 + ga, b + gb, mul(nc, gc)))
        else:
            g = self.g
            while work:
                a, b, c = work.pop()
                if c == 0:
                    continue
                if b < 2:
                    key = (a, b)
                    s = add(out.get(key, 0), c)
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
                    continue
                # y^b = y^(b-2) * g(x)
                for i, gi in enumerate(g):
                    if gi:
                        work.append((a + i, b - 2, mul(c, gi)))
        return out

    def defining_terms(self) -> dict[tuple[int, int], int]:
        """The curve polynomial f as an exponent->coefficient dict."""
        f = self.spec
        if self.family == "A":
            terms = {(self.m, 0): 1, (0, self.m - 1): 1}
            for key, c in self.tail.items():
                terms[key] = f.add(terms.get(key, 0), c)
            return {k: v for k, v in terms.items() if v}
        terms = {(0, 2): 1}
        for i, gi in enumerate(self.g):
            if gi:
                terms[(i, 0)] = f.neg(gi)
        return terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PlaneCurve)
            and self.spec == other.spec
            and self.family == other.family
            and self.m == other.m
            and self.tail == other.tail
            and self.g == other.g
        )

    def __hash__(self):
        return hash((self.spec, self.family, self.m, self.g))

    def __repr__(self) -> str:
        if self.family == "A":
            return f"PlaneCurve(A: x^{self.m} + y^{self.m - 1} + G over {self.spec!r})"
        return f"PlaneCurve(B: y^2 - g(x), deg g = {self.m}, over {self.spec!r})"


def curve_family_a(spec: FieldSpec, m: int, tail: Terms | None = None) -> PlaneCurve:
    """Curve x^m + y^(m-1) + G(x,y) with weights (m-1, m).

    The tail G is given as an exponent->coefficient dict and must have
    total degree strictly below m - 1.
    """
    if m < 2:
        raise ValueError(f"family A needs m >= 2, got {m}")
    clean: dict[tuple[int, int], int] = {}
    for (a, b), c in (tail or {}).items():
        if not 0 <= c < spec.q:
            raise ValueError(f"coefficient {c} is not an encoding of {spec!r}")
        if c == 0:
            continue
        if a + b >= m - 1:
            raise TailTooBigError(f"tail monomial x^{a} y^{b} has degree {a + b} >= m-1 = {m - 1}")
        clean[(int(a), int(b))] = c
    return PlaneCurve(spec, "A", m, clean, None)


def curve_family_b(spec: FieldSpec, g_coeffs: Iterable[int]) -> PlaneCurve:
    """Curve y^2 - g(x) with weights (2, deg g); needs odd characteristic
    and odd deg g.  Coefficients are little-endian encodings."""
    if spec.p == 2:
        raise EvenCharacteristicError("family B requires characteristic != 2")
    g = [int(c) for c in g_coeffs]
    for c in g:
        if not 0 <= c < spec.q:
            raise ValueError(f"coefficient {c} is not an encoding of {spec!r}")
    while g and g[-1] == 0:
        g.pop()
    m = len(g) - 1
    if m < 1 or m % 2 == 0:
        raise EvenDegreeError(f"deg g must be odd, got {m}")
    return PlaneCurve(spec, "B", m, None, tuple(g))


class AlgebraElement:
    """Normal-form element of a curve algebra: finitely many basis
    monomials with nonzero coefficients."""

    __slots__ = ("curve", "terms")

    def __init__(self, curve: PlaneCurve, terms: dict[tuple[int, int], int]):
        self.curve = curve
        self.terms = terms

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def weight(self) -> int | float:
        """Weight of the element; -inf for zero."""
        if not self.terms:
            return NEG_INF
        wx, wy = self.curve.wx, self.curve.wy
        return max(a * wx + b * wy for a, b in self.terms)

    def leading_monomial(self) -> tuple[int, int]:
        wx, wy = self.curve.wx, self.curve.wy
        return max(self.terms, key=lambda ab: ab[0] * wx + ab[1] * wy)

    def _check(self, other: "AlgebraElement") -> None:
        if self.curve != other.curve:
            raise CurveMismatchError("elements live on different curves")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        f = self.curve.spec
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = f.add(out.get(key, 0), c)
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return AlgebraElement(self.curve, out)

    def __neg__(self) -> "AlgebraElement":
        f = self.curve.spec
        return AlgebraElement(self.curve, {k: f.neg(c) for k, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        f = self.curve.spec
        conv: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                key = (a1 + a2, b1 + b2)
                s = f.add(conv.get(key, 0), f.mul(c1, c2))
                if s:
                    conv[key] = s
                else:
                    conv.pop(key, None)
        triples = [(a, b, c) for (a, b), c in conv.items()]
        return AlgebraElement(self.curve, self.curve._reduce(triples))

    def scale(self, c: int) -> "AlgebraElement":
        """Multiply by the field element with encoding c."""
        f = self.curve.spec
        if c == 0:
            return AlgebraElement(self.curve, {})
        return AlgebraElement(self.curve, {k: f.mul(c, v) for k, v in self.terms.items()})

    def evaluate(self, x: int, y: int) -> int:
        """Value at a point, coordinates given as encodings."""
        f = self.curve.spec
        acc = 0
        for (a, b), c in self.terms.items():
            acc = f.add(acc, f.mul(c, f.mul(f.pow(x, a), f.pow(y, b))))
        return acc

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.curve == other.curve
            and self.terms == other.terms
        )

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            mono = "".join(
                (f"x^{a}" if a > 1 else "x" * a, f"y^{b}" if b > 1 else "y" * b)
            )
            parts.append(f"{c}" + ("*" + mono if mono else ""))
        return " + ".join(parts)


def reduce(curve: PlaneCurve, terms: Terms | Iterable[tuple[int, int, int]]) -> AlgebraElement:
    """Normal form of an arbitrary bivariate polynomial on the curve."""
    return curve.element(terms)


def weight(elem: AlgebraElement) -> int | float:
    return elem.weight()


def quotient_dimension(elem: AlgebraElement) -> int:
    """Dimension of R/<f> for a nonzero f, by truncated linear algebra.

    Every member of the ideal <f> with weight at most T = weight(f) +
    conductor is f times an element of weight at most conductor, so the
    ideal's intersection with the weight-T filtration is spanned by the
    products f * f_i over basis elements f_i of weight <= conductor.  The
    quotient dimension is then the monomial count of the filtration minus
    the rank of those products.
    """
    if elem.is_zero:
        raise ValueError("quotient by the zero element is the whole algebra")
    curve = elem.curve
    sg = curve.semigroup
    s = int(elem.weight())
    t = s + sg.conductor
    monos, _ = curve.basis_prefix(sg.index_of(t))
    col = {mono: i for i, mono in enumerate(monos)}
    mult_monos, _ = curve.basis_prefix(sg.index_of(sg.conductor))
    rows = []
    for a, b in mult_monos:
        prod = elem * curve.monomial(a, b)
        vec = [0] * len(col)
        for key, c in prod.terms.items():
            vec[col[key]] = c
        rows.append(vec)
    rank = Matrix(curve.spec, rows, cols=len(col)).rank()
    return len(col) - rank


def random_element(
    curve: PlaneCurve,
    rng: random.Random,
    max_weight: int = 12,
    max_terms: int = 4,
    nonzero: bool = False,
) -> AlgebraElement:
    """Random normal-form element supported on basis monomials of weight
    at most max_weight; used by the randomized verification suites."""
    sg = curve.semigroup
    top = sg.index_of(sg.elements_upto(max(max_weight, 0))[-1])
    while True:
        count = rng.randint(0 if not nonzero else 1, max_terms)
        terms: dict[tuple[int, int], int] = {}
        for _ in range(count):
            l = rng.randint(1, max(top, 1))
            mono = curve.monomial_for_rho(sg.nth(l))
            c = rng.randrange(1, curve.spec.q)
            terms[mono] = c
        if terms or not nonzero:
            return AlgebraElement(curve, terms)
