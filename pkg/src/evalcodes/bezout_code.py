"""Codes from bivariate polynomials of bounded total degree evaluated at
rational points of a plane curve of degree m.

With n > l*m points, the intersection count of two plane curves bounds
both the distance (d >= n - lm) and the kernel of evaluation (multiples of
the curve polynomial), which yields the designed dimension: C(l+2, 2) when
l < m, else lm + 1 - C(m-1, 2).  The designed dimension is compared
against the evaluation-matrix rank rather than assumed: the parameter
theorem needs the curve polynomial irreducible over the algebraic closure,
which is not certified here, so a rank mismatch flags the instance instead
of passing silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import BezoutHypothesisViolatedError, PointOffCurveError
from .gf import FieldSpec
from .linear import LinearCode, Matrix

Terms = Mapping[tuple[int, int], int]


def vl_basis(l: int) -> list[tuple[int, int]]:
    """Exponent pairs of all monomials with total degree <= l, graded
    (degree by degree), x-power descending inside a degree; the count is
    (l+1)(l+2)/2."""
    if l < 0:
        raise ValueError(f"total degree bound must be >= 0, got {l}")
    return [(d - b, b) for d in range(l + 1) for b in range(d + 1)]


def total_degree(terms: Terms) -> int:
    nonzero = [(a, b) for (a, b), c in terms.items() if c]
    if not nonzero:
        raise ValueError("the zero polynomial has no total degree")
    return max(a + b for a, b in nonzero)


def _eval_terms(spec: FieldSpec, terms: Terms, x: int, y: int) -> int:
    acc = 0
    for (a, b), c in terms.items():
        if c:
            acc = spec.add(acc, spec.mul(c, spec.mul(spec.pow(x, a), spec.pow(y, b))))
    return acc


@dataclass(frozen=True)
class BezoutCode:
    """Evaluation of all total-degree-<= l polynomials at n curve points."""

    spec: FieldSpec
    l: int
    m: int  # total degree of the curve polynomial
    n: int
    monomials: tuple[tuple[int, int], ...]
    eval_matrix: Matrix
    k_designed: int
    k_actual: int
    code: LinearCode
    d_designed: int

    @property
    def designed_k_attained(self) -> bool:
        return self.k_designed == self.k_actual


def designed_dimension(l: int, m: int) -> int:
    if l < m:
        return math.comb(l + 2, 2)
    return l * m + 1 - math.comb(m - 1, 2)


def bezout_code(
    spec: FieldSpec,
    curve_terms: Terms,
    points: Sequence[tuple[int, int]],
    l: int,
) -> BezoutCode:
    """Build the code of V_l evaluations at rational points of the curve.

    Requires n > l*m and each point on the curve; reports the designed
    dimension next to the actual rank instead of trusting it.
    """
    m = total_degree(curve_terms)
    n = len(points)
    if n <= l * m:
        raise BezoutHypothesisViolatedError(f"need n > l*m, got n={n}, l*m={l * m}")
    for x, y in points:
        if _eval_terms(spec, curve_terms, x, y) != 0:
            raise PointOffCurveError(f"({x}, {y}) does not satisfy the curve equation")
    monos = vl_basis(l)
    rows = []
    for a, b in monos:
        rows.append([spec.mul(spec.pow(x, a), spec.pow(y, b)) for x, y in points])
    em = Matrix(spec, rows, cols=n)
    basis = em.row_space_basis()
    code = LinearCode._make(basis)
    return BezoutCode(
        spec=spec,
        l=l,
        m=m,
        n=n,
        monomials=tuple(monos),
        eval_matrix=em,
        k_designed=designed_dimension(l, m),
        k_actual=basis.rows,
        code=code,
        d_designed=n - l * m,
    )
