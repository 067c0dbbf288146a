"""Evaluation codes on the rational points of a plane curve.

E_l is the image of the span of the first l weight-ordered basis monomials
under pointwise evaluation; C_l denotes its dual.  When the l-th weight is
below the point count n, the designed dimension l and designed distance
n - rho_l are guaranteed; past that threshold the code is still built and
its rank reported honestly, but the designed parameters are left unset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curve_algebra import AlgebraElement, PlaneCurve
from .errors import (
    CurveMismatchError,
    DegreeOutOfRangeError,
    EmptyPointsError,
    IndexOutOfRangeError,
    NoPointsError,
    NotInSemigroupError,
    TrivialCodeError,
)
from .linear import LinearCode, Matrix, Vector


class PointSet:
    """Distinct affine rational points of one curve, in a fixed order."""

    __slots__ = ("curve", "points")

    def __init__(self, curve: PlaneCurve, points: Sequence[tuple[int, int]]):
        self.curve = curve
        self.points = tuple((int(x), int(y)) for x, y in points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i: int) -> tuple[int, int]:
        return self.points[i]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PointSet)
            and self.curve == other.curve
            and self.points == other.points
        )

    def __hash__(self) -> int:
        return hash((self.curve, self.points))

    def __repr__(self) -> str:
        return f"PointSet({len(self.points)} points on {self.curve!r})"

    def prefix(self, n: int) -> "PointSet":
        if not 1 <= n <= len(self.points):
            raise IndexOutOfRangeError(f"cannot take {n} of {len(self.points)} points")
        return PointSet(self.curve, self.points[:n])


def rational_points(curve: PlaneCurve) -> PointSet:
    """All affine points with coordinates in the field that satisfy the
    curve equation, ordered lexicographically by (x, y) encoding."""
    f = curve.spec
    defining = curve.defining_terms()
    pts = []
    for x in range(f.q):
        xpow = [f.pow(x, a) for a in range(max(a for a, _ in defining) + 1)]
        for y in range(f.q):
            acc = 0
            for (a, b), c in defining.items():
                acc = f.add(acc, f.mul(c, f.mul(xpow[a], f.pow(y, b))))
            if acc == 0:
                pts.append((x, y))
    if not pts:
        raise NoPointsError(f"{curve!r} has no affine rational points")
    return PointSet(curve, pts)


def evaluate(elem: AlgebraElement, pts: PointSet) -> Vector:
    """Pointwise values of an algebra element along the point set.

    Well defined on cosets of the curve ideal, and multiplicative:
    the values of a product are the coordinatewise products."""
    if elem.curve != pts.curve:
        raise CurveMismatchError("element and point set live on different curves")
    f = elem.curve.spec
    if not elem.terms:
        return tuple([0] * len(pts))
    max_a = max(a for a, _ in elem.terms)
    max_b = max(b for _, b in elem.terms)
    out = []
    for x, y in pts:
        xpow = [1]
        for _ in range(max_a):
            xpow.append(f.mul(xpow[-1], x))
        ypow = [1]
        for _ in range(max_b):
            ypow.append(f.mul(ypow[-1], y))
        acc = 0
        for (a, b), c in elem.terms.items():
            acc = f.add(acc, f.mul(c, f.mul(xpow[a], ypow[b])))
        out.append(acc)
    return tuple(out)


def interpolation_unit(pts: PointSet, i: int) -> AlgebraElement:
    """Element evaluating to the i-th standard unit vector (i is
    1-indexed).

    For each coordinate axis, take the product of (axis - a) over every
    value a that other points use but point i does not; the product
    vanishes at all other points, and is scaled to 1 at point i.  The
    existence of these units makes evaluation surjective.
    """
    n = len(pts)
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"unit index {i} out of 1..{n}")
    curve = pts.curve
    f = curve.spec
    target = pts[i - 1]
    unit = curve.one()
    for axis in (0, 1):
        var = curve.monomial(1, 0) if axis == 0 else curve.monomial(0, 1)
        others = {p[axis] for p in pts} - {target[axis]}
        for a in sorted(others):
            unit = unit * (var - curve.element({(0, 0): a}))
    value = unit.evaluate(*target)
    return unit.scale(f.inv(value))


@dataclass(frozen=True)
class EvalCode:
    """Evaluation code E_l with its designed and actual parameters."""

    curve: PlaneCurve
    pts: PointSet
    l: int
    rhos: tuple[int, ...]
    eval_matrix: Matrix  # rows: values of f_1 .. f_l, as given (may be dependent)
    rank: int
    code: LinearCode  # span of the rows
    k_designed: int | None
    d_designed: int | None

    @property
    def n(self) -> int:
        return len(self.pts)

    @property
    def genus_bound(self) -> int:
        """Lower bound n + 1 - k - g on the distance, via the gap count."""
        return self.n + 1 - self.rank - self.curve.genus()

    def dual_matrix(self) -> Matrix:
        """Basis (rows) of the dual code C_l; may have zero rows."""
        return self.eval_matrix.null_space()

    def dual_dimension(self) -> int:
        return self.n - self.rank

    def __repr__(self) -> str:
        return f"EvalCode(l={self.l}, [{self.n},{self.rank}] over {self.curve.spec!r})"


def eval_code(curve: PlaneCurve, pts: PointSet, l: int) -> EvalCode:
    """Code spanned by the values of the first l basis monomials."""
    if curve != pts.curve:
        raise CurveMismatchError("curve and point set disagree")
    n = len(pts)
    if n == 0:
        raise EmptyPointsError("no evaluation points")
    monos, rhos = curve.basis_prefix(l)
    rows = [list(evaluate(curve.monomial(a, b), pts)) for a, b in monos]
    em = Matrix(curve.spec, rows, cols=n)
    basis = em.row_space_basis()
    rank = basis.rows
    code = LinearCode._make(basis)
    designed = rhos[-1] < n
    return EvalCode(
        curve=curve,
        pts=pts,
        l=l,
        rhos=tuple(rhos),
        eval_matrix=em,
        rank=rank,
        code=code,
        k_designed=l if designed else None,
        d_designed=n - rhos[-1] if designed else None,
    )


def dual_eval_code(ec: EvalCode) -> LinearCode:
    """The dual code C_l as a linear code; fails when E_l already fills
    the whole space (the dual would be the zero code)."""
    dm = ec.dual_matrix()
    if dm.rows == 0:
        raise TrivialCodeError("E_l spans the full space; its dual is the zero code")
    return LinearCode._make(dm)


@dataclass(frozen=True)
class GoppaParams:
    """Designed parameters of a one-point code of degree lm at a family-B
    curve, together with the basis index realizing them."""

    n: int
    lm: int
    k: int
    d_designed: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n, self.k, self.d_designed)


def one_point_goppa_params(curve: PlaneCurve, pts: PointSet, lm: int) -> GoppaParams:
    """Parameters of the degree-lm one-point code on a family-B curve.

    k = lm + 1 - (m-1)/2 and d >= n - lm; the returned k equals the basis
    index whose weight is lm, so the same parameters are produced by
    eval_code(curve, pts, k).
    """
    if curve.family != "B":
        raise CurveMismatchError("one-point correspondence is stated for family B curves")
    if curve != pts.curve:
        raise CurveMismatchError("curve and point set disagree")
    n = len(pts)
    m = curve.m
    if not m < lm < n:
        raise DegreeOutOfRangeError(f"need m < lm < n, got m={m}, lm={lm}, n={n}")
    sg = curve.semigroup
    if lm not in sg:
        raise NotInSemigroupError(f"{lm} is not in the weight semigroup {sg!r}")
    k_index = sg.index_of(lm)
    k_formula = lm + 1 - (m - 1) // 2
    assert k_index == k_formula, (k_index, k_formula)
    ec = eval_code(curve, pts, k_index)
    assert ec.k_designed == k_index and ec.d_designed == n - lm
    return GoppaParams(n=n, lm=lm, k=k_index, d_designed=n - lm)
