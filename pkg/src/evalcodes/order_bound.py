"""The order bound on the minimum distance of the duals C_l, plus the
syndrome-matrix machinery behind it.

nu_l counts ordered pairs of basis indices whose weights sum to the
(l+1)-th semigroup element; d(l) = min over m >= l of nu_m is a lower
bound for d(C_l), and d_phi(l) restricts the min to indices where the
dual chain actually drops.  The infinite min in d(l) is made computable
by a verified tail: once rho_{m+1} >= 2c - 1 every pair sum splits off a
gap-free complement, nu_m equals rho_{m+1} + 1 - 2g, and the sequence is
nondecreasing.  That closed form is checked on the inspected window and
the computation refuses to answer rather than trust it blindly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .curve_algebra import PlaneCurve
from .errors import HorizonTooSmallError, LengthMismatchError, TrivialCodeError
from .evaluation_code import PointSet, evaluate, interpolation_unit
from .linear import Matrix, Vector


def nu(curve: PlaneCurve, l: int) -> int:
    """Number of ordered semigroup pairs summing to the (l+1)-th element."""
    if l < 0:
        raise ValueError(f"nu is defined for l >= 0, got {l}")
    sg = curve.semigroup
    t = sg.nth(l + 1)
    return sum(1 for a in sg.elements_upto(t) if (t - a) in sg)


def nu_pairs(curve: PlaneCurve, l: int) -> list[tuple[int, int]]:
    """The pairs behind nu(curve, l) as 1-based basis indices (i, j) with
    rho_i + rho_j = rho_{l+1}, in lexicographic order."""
    sg = curve.semigroup
    t = sg.nth(l + 1)
    out = []
    for a in sg.elements_upto(t):
        if (t - a) in sg:
            out.append((sg.index_of(a), sg.index_of(t - a)))
    return out


def nu_sequence(curve: PlaneCurve, upto: int) -> list[int]:
    return [nu(curve, l) for l in range(1, upto + 1)]


def _tail_start(curve: PlaneCurve, l: int) -> int:
    """First index m >= l where the closed-form tail regime begins."""
    sg = curve.semigroup
    threshold = 2 * sg.conductor - 1
    m = l
    while sg.nth(m + 1) < threshold:
        m += 1
    return m


def _check_tail(curve: PlaneCurve, start: int, horizon: int) -> None:
    sg = curve.semigroup
    g = sg.genus
    prev = None
    for m in range(start, horizon + 1):
        v = nu(curve, m)
        if v != sg.nth(m + 1) + 1 - 2 * g or (prev is not None and v < prev):
            raise HorizonTooSmallError(
                f"nu-sequence is not in its verified monotone regime at m={m}"
            )
        prev = v


def order_bound_d(curve: PlaneCurve, l: int, horizon: int | None = None) -> int:
    """d(l): the minimum of nu_m over all m >= l.

    The window [l, horizon] must reach the verified monotone tail (the
    default horizon is the smallest that does); past the window the
    nu-sequence only grows, so the windowed minimum is the true infimum.
    """
    if l < 1:
        raise ValueError(f"order bound needs l >= 1, got {l}")
    start = _tail_start(curve, l)
    if horizon is None:
        horizon = start
    if horizon < start:
        raise HorizonTooSmallError(
            f"horizon {horizon} stops before the monotone tail at {start}"
        )
    _check_tail(curve, start, horizon)
    return min(nu(curve, m) for m in range(l, horizon + 1))


def eval_ranks(curve: PlaneCurve, pts: PointSet, upto: int) -> list[int]:
    """Ranks of E_1 .. E_upto, computed by inserting one basis row at a
    time into a row-reduced accumulator."""
    f = curve.spec
    n = len(pts)
    monos, _ = curve.basis_prefix(upto)
    reduced: list[list[int]] = []
    ranks = []
    for a, b in monos:
        row = list(evaluate(curve.monomial(a, b), pts))
        for r in reduced:
            lead = next(j for j, v in enumerate(r) if v)
            if row[lead]:
                c = f.mul(row[lead], f.inv(r[lead]))
                row = [f.sub(x, f.mul(c, y)) for x, y in zip(row, r)]
        if any(row):
            reduced.append(row)
        ranks.append(len(reduced))
        if len(reduced) == n:
            # the chain has stabilized; later rows cannot add rank
            remaining = upto - len(ranks)
            ranks.extend([n] * remaining)
            break
    return ranks


@lru_cache(maxsize=None)
def stabilization_index(curve: PlaneCurve, pts: PointSet) -> int:
    """Smallest N with rank(E_N) = n.

    Surjectivity of evaluation puts every interpolation unit in some
    filtration level, so the largest unit weight caps the search."""
    sg = curve.semigroup
    n = len(pts)
    cap = max(
        sg.index_of(int(interpolation_unit(pts, i).weight())) for i in range(1, n + 1)
    )
    ranks = eval_ranks(curve, pts, cap)
    return next(i + 1 for i, r in enumerate(ranks) if r == n)


def order_bound_dphi(
    curve: PlaneCurve, pts: PointSet, l: int, horizon: int | None = None
) -> int:
    """d_phi(l): minimum of nu_m over m >= l where C_m != C_{m+1}.

    The duals strictly shrink exactly where the ranks of E_m grow, and
    never change once E_m fills the space, so the index set is finite;
    the horizon must reach the stabilization index to certify it."""
    if l < 1:
        raise ValueError(f"order bound needs l >= 1, got {l}")
    stab = stabilization_index(curve, pts)
    if horizon is None:
        horizon = stab
    if horizon < stab:
        raise HorizonTooSmallError(
            f"horizon {horizon} stops before the dual chain stabilizes at {stab}"
        )
    ranks = eval_ranks(curve, pts, stab)
    changes = [m for m in range(l, stab) if ranks[m - 1] != ranks[m]]
    if not changes:
        raise TrivialCodeError(f"C_{l} is the zero code; no bound to compute")
    return min(nu(curve, m) for m in changes)


@dataclass(frozen=True)
class SyndromeMatrix:
    """Gram-style syndrome matrix of a received vector y: entry (i, j) is
    the inner product of y with the coordinatewise product h_i * h_j."""

    y: Vector
    h: Matrix
    matrix: Matrix

    def rank(self) -> int:
        return self.matrix.rank()


def matrix_h(curve: PlaneCurve, pts: PointSet, height: int) -> Matrix:
    monos, _ = curve.basis_prefix(height)
    rows = [list(evaluate(curve.monomial(a, b), pts)) for a, b in monos]
    return Matrix(curve.spec, rows, cols=len(pts))


def syndrome_matrix(
    y: Sequence[int], curve: PlaneCurve, pts: PointSet, height: int | None = None
) -> SyndromeMatrix:
    """Build S(y) = H D(y) H^t from the first `height` basis rows.

    The default height is the stabilization index, the smallest giving H
    full column rank n; with that choice rank(S(y)) equals the weight of
    y exactly."""
    n = len(pts)
    if len(y) != n:
        raise LengthMismatchError(f"vector length {len(y)} != {n} points")
    if height is None:
        height = stabilization_index(curve, pts)
    h = matrix_h(curve, pts, height)
    f = curve.spec
    yl = list(y)
    s = [[0] * height for _ in range(height)]
    for i in range(height):
        hi = h.data[i]
        for j in range(i, height):
            hj = h.data[j]
            acc = 0
            for t in range(n):
                if yl[t] and hi[t] and hj[t]:
                    acc = f.add(acc, f.mul(yl[t], f.mul(hi[t], hj[t])))
            s[i][j] = s[j][i] = acc
    return SyndromeMatrix(y=tuple(yl), h=h, matrix=Matrix(f, s, cols=height))


def dual_gap_vector(curve: PlaneCurve, pts: PointSet, l: int) -> Vector | None:
    """Some y in C_l but not in C_{l+1}, or None when the two duals agree.

    C_{l+1} cuts C_l by the extra orthogonality constraint against the
    (l+1)-th evaluation row, so a basis search over C_l decides."""
    f = curve.spec
    em = matrix_h(curve, pts, l)
    nxt_mono = curve.basis_prefix(l + 1)[0][-1]
    nxt = evaluate(curve.monomial(*nxt_mono), pts)
    for row in em.null_space().data:
        acc = 0
        for a, b in zip(row, nxt):
            if a and b:
                acc = f.add(acc, f.mul(a, b))
        if acc:
            return tuple(row)
    return None
