import random

import pytest

from evalcodes.curve_algebra import curve_family_a, curve_family_b, random_element
from evalcodes.errors import (
    CurveMismatchError,
    DegreeOutOfRangeError,
    IndexOutOfRangeError,
    NotInSemigroupError,
    TrivialCodeError,
)
from evalcodes.gf import field_new
from evalcodes.evaluation_code import (
    dual_eval_code,
    eval_code,
    evaluate,
    interpolation_unit,
    one_point_goppa_params,
    rational_points,
)
from evalcodes.linear import weight

GF4 = field_new(2, 2)
GF5 = field_new(5, 1)
GF7 = field_new(7, 1)


def hermitian():
    return curve_family_a(GF4, 3, {(0, 1): 1})


def b_curve_7():
    return curve_family_b(GF7, [1, 0, 0, 1])  # y^2 = x^3 + 1


# -- rational points


def test_hermitian_has_eight_points():
    pts = rational_points(hermitian())
    assert len(pts) == 8
    f = GF4
    for x, y in pts:
        lhs = f.add(f.add(f.pow(x, 3), f.pow(y, 2)), y)
        assert lhs == 0
    assert len(set(pts.points)) == 8
    assert list(pts.points) == sorted(pts.points)


def test_b_curve_points_by_direct_scan():
    curve = b_curve_7()
    pts = rational_points(curve)
    expected = []
    for x in range(7):
        for y in range(7):
            if (y * y - (x**3 + 1)) % 7 == 0:
                expected.append((x, y))
    assert list(pts.points) == expected


# -- evaluation morphism


def test_evaluate_constant_is_all_ones():
    curve = hermitian()
    pts = rational_points(curve)
    assert evaluate(curve.one(), pts) == tuple([1] * 8)


def test_evaluate_x_gives_x_coordinates():
    curve = hermitian()
    pts = rational_points(curve)
    assert evaluate(curve.monomial(1, 0), pts) == tuple(x for x, _ in pts)


def test_evaluate_is_multiplicative():
    rng = random.Random(19)
    for curve in (hermitian(), b_curve_7()):
        pts = rational_points(curve)
        f = curve.spec
        for _ in range(40):
            a = random_element(curve, rng, max_weight=12)
            b = random_element(curve, rng, max_weight=12)
            va, vb = evaluate(a, pts), evaluate(b, pts)
            vab = evaluate(a * b, pts)
            assert vab == tuple(f.mul(u, v) for u, v in zip(va, vb))


def test_evaluate_curve_mismatch():
    with pytest.raises(CurveMismatchError):
        evaluate(hermitian().one(), rational_points(b_curve_7()))


# -- interpolation units


def test_interpolation_units_hermitian():
    curve = hermitian()
    pts = rational_points(curve)
    for i in (1, 3, 8):
        u = interpolation_unit(pts, i)
        vals = evaluate(u, pts)
        assert vals == tuple(1 if j == i - 1 else 0 for j in range(len(pts)))
    with pytest.raises(IndexOutOfRangeError):
        interpolation_unit(pts, 9)


def test_interpolation_units_span_full_space():
    curve = b_curve_7()
    pts = rational_points(curve)
    from evalcodes.linear import Matrix

    rows = [list(evaluate(interpolation_unit(pts, i), pts)) for i in range(1, len(pts) + 1)]
    assert Matrix(curve.spec, rows).rank() == len(pts)


def test_single_point_unit_is_constant_one():
    curve = hermitian()
    pts = rational_points(curve).prefix(1)
    u = interpolation_unit(pts, 1)
    assert evaluate(u, pts) == (1,)


# -- evaluation codes


def test_eval_code_l1_is_repetition():
    curve = hermitian()
    pts = rational_points(curve)
    ec = eval_code(curve, pts, 1)
    assert ec.rank == 1
    assert ec.d_designed == 8
    assert ec.code.min_distance() == 8


def test_hermitian_l4_code():
    curve = hermitian()
    pts = rational_points(curve)
    ec = eval_code(curve, pts, 4)
    assert (ec.n, ec.rank) == (8, 4)
    assert ec.k_designed == 4
    assert ec.d_designed == 8 - 4
    assert ec.code.min_distance() >= 4


def test_designed_dimension_attained_below_n():
    curve = hermitian()
    pts = rational_points(curve)
    for l in range(1, 8):  # rho_l = 0,2,3,4,5,6,7 all below n = 8
        ec = eval_code(curve, pts, l)
        assert ec.rank == l
        assert ec.code.min_distance() >= ec.d_designed
        assert ec.code.min_distance() >= ec.genus_bound


def test_large_l_reports_rank_honestly():
    curve = hermitian()
    pts = rational_points(curve)
    ec = eval_code(curve, pts, 20)  # rho_20 = 20 >= n: no designed params
    assert ec.k_designed is None and ec.d_designed is None
    assert ec.rank == 8  # evaluation is surjective; E_l fills the space


def test_nested_codes_and_duals():
    curve = hermitian()
    pts = rational_points(curve)
    prev_rows = None
    prev_dual_dim = None
    for l in range(1, 10):
        ec = eval_code(curve, pts, l)
        if prev_rows is not None:
            # every earlier generator row reappears: E_l is nested
            assert all(r in ec.eval_matrix.data for r in prev_rows)
            assert ec.dual_dimension() <= prev_dual_dim
        prev_rows = ec.eval_matrix.data
        prev_dual_dim = ec.dual_dimension()


def test_dual_eval_code():
    curve = hermitian()
    pts = rational_points(curve)
    ec = eval_code(curve, pts, 4)
    dual = dual_eval_code(ec)
    assert dual.k == 4
    prod = dual.generator.mul(ec.eval_matrix.transpose())
    assert all(v == 0 for row in prod.data for v in row)
    full = eval_code(curve, pts, 20)
    with pytest.raises(TrivialCodeError):
        dual_eval_code(full)


def test_zero_count_bounded_by_weight():
    rng = random.Random(29)
    for curve in (hermitian(), b_curve_7()):
        pts = rational_points(curve)
        for _ in range(200):
            e = random_element(curve, rng, max_weight=14, nonzero=True)
            zeros = sum(1 for v in evaluate(e, pts) if v == 0)
            assert zeros <= e.weight()


# -- one-point correspondence


def test_one_point_params_matches_eval_code():
    curve = b_curve_7()
    pts = rational_points(curve)
    n = len(pts)
    gp = one_point_goppa_params(curve, pts, 4)
    assert gp.k == 4 + 1 - 1  # lm + 1 - (m-1)/2 with m = 3
    assert gp.d_designed == n - 4
    ec = eval_code(curve, pts, gp.k)
    assert ec.k_designed == gp.k
    assert ec.d_designed == gp.d_designed


def test_one_point_params_errors():
    curve = b_curve_7()
    pts = rational_points(curve)
    n = len(pts)
    with pytest.raises(DegreeOutOfRangeError):
        one_point_goppa_params(curve, pts, n)
    with pytest.raises(DegreeOutOfRangeError):
        one_point_goppa_params(curve, pts, 3)  # lm must exceed m
    # every integer above m lies in <2, m>, so the semigroup guard can only
    # fire on inputs already rejected by the degree check
    assert all(lm in curve.semigroup for lm in range(curve.m + 1, n))
    with pytest.raises(CurveMismatchError):
        one_point_goppa_params(hermitian(), rational_points(hermitian()), 4)


def test_weight_one_error_changes_syndrome():
    curve = hermitian()
    pts = rational_points(curve)
    ec = eval_code(curve, pts, 4)
    w = ec.code.encode((1, 0, 2, 3))
    recv = list(w)
    recv[2] = curve.spec.add(recv[2], 1)
    assert ec.code.decode(tuple(recv)) == w
