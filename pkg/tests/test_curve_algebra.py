import random

import pytest

from evalcodes.curve_algebra import (
    NEG_INF,
    curve_family_a,
    curve_family_b,
    quotient_dimension,
    random_element,
    reduce,
)
from evalcodes.errors import (
    CurveMismatchError,
    EvenCharacteristicError,
    EvenDegreeError,
    TailTooBigError,
)
from evalcodes.gf import field_new

GF4 = field_new(2, 2)
GF5 = field_new(5, 1)
GF7 = field_new(7, 1)


def hermitian():
    # x^3 + y^2 + y over GF(4): family A with m = 3, G = y
    return curve_family_a(GF4, 3, {(0, 1): 1})


def family_b_5():
    return curve_family_b(GF5, [1, 0, 0, 1])  # y^2 = x^3 + 1


def family_b_7():
    return curve_family_b(GF7, [1, 0, 0, 1])


# -- construction


def test_family_a_weights_and_semigroup():
    c = hermitian()
    assert (c.wx, c.wy) == (2, 3)
    assert c.semigroup.generators == (2, 3)
    assert c.genus() == 1


def test_family_a_empty_tail():
    c = curve_family_a(GF5, 3)
    assert (c.wx, c.wy) == (2, 3)
    assert c.tail == {}


def test_family_a_tail_too_big():
    with pytest.raises(TailTooBigError):
        curve_family_a(GF5, 3, {(2, 0): 1})  # x^2 has degree 2 >= m-1


def test_family_b_construction():
    c = family_b_5()
    assert (c.wx, c.wy) == (2, 3)
    assert c.genus() == 1


def test_family_b_even_characteristic_rejected():
    with pytest.raises(EvenCharacteristicError):
        curve_family_b(GF4, [1, 0, 0, 1])


def test_family_b_even_degree_rejected():
    with pytest.raises(EvenDegreeError):
        curve_family_b(GF7, [1, 0, 0, 0, 1])  # x^4


# -- reduction


def test_reduce_already_basic():
    c = hermitian()
    e = reduce(c, {(1, 1): 1})
    assert e.terms == {(1, 1): 1}


def test_reduce_hermitian_cube():
    # x^3 = -(y^2 + y) = y^2 + y in characteristic 2
    c = hermitian()
    e = reduce(c, {(3, 0): 1})
    assert e.terms == {(0, 2): 1, (0, 1): 1}


def test_reduce_family_b_square():
    c = family_b_5()
    e = reduce(c, {(0, 2): 1})
    assert e.terms == {(3, 0): 1, (0, 0): 1}  # x^3 + 1


def test_reduce_respects_ideal():
    # adding any multiple of the defining polynomial must not change the
    # normal form
    rng = random.Random(2)
    for curve in (hermitian(), family_b_5()):
        defining = curve.defining_terms()
        for _ in range(25):
            raw = {
                (rng.randrange(6), rng.randrange(6)): rng.randrange(1, curve.spec.q)
                for _ in range(3)
            }
            h = {(rng.randrange(3), rng.randrange(3)): rng.randrange(1, curve.spec.q)}
            shifted = dict(raw)
            f = curve.spec
            for (a1, b1), c1 in h.items():
                for (a2, b2), c2 in defining.items():
                    key = (a1 + a2, b1 + b2)
                    shifted[key] = f.add(shifted.get(key, 0), f.mul(c1, c2))
            assert reduce(curve, raw) == reduce(curve, shifted)


def test_reduce_is_ring_morphism():
    rng = random.Random(3)
    for curve in (hermitian(), family_b_5(), family_b_7()):
        for _ in range(30):
            a = random_element(curve, rng, max_weight=10)
            b = random_element(curve, rng, max_weight=10)
            ab = a * b
            # recompute by raw convolution then one reduction
            f = curve.spec
            conv = {}
            for (a1, b1), c1 in a.terms.items():
                for (a2, b2), c2 in b.terms.items():
                    key = (a1 + a2, b1 + b2)
                    conv[key] = f.add(conv.get(key, 0), f.mul(c1, c2))
            assert reduce(curve, conv) == ab


# -- weights


def test_weight_of_zero_and_constants():
    c = hermitian()
    assert c.zero().weight() == NEG_INF
    assert c.one().weight() == 0
    assert c.element({(0, 0): 3}).weight() == 0


def test_weight_of_reduced_cube():
    c = hermitian()
    e = reduce(c, {(3, 0): 1})
    assert e.weight() == 6  # max(weight(y^2)=6, weight(y)=3)


def test_weight_additive_on_products():
    rng = random.Random(5)
    for curve in (hermitian(), family_b_5(), family_b_7()):
        for _ in range(60):
            a = random_element(curve, rng, max_weight=14, nonzero=True)
            b = random_element(curve, rng, max_weight=14, nonzero=True)
            assert (a * b).weight() == a.weight() + b.weight()


# -- ordered basis


def test_basis_prefix_hermitian():
    c = hermitian()
    monos, rhos = c.basis_prefix(4)
    assert monos == [(0, 0), (1, 0), (0, 1), (2, 0)]  # 1, x, y, x^2
    assert rhos == [0, 2, 3, 4]


def test_basis_prefix_length_one():
    for curve in (hermitian(), family_b_5()):
        monos, rhos = curve.basis_prefix(1)
        assert monos == [(0, 0)]
        assert rhos == [0]


def test_basis_rhos_match_semigroup():
    for curve in (hermitian(), family_b_7(), curve_family_a(GF5, 4)):
        _, rhos = curve.basis_prefix(12)
        assert rhos == [curve.semigroup.nth(i) for i in range(1, 13)]


def test_l_index():
    c = hermitian()
    for j in range(1, 10):
        assert c.l_index(1, j) == j
    assert c.l_index(2, 2) == 4  # rho_2 = 2, 2 + 2 = 4 = rho_4


def test_l_index_monotone():
    for curve in (hermitian(), family_b_5()):
        for j in range(1, 13):
            for i in range(1, 12):
                assert curve.l_index(i, j) < curve.l_index(i + 1, j)


# -- order/weight function axioms on random elements


@pytest.mark.parametrize("make", [hermitian, family_b_5, family_b_7])
def test_order_function_axioms(make):
    curve = make()
    f = curve.spec
    rng = random.Random(hash(curve.family) % 1000 + curve.spec.q)
    for _ in range(250):
        a = random_element(curve, rng, max_weight=12)
        b = random_element(curve, rng, max_weight=12)
        # axiom: only zero has weight -inf
        assert (a.weight() == NEG_INF) == a.is_zero
        # axiom: scaling by a nonzero constant preserves weight
        lam = rng.randrange(1, f.q)
        assert a.scale(lam).weight() == a.weight()
        # axiom: ultrametric-style bound for sums
        s = (a + b).weight()
        assert s <= max(a.weight(), b.weight())
        if a.weight() != b.weight():
            assert s == max(a.weight(), b.weight())
        # axiom: strict monotonicity under multiplication
        h = random_element(curve, rng, max_weight=9, nonzero=True)
        if a.weight() < b.weight():
            assert (a * h).weight() < (b * h).weight()
        # axiom: equal nonzero weights cancel for a unique scalar
        if not a.is_zero and not b.is_zero and a.weight() == b.weight():
            la = a.terms[a.leading_monomial()]
            lb = b.terms[b.leading_monomial()]
            lam = f.mul(la, f.inv(lb))
            assert (a - b.scale(lam)).weight() < b.weight()
            others = [
                t for t in range(1, f.q) if t != lam and (a - b.scale(t)).weight() < b.weight()
            ]
            assert not others


def test_constants_are_the_low_weight_elements():
    rng = random.Random(11)
    for curve in (hermitian(), family_b_5()):
        for _ in range(50):
            e = random_element(curve, rng, max_weight=9, nonzero=True)
            assert (e.weight() <= 0) == (set(e.terms) == {(0, 0)})


# -- quotient dimension


def test_quotient_dimension_equals_weight():
    rng = random.Random(13)
    for curve in (hermitian(), family_b_5(), family_b_7()):
        for _ in range(12):
            e = random_element(curve, rng, max_weight=12, nonzero=True)
            assert quotient_dimension(e) == e.weight()
    with pytest.raises(ValueError):
        quotient_dimension(hermitian().zero())


# -- misc


def test_cross_curve_operations_rejected():
    a = hermitian().one()
    b = family_b_5().one()
    with pytest.raises(CurveMismatchError):
        a + b


def test_evaluate_element():
    c = family_b_5()
    e = c.element({(1, 0): 2, (0, 1): 1})  # 2x + y
    assert e.evaluate(1, 3) == (2 * 1 + 3) % 5
