import random
from itertools import combinations, product

import pytest

from evalcodes.errors import (
    BudgetExceededError,
    EvenDistanceError,
    LengthMismatchError,
    RankDeficientError,
    TrivialCodeError,
)
from evalcodes.gf import field_new
from evalcodes.linear import LinearCode, Matrix, code_from_generator, hamming, weight

GF2 = field_new(2, 1)
GF4 = field_new(2, 2)
GF5 = field_new(5, 1)


def random_code(spec, n, k, rng):
    """Random full-rank k x n generator over spec."""
    while True:
        g = Matrix(spec, [[rng.randrange(spec.q) for _ in range(n)] for _ in range(k)])
        if g.rank() == k:
            return LinearCode.from_generator(g)


# -- hamming / weight


def test_hamming_basic():
    assert hamming((0, 1, 2), (0, 1, 2)) == 0
    assert hamming((0, 0, 0), (1, 0, 1)) == 2
    assert weight((1, 0, 1)) == 2
    with pytest.raises(LengthMismatchError):
        hamming((0, 1), (0, 1, 2))


def test_hamming_triangle_inequality():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randrange(1, 10)
        x, y, z = (tuple(rng.randrange(4) for _ in range(n)) for _ in range(3))
        assert hamming(x, z) <= hamming(x, y) + hamming(y, z)


# -- construction


def test_repetition_code():
    c = code_from_generator(Matrix(GF2, [[1, 1, 1]]))
    assert (c.n, c.k) == (3, 1)
    assert c.min_distance() == 3


def test_rank_deficient_rejected():
    with pytest.raises(RankDeficientError):
        code_from_generator(Matrix(GF2, [[1, 0, 1], [1, 0, 1]]))


def test_trivial_code_rejected():
    with pytest.raises(TrivialCodeError):
        code_from_generator(Matrix(GF2, [[1, 0], [0, 1]]))  # k = n


# -- standard form / parity check / dual


def test_standard_form_identity_permutation():
    g = Matrix(GF2, [[1, 0, 1, 1], [0, 1, 0, 1]])
    c = code_from_generator(g)
    std, perm = c.standard_form()
    assert perm == (0, 1, 2, 3)
    assert std.data == g.data


def test_standard_form_needs_column_swap():
    g = Matrix(GF2, [[0, 1, 1]])
    c = code_from_generator(g)
    std, perm = c.standard_form()
    assert perm != (0, 1, 2)
    assert std.data[0][0] == 1


def test_parity_check_annihilates_generator():
    rng = random.Random(11)
    for spec in (GF2, GF4, GF5):
        for _ in range(10):
            n = rng.randrange(3, 8)
            k = rng.randrange(1, n)
            c = random_code(spec, n, k, rng)
            h = c.parity_check()
            assert h.rows == n - k
            assert h.rank() == n - k
            prod = h.mul(c.generator.transpose())
            assert all(v == 0 for row in prod.data for v in row)


def test_parity_check_repetition():
    c = code_from_generator(Matrix(GF2, [[1, 1, 1]]))
    h = c.parity_check()
    assert h.rows == 2 and h.rank() == 2
    assert all(v == 0 for v in h.matvec((1, 1, 1)))


def test_dual_of_repetition_is_even_weight_code():
    c = code_from_generator(Matrix(GF2, [[1, 1, 1]]))
    d = c.dual()
    assert (d.n, d.k) == (3, 2)
    for w in d.codewords():
        assert weight(w) % 2 == 0


def test_bidual_is_same_row_space():
    rng = random.Random(23)
    for _ in range(10):
        c = random_code(GF4, 6, rng.randrange(1, 6), rng)
        dd = c.dual().dual()
        assert dd.generator.row_space_basis() == c.generator.row_space_basis()
        assert c.k + c.dual().k == c.n


# -- syndromes


def test_codeword_syndrome_is_zero():
    rng = random.Random(5)
    c = random_code(GF5, 6, 3, rng)
    for _ in range(20):
        msg = tuple(rng.randrange(5) for _ in range(3))
        assert not any(c.syndrome(c.encode(msg)))


def test_equal_syndrome_iff_difference_in_code():
    rng = random.Random(6)
    c = random_code(GF2, 6, 3, rng)
    for _ in range(200):
        x = tuple(rng.randrange(2) for _ in range(6))
        y = tuple(rng.randrange(2) for _ in range(6))
        diff = tuple(c.spec.sub(a, b) for a, b in zip(x, y))
        assert (c.syndrome(x) == c.syndrome(y)) == c.contains(diff)


def test_weight_one_error_has_nonzero_syndrome():
    c = code_from_generator(Matrix(GF2, [[1, 1, 1]]))
    assert any(c.syndrome((1, 0, 0)))


# -- minimum distance


def test_min_distance_equals_min_pairwise_distance():
    rng = random.Random(31)
    for spec, n in ((GF2, 7), (GF4, 5), (GF5, 4)):
        c = random_code(spec, n, 2, rng)
        words = list(c.codewords())
        pairwise = min(hamming(a, b) for a, b in combinations(words, 2))
        assert c.min_distance() == pairwise


def test_singleton_bound():
    rng = random.Random(37)
    for _ in range(20):
        n = rng.randrange(3, 8)
        k = rng.randrange(1, n)
        c = random_code(GF4, n, k, rng)
        assert c.min_distance() <= n - k + 1


def test_distance_from_parity_column_dependencies():
    # any d-1 columns of H independent, some d columns dependent
    rng = random.Random(41)
    for _ in range(8):
        n = rng.randrange(4, 7)
        k = rng.randrange(1, n - 1)
        c = random_code(GF2, n, k, rng)
        d = c.min_distance()
        h = c.parity_check()
        cols = [h.column(j) for j in range(n)]
        for subset in combinations(range(n), d - 1):
            sub = Matrix(GF2, [cols[j] for j in subset], cols=h.rows)
            assert sub.rank() == d - 1
        assert any(
            Matrix(GF2, [cols[j] for j in subset], cols=h.rows).rank() < d
            for subset in combinations(range(n), d)
        )


def test_budget_exceeded():
    rng = random.Random(43)
    c = random_code(GF5, 6, 4, rng)
    with pytest.raises(BudgetExceededError):
        c.min_distance(budget=100)


# -- decoding


def test_decode_codeword_is_identity():
    rng = random.Random(47)
    c = random_code(GF4, 6, 2, rng)
    for _ in range(20):
        w = c.encode(tuple(rng.randrange(4) for _ in range(2)))
        assert c.decode(w) == w


def test_decode_single_error_on_repetition():
    c = code_from_generator(Matrix(GF2, [[1, 1, 1]]))
    assert c.decode((1, 0, 0)) == (0, 0, 0)
    assert c.decode((1, 1, 0)) == (1, 1, 1)


def test_decode_corrects_up_to_half_distance():
    rng = random.Random(53)
    for spec, n, k in ((GF2, 7, 3), (GF4, 6, 2)):
        c = random_code(spec, n, k, rng)
        d = c.min_distance()
        e = (d - 1) // 2
        if e == 0:
            continue
        for _ in range(50):
            w = c.encode(tuple(rng.randrange(spec.q) for _ in range(k)))
            pos = rng.sample(range(n), e)
            err = list(w)
            for pt in pos:
                err[pt] = spec.add(err[pt], rng.randrange(1, spec.q))
            assert c.decode(tuple(err)) == w


def test_coset_leader_tie_break_is_lexicographic():
    # [2,1] code over GF(2) generated by (1,1): coset of syndrome of (0,1)
    # contains (0,1) and (1,0), both weight 1: leader must be (0,1).
    c = LinearCode._make(Matrix(GF2, [[1, 1]]))
    table = c.coset_leader_table()
    s = c.syndrome((0, 1))
    assert table[s] == (0, 1)


# -- perfect codes


def test_perfect_codes():
    rep3 = code_from_generator(Matrix(GF2, [[1, 1, 1]]))
    assert rep3.is_perfect(3) is True
    rep5 = code_from_generator(Matrix(GF2, [[1, 1, 1, 1, 1]]))
    # spheres of radius 2: 1 + 5 + 10 = 16; 16 * 2 = 2^5, so perfect
    assert rep5.is_perfect(5) is True
    rep4 = code_from_generator(Matrix(GF2, [[1, 1, 1, 1]]))
    with pytest.raises(EvenDistanceError):
        rep4.is_perfect(4)
    # [4,1] repetition with (odd) sub-distance 3 does not tile the space
    assert rep4.is_perfect(3) is False


def test_hamming_7_4_is_perfect():
    g = Matrix(
        GF2,
        [
            [1, 0, 0, 0, 1, 1, 0],
            [0, 1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 0, 1, 1],
            [0, 0, 0, 1, 1, 1, 1],
        ],
    )
    c = code_from_generator(g)
    assert c.min_distance() == 3
    assert c.is_perfect(3) is True


# -- matrix text round-trip


def test_matrix_text_round_trip():
    m = Matrix(GF4, [[0, 1, 2], [3, 0, 1]])
    assert Matrix.parse_text(GF4, m.format_text()) == m
