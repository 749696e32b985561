"""Series kernel: arithmetic, windows, Pochhammer constructors, classic identities."""

import random

import pytest

from qhall.partitions import partitions
from qhall.rings import ABRing, NotInvertibleError, RingMismatchError, ZZ
from qhall.series import (
    DivergenceError,
    QLaurentSeries,
    SeriesFactor,
    compare_series,
    invert,
    pochhammer_finite,
    pochhammer_infinite,
    substitute_q_power,
)


def S(d, order=None):
    return QLaurentSeries.from_dict(d, ZZ, order)


def test_add_examples():
    assert S({0: 1, 1: 1}) + S({0: 1, 1: -1}) == S({0: 2})
    s = S({-2: 3, 5: 1}, order=9)
    assert s + QLaurentSeries.zero(ZZ) == s
    merged = S({-1: 1, 0: 1}) + S({0: 1})
    assert merged == S({-1: 1, 0: 2})
    assert merged.min_exp == -1


def test_mul_examples():
    geo = S({k: 1 for k in range(12)}, order=12)
    prod = S({0: 1, 1: -1}) * geo
    ok, *_ = compare_series(prod, QLaurentSeries.one(ZZ), hi=11)
    assert ok
    assert S({0: 1, 1: -1}) * S({0: 1, 2: -1}) == S({0: 1, 1: -1, 2: -1, 3: 1})
    assert S({-1: 1}) * S({1: 1}) == S({0: 1})


def test_mul_window_rule():
    s1 = S({0: 1, 1: 2}, order=5)   # valuation 0
    s2 = S({2: 1, 3: 1}, order=7)   # valuation 2
    assert (s1 * s2).order == min(5 + 2, 7 + 0)
    assert (s2 * s2).order == 7 + 2


def test_ring_mismatch():
    ab = ABRing(4)
    with pytest.raises(RingMismatchError):
        S({0: 1}) + QLaurentSeries.one(ab)
    with pytest.raises(RingMismatchError):
        S({0: 1}) * QLaurentSeries.one(ab)


def test_invert_geometric():
    inv = invert(S({0: 1, 1: -1}, order=10))
    assert inv == S({k: 1 for k in range(10)}, order=10)


def test_invert_partition_generating_series():
    # oracle: count partitions of m by direct enumeration
    counts = [sum(1 for _ in partitions(weight=m)) for m in range(7)]
    assert counts == [1, 1, 2, 3, 5, 7, 11]
    euler = pochhammer_infinite(SeriesFactor(-1, 1, 1, 1), 7, ZZ)
    gf = invert(euler)
    assert [gf.coefficient(m) for m in range(7)] == counts


def test_invert_identity_and_errors():
    one = QLaurentSeries.one(ZZ, 5)
    assert invert(one) == one
    with pytest.raises(NotInvertibleError):
        invert(S({0: 2}, order=5))
    with pytest.raises(NotInvertibleError):
        invert(QLaurentSeries.zero(ZZ, 5))
    # exact monomials invert exactly, other exact series need a window
    assert invert(S({3: -1})) == S({-3: -1})
    with pytest.raises(ValueError):
        invert(S({0: 1, 1: 1}))


def test_invert_two_sided_property():
    rng = random.Random(5)
    for _ in range(60):
        d = {0: rng.choice([1, -1])}
        for _ in range(rng.randrange(1, 6)):
            d[rng.randrange(1, 9)] = rng.randrange(-4, 5)
        s = S(d, order=14)
        prod = s * invert(s)
        ok, *_ = compare_series(prod, QLaurentSeries.one(ZZ), hi=14)
        assert ok


def test_pochhammer_finite_examples():
    q_factor = SeriesFactor(-1, 1, 1, 1)
    assert pochhammer_finite(q_factor, 0) == QLaurentSeries.one(ZZ)
    assert pochhammer_finite(q_factor, 2) == S({0: 1, 1: -1, 2: -1, 3: 1})
    ab = ABRing(4)
    f = SeriesFactor(-1, ab.a, 0, 1)
    # (a; 1/q)_2 = (1-a)(1-a/q), built with descending shifts
    got = pochhammer_finite(SeriesFactor(-1, ab.a, -1, 1), 2, ab)
    a = ab.a
    want = QLaurentSeries.one(ab).mul_binomial(-a, 0).mul_binomial(-a, -1)
    assert got == want
    assert got.min_exp == -1


def test_pochhammer_infinite_examples():
    # oracle: multiply the factors (1-q^k) directly
    direct = QLaurentSeries.one(ZZ, 6)
    for k in range(1, 6):
        direct = direct * S({0: 1, k: -1}, order=6)
    got = pochhammer_infinite(SeriesFactor(-1, 1, 1, 1), 6, ZZ)
    assert got == direct
    assert got.coeffs == {0: 1, 1: -1, 2: -1, 5: 1}
    assert pochhammer_infinite(SeriesFactor(-1, 0, 1, 1), 9, ZZ) == QLaurentSeries.one(ZZ, 9)
    with pytest.raises(DivergenceError):
        SeriesFactor(-1, 1, 1, 0)
    assert pochhammer_infinite(SeriesFactor(-1, 1, 1, 1), 0, ZZ).is_zero()


def test_substitute_q_power():
    assert substitute_q_power(S({0: 1, 1: 1}), 2) == S({0: 1, 2: 1})
    s = S({-1: 2, 3: 1}, order=7)
    assert substitute_q_power(s, 1) == s
    assert substitute_q_power(S({0: 1, 1: -1, 3: 1}), 2) == S({0: 1, 2: -1, 6: 1})
    assert substitute_q_power(s, 3).order == 21


def test_ring_axioms_property():
    rng = random.Random(11)

    def rand_series():
        d = {rng.randrange(-4, 9): rng.randrange(-5, 6) for _ in range(rng.randrange(1, 6))}
        return S(d, order=rng.randrange(6, 14))

    for _ in range(200):
        a, b, c = rand_series(), rand_series(), rand_series()
        ok, *_ = compare_series((a + b) + c, a + (b + c))
        assert ok
        ok, *_ = compare_series(a * b, b * a)
        assert ok
        ok, *_ = compare_series(a * (b + c), a * b + a * c)
        assert ok
        ok, *_ = compare_series((a * b) * c, a * (b * c))
        assert ok


def test_euler_identity():
    # 1/(x)_inf = sum_m x^m/(q)_m at x = q^j, through order 30
    order = 30
    for j in (1, 2, 3):
        lhs = invert(pochhammer_infinite(SeriesFactor(-1, 1, j, 1), order, ZZ))
        rhs = QLaurentSeries.zero(ZZ, order)
        m = 0
        while j * m < order:
            rhs = rhs + invert(pochhammer_finite(SeriesFactor(-1, 1, 1, 1), m, ZZ, order)).shift(j * m)
            m += 1
        ok, e, a, b, _ = compare_series(lhs, rhs, hi=order)
        assert ok, (j, e, a, b)


def test_finite_q_binomial_identity():
    # (x)_n = sum_m (-1)^m q^C(m,2) [n m] x^m at x = q^j, exact
    from qhall.qbinom import qbinom

    for n in range(9):
        for j in (1, 2):
            lhs = pochhammer_finite(SeriesFactor(-1, 1, j, 1), n, ZZ)
            rhs = QLaurentSeries.zero(ZZ)
            for m in range(n + 1):
                term = qbinom(n, m).shift(m * (m - 1) // 2 + j * m)
                rhs = rhs + (-term if m % 2 else term)
            assert lhs == rhs, (n, j)


def test_q_binomial_theorem_formal_a():
    # sum_m (a)_m/(q)_m x^m = (ax)_inf/(x)_inf with a formal, x = q^j
    order = 30
    ab = ABRing(34)
    a = ab.a
    for j in (1, 2):
        lhs = QLaurentSeries.zero(ab, order)
        m = 0
        while j * m < order:
            num = pochhammer_finite(SeriesFactor(-1, a, 0, 1), m, ab, order)
            den = invert(pochhammer_finite(SeriesFactor(-1, 1, 1, 1), m, ZZ, order))
            lhs = lhs + (num * den.to_ring(ab)).shift(j * m)
            m += 1
        rhs = pochhammer_finite(SeriesFactor(-1, a, j, 1), order, ab, order)
        rhs = rhs * invert(pochhammer_infinite(SeriesFactor(-1, 1, j, 1), order, ZZ)).to_ring(ab)
        ok, e, x, y, _ = compare_series(lhs, rhs, hi=order)
        assert ok, (j, e, str(x), str(y))


def test_serialization():
    s = S({2: -3, -1: 1, 0: 5})
    assert s.serialize() == [(-1, "1"), (0, "5"), (2, "-3")]
    ab = ABRing(3)
    t = QLaurentSeries(ab, {0: ab.one + ab.a * ab.b, 1: -ab.b}, None)
    assert t.serialize() == [(0, "1+ab"), (1, "-b")]


def test_rational_ring():
    from fractions import Fraction

    from qhall.rings import QQ

    s = QLaurentSeries.from_dict({0: Fraction(2), 1: Fraction(1, 3)}, QQ, 8)
    inv = invert(s)
    ok, *_ = compare_series(s * inv, QLaurentSeries.one(QQ, 8), hi=8)
    assert ok
    assert inv.coefficient(0) == Fraction(1, 2)
