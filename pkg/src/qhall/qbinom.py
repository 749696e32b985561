"""Gaussian binomials, partition-indexed binomials and theta-style products."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .rings import ZZ
from .series import (
    QLaurentSeries,
    SeriesFactor,
    invert,
    pochhammer_finite,
    pochhammer_infinite,
)


@lru_cache(maxsize=None)
def _qbinom_q(n, m):
    """[n m] in the plain variable q, by the Pascal recurrence (division-free)."""
    if m < 0 or m > n:
        return QLaurentSeries.zero(ZZ)
    if m == 0 or m == n:
        return QLaurentSeries.one(ZZ)
    return _qbinom_q(n - 1, m - 1) + _qbinom_q(n - 1, m).shift(m)


def qbinom(n, m, step=1):
    """Gaussian binomial [n m] in the variable q^step; zero outside 0<=m<=n."""
    p = _qbinom_q(n, m)
    if step == 1:
        return p
    from .series import substitute_q_power

    return substitute_q_power(p, step)


def qbinom_partition(n, lam, step=1):
    """Partition-indexed binomial (q)_n / ((q)_{n-lambda_1} (q)_lambda) in q^step.

    Equals [n lambda_1] times the q-multinomial of the gap vector of lambda;
    zero when lambda_1 > n.
    """
    if not lam.parts:
        return QLaurentSeries.one(ZZ)
    if lam.parts[0] > n:
        return QLaurentSeries.zero(ZZ)
    out = qbinom(n, lam.parts[0], step)
    rest = lam.parts[0]
    for g in lam.gaps():
        out = out * qbinom(rest, g, step)
        rest -= g
    return out


def pochhammer_partition(f, lam, ring=ZZ, order=None):
    """Partition Pochhammer over the gap vector: prod_i (x; q^step)_{gap_i}."""
    out = QLaurentSeries.one(ring, order)
    for g in lam.gaps():
        out = out * pochhammer_finite(f, g, ring, order)
    return out


def pochhammer_partition_sym(x_exp, lam, step=1, sign=-1, ring=ZZ, order=None):
    """Same, for x specialized to sign*q^x_exp."""
    f = SeriesFactor(sign=sign, coeff=1, q_shift=x_exp, step=step)
    return pochhammer_partition(f, lam, ring, order)


def jacobi_triple_lhs(x_exp, d, order):
    """The product (q^d, q^x_exp, q^(d-x_exp); q^d)_infinity, truncated."""
    if not 0 < x_exp < d:
        raise ValueError("need 0 < x_exp < d for a power-series triple product")
    out = QLaurentSeries.one(ZZ, order)
    for shift in (d, x_exp, d - x_exp):
        out = out * pochhammer_infinite(SeriesFactor(-1, 1, shift, d), order)
    return out


def jacobi_triple_sum(form, x_exp, d, order):
    """Theta-sum form of the triple product at x = q^x_exp, base q^d.

    form "first":  sum_{r>=0} (-1)^r x^r Q^C(r,2) (1 - Q^(2r+1)/x^(2r+1))
    form "second": 1 + sum_{r>=1} (-1)^r x^r Q^C(r,2) (1 + Q^r/x^(2r))
    with Q = q^d.
    """
    if not 0 < x_exp < d:
        raise ValueError("need 0 < x_exp < d")
    coeffs = {}

    def put(e, c):
        if e < order:
            coeffs[e] = coeffs.get(e, 0) + c

    r = 0
    while True:
        base = x_exp * r + d * (r * (r - 1) // 2)
        sign = 1 if r % 2 == 0 else -1
        if form == "first":
            e2 = base + d * (2 * r + 1) - x_exp * (2 * r + 1)
            done = base >= order and e2 >= order
            put(base, sign)
            put(e2, -sign)
        elif form == "second":
            e2 = base + d * r - 2 * x_exp * r
            done = base >= order and e2 >= order
            if r == 0:
                put(0, 1)
                done = order <= 0
            else:
                put(base, sign)
                put(e2, sign)
        else:
            raise ValueError(f"unknown triple-product form {form!r}")
        if done:
            break
        r += 1
    return QLaurentSeries.from_dict(coeffs, ZZ, order)


def csq_euler_check(n):
    """True iff sum_{k=0..n} q^k [n k]_{q^2} equals prod_{k=1..n} (1+q^k) exactly."""
    lhs = QLaurentSeries.zero(ZZ)
    for k in range(n + 1):
        lhs = lhs + qbinom(n, k, step=2).shift(k)
    rhs = QLaurentSeries.one(ZZ)
    for k in range(1, n + 1):
        rhs = rhs.mul_binomial(1, k)
    return lhs == rhs


@dataclass
class ThetaProduct:
    """A product of infinite Pochhammers divided by further infinite Pochhammers.

    Every numerator factor must have non-negative q-shift (and a factor with
    shift 0 must not collapse to 1-1); divisor factors need shift > 0 so the
    inverse exists as a power series.
    """

    factors: list = field(default_factory=list)
    divisors: list = field(default_factory=list)

    def times(self, sign, shift, step):
        if shift < 0 or (shift == 0 and sign == -1):
            raise ValueError("theta factor must keep the product a power series")
        self.factors.append(SeriesFactor(sign, 1, shift, step))
        return self

    def over(self, sign, shift, step):
        if shift <= 0:
            raise ValueError("theta divisor must have positive q-shift")
        self.divisors.append(SeriesFactor(sign, 1, shift, step))
        return self

    def series(self, order, ring=ZZ):
        out = QLaurentSeries.one(ring, order)
        for f in self.factors:
            out = out * pochhammer_infinite(f, order, ring)
        for f in self.divisors:
            out = out * invert(pochhammer_infinite(f, order, ring))
        return out


def triple_shifts(a, b, c, base):
    """ThetaProduct for (q^a, q^b, q^c; q^base)_infinity."""
    tp = ThetaProduct()
    for s in (a, b, c):
        tp.times(-1, s, base)
    return tp
