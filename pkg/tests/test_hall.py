"""Hall-Littlewood polynomials against their definitional oracle, Pieri rule,
principal specialization and the twisted product forms."""

import random
from fractions import Fraction

import pytest

from qhall.hall import (
    PoleError,
    RationalPoint,
    all_sign_vectors,
    hl_oracle,
    hl_poly,
    phi_eval,
    pieri_coeff,
    principal_value,
    psi_eval,
    sample_point,
    schur_at,
)
from qhall.mpoly import MPoly, compare_mpoly
from qhall.partitions import Partition, is_vertical_strip, partitions
from qhall.qbinom import qbinom
from qhall.rings import ZZ
from qhall.series import QLaurentSeries


def P(*parts):
    return Partition(parts)


def test_elementary_special_case():
    # single-column shapes give elementary symmetric polynomials
    for n in range(1, 5):
        for r in range(n + 1):
            got = hl_poly(P(*([1] * r)), n)
            want = {}
            import itertools

            for combo in itertools.combinations(range(n), r):
                want[tuple(1 if t in combo else 0 for t in range(n))] = {0: 1}
            assert got == MPoly(n, want)


def test_base_cases():
    assert hl_poly(P(), 2) == MPoly.one(2)
    assert hl_poly(P(1, 1, 1), 2).is_zero()
    assert hl_poly(P(2, 1), 2) == MPoly(
        2, {(2, 1): {0: 1}, (1, 2): {0: 1}}
    )


def test_monic_and_symmetric():
    rng = random.Random(7)
    for n in range(1, 5):
        for lam in partitions(max_weight=5, max_length=n):
            p = hl_poly(lam, n)
            dom = tuple(lam.parts) + (0,) * (n - len(lam))
            assert p.coefficient(dom) == {0: 1}
            if n >= 2:
                i = rng.randrange(1, n)
                assert p.swap_vars(i, i + 1) == p


def test_oracle_equivalence_small():
    for n in range(1, 4):
        rng = random.Random(100 + n)
        pts = [sample_point(rng, n) for _ in range(3)]
        for lam in partitions(max_weight=4, max_length=n):
            p = hl_poly(lam, n)
            for pt in pts:
                assert p.eval_point(pt.xs, pt.q) == hl_oracle(lam, n, pt), (lam, n)


def test_oracle_base():
    pt = RationalPoint((Fraction(2), Fraction(3)), Fraction(1, 5))
    assert hl_oracle(P(), 2, pt) == 1
    assert hl_oracle(P(1), 2, pt) == 5
    with pytest.raises(PoleError):
        hl_oracle(P(1), 2, RationalPoint((Fraction(2), Fraction(2)), Fraction(1, 5)))


def test_q_zero_is_schur():
    for n in range(1, 4):
        rng = random.Random(40 + n)
        pts = [sample_point(rng, n, q_zero=True) for _ in range(3)]
        for lam in partitions(max_weight=5, max_length=n):
            p = hl_poly(lam, n)
            for pt in pts:
                assert p.eval_point(pt.xs, Fraction(0)) == schur_at(lam, pt.xs)


def test_pieri_coeff_examples():
    assert pieri_coeff(P(2, 2), P(2, 2), 0) == QLaurentSeries.one(ZZ)
    assert pieri_coeff(P(2, 1), P(1, 1), 1) == QLaurentSeries.one(ZZ)
    assert pieri_coeff(P(3, 1), P(1, 1), 2).is_zero()


def test_pieri_rule_mpoly():
    # P_mu(X,q^2) * e_m(X) = sum over vertical strips of the transition
    # coefficients in q^2 times P_lambda(X,q^2)
    import itertools

    for n in range(1, 4):
        for mu in partitions(max_weight=4, max_length=n):
            for m in range(0, 4):
                em = MPoly(n, {
                    tuple(1 if t in combo else 0 for t in range(n)): {0: 1}
                    for combo in itertools.combinations(range(n), m)
                }) if m <= n else MPoly.zero(n)
                lhs = hl_poly(mu, n, q_square=True).mul(em)
                rhs = MPoly.zero(n)
                target = mu.weight() + m
                for lam in partitions(weight=target, max_length=n):
                    if not is_vertical_strip(lam, mu, m):
                        continue
                    f = pieri_coeff(lam, mu, m, step=2)
                    rhs = rhs + hl_poly(lam, n, q_square=True).scale_qpoly(dict(f.coeffs))
                ok, w = compare_mpoly(lhs, rhs)
                assert ok, (n, mu, m, w)


def test_phi_eval_examples():
    pt1 = RationalPoint((Fraction(2),), Fraction(0))
    assert phi_eval((-1,), pt1, 1) == 4
    # all +1 twist leaves Phi alone
    pt = RationalPoint((Fraction(2), Fraction(1, 3)), Fraction(1, 2))
    q = pt.q
    x1, x2 = pt.xs
    direct = (
        (1 + q * x1) / (1 - x1) * (1 + q * x2) / (1 - x2)
        * (1 - q * q * x1 * x2) / (1 - x1 * x2)
    )
    assert phi_eval((1, 1), pt, 3) == direct
    # q=0 reduction: Phi becomes 1/prod(1-x_i) * 1/prod(1-x_i x_j)
    pt0 = RationalPoint((Fraction(1, 2), Fraction(1, 3)), Fraction(0))
    want = 1 / ((1 - Fraction(1, 2)) * (1 - Fraction(1, 3)) * (1 - Fraction(1, 6)))
    assert phi_eval((1, 1), pt0, 2) == want
    with pytest.raises(PoleError):
        phi_eval((1,), RationalPoint((Fraction(1),), Fraction(1, 2)), 1)


def test_psi_eval_examples():
    assert psi_eval((1,), RationalPoint((Fraction(2),), Fraction(3))) == Fraction(-1, 3)
    pt = RationalPoint((Fraction(2, 5), Fraction(3, 7)), Fraction(2, 3))
    assert psi_eval((1, 1), pt) == (
        1 / (1 - pt.xs[0] ** 2) / (1 - pt.xs[1] ** 2)
        * (1 - pt.q**2 * pt.xs[0] * pt.xs[1]) / (1 - pt.xs[0] * pt.xs[1])
    )


def test_psi_principal_closed_form():
    # at x_i = z q^(2i-2) with the first r letters inverted:
    # Psi = (-1)^r z^(2r) q^(6 C(r,2)) [n r]_{q^2} (1 - z^2 q^(4r-2)) / (z^2 q^(2r-2); q^2)_{n+1}
    n = 2
    z, q = Fraction(3, 7), Fraction(2, 5)
    xs = tuple(z * q ** (2 * i) for i in range(n))
    for r in range(n + 1):
        xi = tuple(-1 if i < r else 1 for i in range(n))
        got = psi_eval(xi, RationalPoint(xs, q))
        binom = sum(c * q**e for e, c in qbinom(n, r, step=2).coeffs.items())
        denom = Fraction(1)
        for i in range(n + 1):
            denom *= 1 - z * z * q ** (2 * r - 2 + 2 * i)
        want = (
            (-1) ** r * z ** (2 * r) * q ** (3 * r * (r - 1))
            * binom * (1 - z * z * q ** (4 * r - 2)) / denom
        )
        assert got == want, r


def test_principal_value():
    pv = principal_value(P(), 3)
    assert (pv.z_exp, pv.q_exp) == (0, 0) and pv.binom == QLaurentSeries.one(ZZ)
    pv = principal_value(P(1), 2)
    assert (pv.z_exp, pv.q_exp) == (1, 0)
    assert pv.binom == qbinom(2, 1, step=2)
    # cross-check against the polynomial at x = (z, z q^2), exact rationals
    z, q = Fraction(2, 3), Fraction(3, 5)
    xs = (z, z * q * q)
    for lam in partitions(max_weight=5, max_length=2):
        pv = principal_value(lam, 2)
        value = hl_poly(lam.conjugate(), 2, q_square=True).eval_point(xs, q)
        binom_val = sum(c * q**e for e, c in pv.binom.coeffs.items())
        assert value == z**pv.z_exp * q**pv.q_exp * binom_val, lam


def test_all_sign_vectors():
    vs = all_sign_vectors(3)
    assert len(vs) == 8 and len(set(vs)) == 8


def test_mpoly_dump():
    p = hl_poly(P(1, 1), 3)
    assert p.dump_lines() == ["0,1,1 : 1", "1,0,1 : 1", "1,1,0 : 1"]
