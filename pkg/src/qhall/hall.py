"""Hall-Littlewood polynomials: branching computation, the definitional
permutation-sum oracle, Pieri coefficients, and the twisted product forms."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .mpoly import MPoly, qp_mul
from .partitions import Partition, is_vertical_strip
from .qbinom import qbinom, qbinom_partition


class PoleError(ArithmeticError):
    """Evaluation point hits a pole; caller should resample."""


@dataclass(frozen=True)
class RationalPoint:
    xs: tuple
    q: Fraction


def all_sign_vectors(n):
    return list(itertools.product((1, -1), repeat=n))


def _conjugate_cols(parts, width):
    """Column heights lambda'_1..lambda'_width (zero-padded)."""
    return [sum(1 for p in parts if p >= j) for j in range(1, width + 1)]


def _psi_weight(lam, mu, step):
    """Branching transition weight for the horizontal strip lam/mu.

    Product of (1 - q^(step*m_i(mu))) over columns i where the strip has no
    cell in column i but has one in column i+1.
    """
    width = lam.part(1)
    lc = _conjugate_cols(lam.parts, width + 1)
    mc = _conjugate_cols(mu.parts, width + 1)
    out = {0: 1}
    for i in range(1, width + 1):
        th_i = lc[i - 1] - mc[i - 1]
        th_next = lc[i] - mc[i]
        if th_i == 0 and th_next == 1:
            m = mu.multiplicity(i)
            if m == 0:
                return {}
            out = qp_mul(out, {0: 1, step * m: -1})
    return out


def _strips_below(lam):
    """All mu with lam/mu a horizontal strip (mu interlaces lam)."""
    ps = lam.parts
    if not ps:
        return [Partition()]
    ranges = []
    for i in range(len(ps)):
        lo = ps[i + 1] if i + 1 < len(ps) else 0
        ranges.append(range(ps[i], lo - 1, -1))
    out = []
    for choice in itertools.product(*ranges):
        out.append(Partition(tuple(p for p in choice if p > 0)))
    return out


@lru_cache(maxsize=None)
def _hl_poly_cached(parts, n, step):
    lam = Partition(parts)
    if len(parts) > n:
        return MPoly.zero(n)
    if n == 0:
        return MPoly.one(0)
    out = MPoly.zero(n)
    w = lam.weight()
    for mu in _strips_below(lam):
        sub = _hl_poly_cached(mu.parts, n - 1, step)
        if sub.is_zero():
            continue
        psi = _psi_weight(lam, mu, step)
        if not psi:
            continue
        term = sub.extend_vars(n).scale_qpoly(psi)
        k = w - mu.weight()
        if k:
            term = term.mul(MPoly.monomial(n, (0,) * (n - 1) + (k,), {0: 1}))
        out = out + term
    return out


def hl_poly(lam, n, q_square=False):
    """P_lambda(x_1..x_n, q) (or with q squared) as an exact MPoly.

    Zero when the partition has more than n parts; the dominant monomial
    x^lambda always carries coefficient 1.
    """
    return _hl_poly_cached(lam.parts, n, 2 if q_square else 1)


def _q_pochhammer_value(q, m):
    out = Fraction(1)
    for j in range(1, m + 1):
        out *= 1 - q**j
    return out


def hl_oracle(lam, n, point):
    """The definitional normalized permutation sum, evaluated exactly.

    The normalization includes the multiplicity of zero parts m_0 = n - l(lambda),
    which makes the dominant coefficient 1.
    """
    if len(lam) > n:
        return Fraction(0)
    xs, q = point.xs, Fraction(point.q)
    if len(set(xs)) != n or any(x == 0 for x in xs):
        raise PoleError("permutation sum needs distinct nonzero coordinates")
    mults = dict(lam.multiplicities())
    mults[0] = n - len(lam)
    pref = Fraction(1)
    for m in mults.values():
        denom = _q_pochhammer_value(q, m)
        if denom == 0:
            raise PoleError("q hits a root of (q)_m")
        pref *= (1 - q) ** m / denom
    padded = list(lam.parts) + [0] * (n - len(lam))
    total = Fraction(0)
    for w in itertools.permutations(range(n)):
        term = Fraction(1)
        for i in range(n):
            if padded[i]:
                term *= Fraction(xs[w[i]]) ** padded[i]
        for i in range(n):
            for j in range(i + 1, n):
                xi, xj = xs[w[i]], xs[w[j]]
                term *= (xi - q * xj) / (xi - xj)
        total += term
    return pref * total


def pieri_coeff(lam, mu, m, step=1):
    """Structure constant of P_mu * e_m in the P basis, as an exact q-polynomial.

    prod_i [ lam'_i - lam'_{i+1} over lam'_i - mu'_i ]; zero unless lam/mu is
    a vertical m-strip.
    """
    from .rings import ZZ
    from .series import QLaurentSeries

    if not is_vertical_strip(lam, mu, m):
        return QLaurentSeries.zero(ZZ)
    width = lam.part(1)
    lc = _conjugate_cols(lam.parts, width + 1)
    mc = _conjugate_cols(mu.parts, width + 1)
    out = QLaurentSeries.one(ZZ)
    for i in range(1, width + 1):
        out = out * qbinom(lc[i - 1] - lc[i], lc[i - 1] - mc[i - 1], step)
    return out


def phi_eval(xi, point, k):
    """Phi on the sign-twisted alphabet, times prod_i x_i^(k(1-xi_i)/2).

    Phi(X) = prod_i (1+q x_i)/(1-x_i) * prod_{j<l} (1-q^2 x_j x_l)/(1-x_j x_l).
    """
    xs, q = point.xs, Fraction(point.q)
    n = len(xs)
    ys = []
    for x, s in zip(xs, xi):
        x = Fraction(x)
        if x == 0:
            raise PoleError("zero coordinate cannot be inverted")
        ys.append(x if s == 1 else 1 / x)
    out = Fraction(1)
    for y in ys:
        if y == 1:
            raise PoleError("pole at twisted coordinate 1")
        out *= (1 + q * y) / (1 - y)
    for j in range(n):
        for l in range(j + 1, n):
            prod = ys[j] * ys[l]
            if prod == 1:
                raise PoleError("pole at twisted pair product 1")
            out *= (1 - q * q * prod) / (1 - prod)
    for x, s in zip(xs, xi):
        if s == -1:
            out *= Fraction(x) ** k
    return out


def psi_eval(xi, point):
    """Psi on the sign-twisted alphabet.

    Psi(X) = prod_i 1/(1-x_i^2) * prod_{j<l} (1-q^2 x_j x_l)/(1-x_j x_l).
    """
    xs, q = point.xs, Fraction(point.q)
    n = len(xs)
    ys = []
    for x, s in zip(xs, xi):
        x = Fraction(x)
        if x == 0:
            raise PoleError("zero coordinate cannot be inverted")
        ys.append(x if s == 1 else 1 / x)
    out = Fraction(1)
    for y in ys:
        if y * y == 1:
            raise PoleError("pole at twisted square 1")
        out /= 1 - y * y
    for j in range(n):
        for l in range(j + 1, n):
            prod = ys[j] * ys[l]
            if prod == 1:
                raise PoleError("pole at twisted pair product 1")
            out *= (1 - q * q * prod) / (1 - prod)
    return out


def arm_leg_product_cells(lam):
    """Product of (1 - q^(leg+1)) over cells with arm 0 and even leg, as a q-poly dict."""
    from .partitions import arm_leg

    out = {0: 1}
    for i in range(1, len(lam.parts) + 1):
        cell = (i, lam.parts[i - 1])
        arm, leg = arm_leg(lam, cell)
        if arm == 0 and leg % 2 == 0:
            out = qp_mul(out, {0: 1, leg + 1: -1})
    return out


@dataclass(frozen=True)
class PrincipalValue:
    """Monomial value of P_{lambda'} at x_i = z*q^(2i-2): z^z_exp * q^q_exp * binom."""

    z_exp: int
    q_exp: int
    binom: object


def principal_value(lam, n):
    """Principal-specialization value record for P_{lambda'}(X, q^2) on n letters."""
    return PrincipalValue(
        z_exp=lam.weight(),
        q_exp=2 * lam.n_stat(),
        binom=qbinom_partition(n, lam, step=2),
    )


def schur_at(lam, xs):
    """Bialternant Schur value s_lambda(xs) at distinct rationals (small n only)."""
    n = len(xs)
    if len(lam) > n:
        return Fraction(0)
    padded = list(lam.parts) + [0] * (n - len(lam))

    def det(exps):
        total = Fraction(0)
        for w in itertools.permutations(range(n)):
            sign = _perm_sign(w)
            term = Fraction(1)
            for i in range(n):
                term *= Fraction(xs[w[i]]) ** exps[i]
            total += sign * term
        return total

    num = det([padded[i] + n - 1 - i for i in range(n)])
    den = det([n - 1 - i for i in range(n)])
    if den == 0:
        raise PoleError("coincident coordinates in bialternant")
    return num / den


def _perm_sign(w):
    sign = 1
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                sign = -sign
    return sign


_FRACTION_POOL = [
    Fraction(num, den)
    for num in range(2, 10)
    for den in range(1, 10)
    if Fraction(num, den) not in (1,)
]


def sample_point(rng, n, q_zero=False, max_tries=500):
    """Draw a RationalPoint with small distinct coordinates avoiding the poles
    of the twisted products (x_i != 0, +-1; x_i != x_j; x_i x_j != 1) and of
    the permutation sum.  Deterministic for a seeded rng."""
    for _ in range(max_tries):
        xs = []
        ok = True
        for _ in range(n):
            x = rng.choice(_FRACTION_POOL)
            if rng.random() < 0.5:
                x = -x
            xs.append(x)
        for i in range(n):
            if xs[i] in (0, 1, -1):
                ok = False
            for j in range(i + 1, n):
                if xs[i] == xs[j] or xs[i] * xs[j] == 1:
                    ok = False
        if not ok:
            continue
        if q_zero:
            q = Fraction(0)
        else:
            q = Fraction(rng.randrange(2, 8), rng.randrange(2, 8))
            if q == 1:
                continue
        return RationalPoint(xs=tuple(xs), q=q)
    raise PoleError("could not sample a pole-free rational point")
