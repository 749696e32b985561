"""Truncated Laurent series in q with exact coefficients.

A QLaurentSeries stores coefficients sparsely for exponents in
[min_exp, order); it represents a series whose coefficients are exactly
known for every exponent below `order` (zero below min_exp).  order=None
means the series is exact everywhere, i.e. a Laurent polynomial.

The truncation window follows the usual rule: adding intersects windows,
multiplying by a series of valuation v shifts the partner's reliable
window up by v, and the result's order is the minimum over both operands.
No operation ever widens a window.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import ZZ, NotInvertibleError, RingMismatchError


class DivergenceError(ArithmeticError):
    """Infinite product whose factors do not march off to q^infinity."""


def _min_order(*orders):
    finite = [o for o in orders if o is not None]
    return min(finite) if finite else None


class QLaurentSeries:
    __slots__ = ("ring", "coeffs", "min_exp", "order")

    def __init__(self, ring, coeffs, order=None, _skip_normalize=False):
        self.ring = ring
        if not _skip_normalize:
            coeffs = {e: c for e, c in coeffs.items() if c}
            if order is not None:
                coeffs = {e: c for e, c in coeffs.items() if e < order}
        self.coeffs = coeffs
        self.order = order
        if coeffs:
            self.min_exp = min(coeffs)
        else:
            self.min_exp = order if order is not None else 0
        if self.order is not None and self.min_exp > self.order:
            self.min_exp = self.order

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(ring=ZZ, order=None):
        return QLaurentSeries(ring, {}, order, _skip_normalize=True)

    @staticmethod
    def one(ring=ZZ, order=None):
        return QLaurentSeries.monomial(ring.one, 0, ring, order)

    @staticmethod
    def monomial(coeff, exp, ring=ZZ, order=None):
        if isinstance(coeff, int):
            coeff = ring.from_int(coeff)
        if not coeff or (order is not None and exp >= order):
            return QLaurentSeries.zero(ring, order)
        return QLaurentSeries(ring, {exp: coeff}, order, _skip_normalize=True)

    @staticmethod
    def from_dict(d, ring=ZZ, order=None):
        return QLaurentSeries(
            ring, {e: ring.from_int(c) if isinstance(c, int) else c for e, c in d.items()}, order
        )

    # -- basics ------------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def valuation(self):
        """Lowest nonzero exponent; for a window-zero series, its order."""
        if self.coeffs:
            return min(self.coeffs)
        return self.order

    def coefficient(self, e):
        return self.coeffs.get(e, self.ring.zero)

    def _check_ring(self, other):
        if self.ring is not other.ring:
            raise RingMismatchError(
                f"mixed coefficient rings: {self.ring!r} vs {other.ring!r}"
            )

    def __eq__(self, other):
        if not isinstance(other, QLaurentSeries):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.ring), self.order, frozenset(self.coeffs)))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        self._check_ring(other)
        order = _min_order(self.order, other.order)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        if order is not None:
            out = {e: c for e, c in out.items() if e < order}
        return QLaurentSeries(self.ring, out, order, _skip_normalize=True)

    def __neg__(self):
        return QLaurentSeries(
            self.ring, {e: -c for e, c in self.coeffs.items()}, self.order,
            _skip_normalize=True,
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_ring(other)
        if not self.coeffs and self.order is None:
            return self
        if not other.coeffs and other.order is None:
            return other
        v1, v2 = self.valuation(), other.valuation()
        cands = []
        if self.order is not None:
            cands.append(self.order + v2)
        if other.order is not None:
            cands.append(other.order + v1)
        order = min(cands) if cands else None
        out = {}
        items2 = sorted(other.coeffs.items())
        for e1, c1 in self.coeffs.items():
            lim = None if order is None else order - e1
            for e2, c2 in items2:
                if lim is not None and e2 >= lim:
                    break
                e = e1 + e2
                p = c1 * c2
                s = out.get(e)
                if s is None:
                    out[e] = p
                else:
                    s = s + p
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return QLaurentSeries(self.ring, out, order, _skip_normalize=True)

    def scale(self, coeff):
        """Multiply by a scalar from the coefficient ring (or an int)."""
        if isinstance(coeff, int):
            coeff = self.ring.from_int(coeff)
        if not coeff:
            return QLaurentSeries.zero(self.ring, self.order)
        return QLaurentSeries(
            self.ring, {e: c * coeff for e, c in self.coeffs.items()}, self.order
        )

    def shift(self, k):
        """Multiply by q^k."""
        order = None if self.order is None else self.order + k
        return QLaurentSeries(
            self.ring, {e + k: c for e, c in self.coeffs.items()}, order,
            _skip_normalize=True,
        )

    def mul_binomial(self, coeff, exp):
        """Multiply by (1 + coeff*q^exp) without the general convolution."""
        if isinstance(coeff, int):
            coeff = self.ring.from_int(coeff)
        order = self.order
        if order is not None and exp < 0:
            # the shifted copy is only reliable below order+exp
            order = order + exp
        out = {}
        for e, c in self.coeffs.items():
            if order is None or e < order:
                out[e] = c
        if coeff:
            for e, c in self.coeffs.items():
                e2 = e + exp
                if order is not None and e2 >= order:
                    continue
                p = c * coeff
                s = out.get(e2)
                if s is None:
                    out[e2] = p
                else:
                    s = s + p
                    if s:
                        out[e2] = s
                    else:
                        del out[e2]
        return QLaurentSeries(self.ring, out, order, _skip_normalize=True)

    def div_binomial(self, coeff, exp):
        """Multiply by 1/(1 - coeff*q^exp) for exp > 0 (prefix recurrence)."""
        if exp <= 0:
            raise ValueError("geometric divisor needs a positive exponent")
        if self.order is None:
            raise ValueError("geometric division needs a truncated window")
        if isinstance(coeff, int):
            coeff = self.ring.from_int(coeff)
        if not self.coeffs or not coeff:
            return self
        out = {}
        for e in range(self.min_exp, self.order):
            val = self.coeffs.get(e)
            back = out.get(e - exp)
            if back is not None:
                add = back * coeff
                val = add if val is None else val + add
            if val:
                out[e] = val
        return QLaurentSeries(self.ring, out, self.order, _skip_normalize=True)

    def truncate(self, order):
        order = _min_order(self.order, order)
        return QLaurentSeries(self.ring, dict(self.coeffs), order)

    def with_window(self, order):
        """Assert-and-set a (possibly wider) window for an exact series."""
        if self.order is not None and self.order < order:
            raise ValueError("cannot widen a truncated window")
        return QLaurentSeries(self.ring, dict(self.coeffs), order)

    def to_ring(self, ring):
        """Re-coefficient an integer series into another ring."""
        return QLaurentSeries(
            ring, {e: ring.from_int(c) for e, c in self.coeffs.items()}, self.order
        )

    # -- serialization -------------------------------------------------------

    def serialize(self):
        """Ascending (exponent, coefficient-string) pairs."""
        return [(e, self.ring.coeff_str(self.coeffs[e])) for e in sorted(self.coeffs)]

    def __str__(self):
        if not self.coeffs:
            body = "0"
        else:
            bits = []
            for e, c in self.serialize():
                if e == 0:
                    bits.append(c)
                else:
                    mono = "q" if e == 1 else f"q^{e}"
                    bits.append(mono if c == "1" else f"({c})*{mono}")
            body = " + ".join(bits)
        if self.order is None:
            return body
        return f"{body} + O(q^{self.order})"

    __repr__ = __str__


def add(s1, s2):
    return s1 + s2


def mul(s1, s2):
    return s1 * s2


def invert(s, order=None):
    """Multiplicative inverse through the window.

    The lowest retained coefficient must be a unit of the coefficient ring.
    An exact monomial inverts exactly; any other exact series must be given
    an explicit truncation order.
    """
    if order is not None:
        s = s.truncate(order)
    if not s.coeffs:
        raise NotInvertibleError("zero series is not invertible")
    v = s.valuation()
    u = s.coeffs[v]
    u_inv = s.ring.invert_unit(u)
    if s.order is None:
        if len(s.coeffs) == 1:
            return QLaurentSeries.monomial(u_inv, -v, s.ring)
        raise ValueError("inverting a non-monomial exact series needs a truncation order")
    width = s.order - v
    # s = u*q^v*(1 + t); invert 1+t by the standard recurrence
    t = {e - v: c * u_inv for e, c in s.coeffs.items() if e != v}
    inv = {0: s.ring.one}
    for j in range(1, width):
        acc = None
        for i, ti in t.items():
            if i > j:
                continue
            rj = inv.get(j - i)
            if rj is None:
                continue
            p = ti * rj
            acc = p if acc is None else acc + p
        if acc is not None and acc:
            inv[j] = -acc
    out = {e - v: c * u_inv for e, c in inv.items()}
    return QLaurentSeries(s.ring, out, s.order - 2 * v)


def substitute_q_power(s, m):
    """Replace q by q^m (m >= 1)."""
    if m < 1:
        raise ValueError("substitution power must be >= 1")
    order = None if s.order is None else s.order * m
    return QLaurentSeries(
        s.ring, {e * m: c for e, c in s.coeffs.items()}, order, _skip_normalize=True
    )


@dataclass(frozen=True)
class SeriesFactor:
    """One Pochhammer factor shape (1 + sign*coeff*q^(q_shift + k*step)).

    sign is +-1, coeff multiplies inside the factor (int or ring element),
    step >= 1 is the q-step of the product.
    """

    sign: int = -1
    coeff: object = 1
    q_shift: int = 0
    step: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.step < 1:
            raise DivergenceError("Pochhammer step must be >= 1")


def _factor_coeff(f, ring):
    c = f.coeff
    if isinstance(c, int):
        c = ring.from_int(c)
    return c if f.sign == 1 else -c


def pochhammer_finite(f, n, ring=ZZ, order=None):
    """Product over k=0..n-1 of (1 + sign*coeff*q^(q_shift + k*step))."""
    if n < 0:
        raise ValueError("finite Pochhammer needs n >= 0")
    out = QLaurentSeries.one(ring, order)
    c = _factor_coeff(f, ring)
    if not c:
        return out
    for k in range(n):
        out = out.mul_binomial(c, f.q_shift + k * f.step)
    return out


def pochhammer_infinite(f, order, ring=ZZ):
    """Product over all k >= 0, truncated at `order`.

    Only factors whose exponent can touch the window are multiplied; the
    rest are 1 + O(q^order).  Factors must march upward (step >= 1).
    """
    if f.step < 1:
        raise DivergenceError("infinite Pochhammer needs step >= 1")
    out = QLaurentSeries.one(ring, order)
    c = _factor_coeff(f, ring)
    if not c:
        return out
    if order <= 0:
        return out
    # factors with negative exponents deepen the product's valuation, which
    # lets later factors reach back into the window; widen the cutoff by the
    # total negative weight
    neg_total = 0
    e = f.q_shift
    while e < 0:
        neg_total += e
        e += f.step
    exp = f.q_shift
    while exp < order - neg_total:
        out = out.mul_binomial(c, exp)
        exp += f.step
    return out


def compare_series(s1, s2, lo=None, hi=None):
    """Compare two series on the intersection of reliable windows and [lo, hi).

    Returns (ok, witness_exp, lhs_coeff, rhs_coeff, hi_effective); witness
    fields are None on success.  hi_effective is the exclusive exponent bound
    the comparison actually covered (None = everywhere).
    """
    hi_eff = _min_order(s1.order, s2.order, hi)
    exps = set(s1.coeffs) | set(s2.coeffs)
    for e in sorted(exps):
        if lo is not None and e < lo:
            continue
        if hi_eff is not None and e >= hi_eff:
            continue
        c1 = s1.coefficient(e)
        c2 = s2.coefficient(e)
        if c1 != c2:
            return False, e, c1, c2, hi_eff
    return True, None, None, None, hi_eff
