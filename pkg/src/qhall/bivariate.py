"""Series in z truncated at z_order, with QLaurentSeries coefficients in q.

All the infinite products appearing on the two-variable right-hand sides are
assembled from binomial factors (1 + c*z^d*q^e) and geometric divisors
1/(1 - c*z^d*q^e); both are linear-time passes over the coefficient table,
and both propagate the per-coefficient q-window bookkeeping.
"""

from __future__ import annotations

from .rings import ZZ
from .series import QLaurentSeries, _min_order


class BivariateSeries:
    __slots__ = ("ring", "z_order", "coeffs")

    def __init__(self, ring, z_order, coeffs=None):
        self.ring = ring
        self.z_order = z_order
        if coeffs is None:
            coeffs = [QLaurentSeries.zero(ring) for _ in range(z_order)]
        self.coeffs = coeffs

    @staticmethod
    def zero(ring, z_order, q_order=None):
        return BivariateSeries(
            ring, z_order, [QLaurentSeries.zero(ring, q_order) for _ in range(z_order)]
        )

    @staticmethod
    def one(ring, z_order, q_order=None):
        out = BivariateSeries.zero(ring, z_order, q_order)
        out.coeffs[0] = QLaurentSeries.one(ring, q_order)
        return out

    def copy(self):
        return BivariateSeries(self.ring, self.z_order, list(self.coeffs))

    def coefficient(self, m):
        if 0 <= m < self.z_order:
            return self.coeffs[m]
        raise IndexError(f"z^{m} outside truncation {self.z_order}")

    def __add__(self, other):
        if self.ring is not other.ring:
            from .rings import RingMismatchError

            raise RingMismatchError("mixed rings in bivariate add")
        z = min(self.z_order, other.z_order)
        return BivariateSeries(
            self.ring, z, [self.coeffs[m] + other.coeffs[m] for m in range(z)]
        )

    def __neg__(self):
        return BivariateSeries(self.ring, self.z_order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        z = min(self.z_order, other.z_order)
        out = [QLaurentSeries.zero(self.ring) for _ in range(z)]
        for m1, c1 in enumerate(self.coeffs):
            if c1.is_zero() and c1.order is None:
                continue
            for m2 in range(z - m1):
                c2 = other.coeffs[m2]
                out[m1 + m2] = out[m1 + m2] + c1 * c2
        return BivariateSeries(self.ring, z, out)

    def scale_series(self, s):
        """Multiply every coefficient by a scalar q-series."""
        return BivariateSeries(self.ring, self.z_order, [c * s for c in self.coeffs])

    def shift_z(self, d):
        """Multiply by z^d."""
        out = [QLaurentSeries.zero(self.ring) for _ in range(self.z_order)]
        for m in range(self.z_order - d):
            out[m + d] = self.coeffs[m]
        return BivariateSeries(self.ring, self.z_order, out)

    def mul_binomial(self, coeff, zdeg, qexp):
        """Multiply by (1 + coeff*z^zdeg*q^qexp); zdeg >= 1."""
        if zdeg < 1:
            raise ValueError("z-degree of a bivariate binomial must be >= 1")
        if isinstance(coeff, int):
            coeff = self.ring.from_int(coeff)
        out = list(self.coeffs)
        for m in range(self.z_order - 1, zdeg - 1, -1):
            src = self.coeffs[m - zdeg]
            if src.is_zero() and src.order is None:
                continue
            out[m] = out[m] + src.scale(coeff).shift(qexp)
        return BivariateSeries(self.ring, self.z_order, out)

    def div_binomial(self, coeff, zdeg, qexp):
        """Multiply by 1/(1 - coeff*z^zdeg*q^qexp) via the prefix recurrence."""
        if zdeg < 1:
            raise ValueError("z-degree of a bivariate geometric must be >= 1")
        if isinstance(coeff, int):
            coeff = self.ring.from_int(coeff)
        out = list(self.coeffs)
        for m in range(zdeg, self.z_order):
            src = out[m - zdeg]
            if src.is_zero() and src.order is None:
                continue
            out[m] = out[m] + src.scale(coeff).shift(qexp)
        return BivariateSeries(self.ring, self.z_order, out)

    def pochhammer_z(self, coeff, zdeg, qexp_start, qexp_step, q_order, inverse=False):
        """Multiply by prod_{i>=0} (1 + coeff*z^zdeg*q^(qexp_start + i*qexp_step)),
        or by its reciprocal (with the factor sign flipped to 1 - ...).

        Factors whose q-exponent can no longer touch any coefficient window
        below q_order are dropped; the reach-back allowance accounts for the
        most negative exponent present anywhere in the table.
        """
        lo = 0
        for c in self.coeffs:
            if c.coeffs:
                lo = min(lo, c.min_exp)
        # each extra z-factor application can combine with z_order-1 others
        cutoff = q_order - lo + max(0, -qexp_start) * self.z_order
        out = self
        e = qexp_start
        while e < cutoff:
            if inverse:
                out = out.div_binomial(coeff, zdeg, e)
            else:
                out = out.mul_binomial(coeff, zdeg, e)
            e += qexp_step
        return out

    def specialize_z(self, j, tail_order):
        """Substitute z = q^j: sum_m q^(j*m) * coeff_m.

        tail_order is the caller-supplied exclusive bound below which the
        discarded z^m terms (m >= z_order) provably cannot contribute; the
        result's window is the minimum of it and the shifted per-coefficient
        windows.
        """
        ring = self.ring
        total = QLaurentSeries.zero(ring, tail_order)
        for m, c in enumerate(self.coeffs):
            total = total + c.shift(j * m)
        return total

    def specialize_ab_zero(self):
        """For an a,b-polynomial coefficient ring: keep the a^0 b^0 part, over ZZ."""
        out = []
        for c in self.coeffs:
            d = {}
            for e, poly in c.coeffs.items():
                v = poly.coefficient(0, 0)
                if v:
                    d[e] = v
            out.append(QLaurentSeries(ZZ, d, c.order, _skip_normalize=True))
        return BivariateSeries(ZZ, self.z_order, out)


def compare_bivariate(lhs, rhs, q_lo, q_hi, z_hi=None):
    """Compare coefficientwise; returns (ok, witness) with witness =
    (z_exp, q_exp, lhs_coeff, rhs_coeff).  Raises ValueError when a
    coefficient window is too narrow for the requested range."""
    z = min(lhs.z_order, rhs.z_order)
    if z_hi is not None:
        z = min(z, z_hi)
    for m in range(z):
        c1, c2 = lhs.coeffs[m], rhs.coeffs[m]
        avail = _min_order(c1.order, c2.order)
        if avail is not None and avail < q_hi:
            raise ValueError(
                f"window too narrow at z^{m}: have order {avail}, need {q_hi}"
            )
        for e in sorted(set(c1.coeffs) | set(c2.coeffs)):
            if e < q_lo or e >= q_hi:
                continue
            a, b = c1.coefficient(e), c2.coefficient(e)
            if a != b:
                return False, (m, e, a, b)
    return True, None
