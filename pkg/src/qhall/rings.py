"""Exact coefficient rings for the series kernel.

Three rings are supported: plain integers, rationals (Fraction), and
integer polynomials in two formal symbols a, b with bounded degrees.
Ring objects act as tags and factories; the coefficient values themselves
are ordinary ints, Fractions, or ABPoly instances, so arithmetic goes
through the native operators.
"""

from __future__ import annotations

from fractions import Fraction


class RingMismatchError(TypeError):
    """Operands live in different coefficient rings."""


class NotInvertibleError(ArithmeticError):
    """Leading coefficient is not a unit of its ring."""


class DegreeCapError(OverflowError):
    """An a/b degree exceeded the declared cap."""


class IntegerRing:
    name = "ZZ"

    zero = 0
    one = 1

    def from_int(self, n):
        return n

    def invert_unit(self, c):
        if c == 1 or c == -1:
            return c
        raise NotInvertibleError(f"{c} is not a unit in ZZ")

    def coeff_str(self, c):
        return str(c)

    def __repr__(self):
        return "ZZ"


class RationalRing:
    name = "QQ"

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def invert_unit(self, c):
        if c == 0:
            raise NotInvertibleError("0 is not a unit")
        return 1 / Fraction(c)

    def coeff_str(self, c):
        return str(c)

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalRing()


class ABPoly:
    """Integer polynomial in the formal symbols a, b.

    Terms are stored sparsely as {(deg_a, deg_b): int}; zero coefficients
    are never stored.  Degrees in a and in b are each bounded by the cap
    of the owning ring; exceeding it raises instead of silently dropping.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _check(self, other):
        if not isinstance(other, ABPoly) or other.ring is not self.ring:
            raise RingMismatchError("mixed a,b coefficient rings")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        if not isinstance(other, ABPoly):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return ABPoly(self.ring, {k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                del out[k]
        return ABPoly(self.ring, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ABPoly(self.ring, {})
            return ABPoly(self.ring, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        cap = self.ring.cap
        t1, t2 = self.terms, other.terms
        if len(t1) > len(t2):
            t1, t2 = t2, t1
        if len(t1) == 1:
            # monomial path: no key collisions possible
            ((i1, j1), c1), = t1.items()
            out = {}
            for (i2, j2), c2 in t2.items():
                i, j = i1 + i2, j1 + j2
                if i > cap or j > cap:
                    raise DegreeCapError(
                        f"a,b degree {(i, j)} exceeds cap {cap}; enlarge the ring"
                    )
                out[(i, j)] = c1 * c2
            return ABPoly(self.ring, out)
        out = {}
        for (i1, j1), c1 in t1.items():
            for (i2, j2), c2 in t2.items():
                k = (i1 + i2, j1 + j2)
                if k[0] > cap or k[1] > cap:
                    raise DegreeCapError(
                        f"a,b degree {k} exceeds cap {cap}; enlarge the ring"
                    )
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return ABPoly(self.ring, out)

    __rmul__ = __mul__

    def coefficient(self, i, j):
        return self.terms.get((i, j), 0)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (i, j), c in sorted(self.terms.items()):
            mono = "".join(
                (f"a^{i}" if i > 1 else "a" if i == 1 else "",
                 f"b^{j}" if j > 1 else "b" if j == 1 else "")
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append("-" + mono)
            else:
                bits.append(f"{c}*{mono}")
        s = "+".join(bits).replace("+-", "-")
        return s

    __repr__ = __str__


class ABRing:
    """Ring Z[a,b] with per-variable degree cap."""

    name = "ZZ[a,b]"

    def __init__(self, cap):
        self.cap = cap
        self.zero = ABPoly(self, {})
        self.one = ABPoly(self, {(0, 0): 1})
        self.a = ABPoly(self, {(1, 0): 1})
        self.b = ABPoly(self, {(0, 1): 1})

    def from_int(self, n):
        if n == 0:
            return self.zero
        return ABPoly(self, {(0, 0): n})

    def invert_unit(self, c):
        if isinstance(c, ABPoly) and c.terms in ({(0, 0): 1}, {(0, 0): -1}):
            return c
        raise NotInvertibleError(f"{c} is not a unit in ZZ[a,b]")

    def coeff_str(self, c):
        return str(c)

    def __repr__(self):
        return f"ZZ[a,b;cap={self.cap}]"
