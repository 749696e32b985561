"""Sparse multivariate polynomials in x_1..x_n over integer Laurent polynomials in q."""

from __future__ import annotations

from fractions import Fraction


def qp_add(p1, p2):
    out = dict(p1)
    for e, c in p2.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


def qp_mul(p1, p2):
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            e = e1 + e2
            s = out.get(e, 0) + c1 * c2
            if s:
                out[e] = s
            elif e in out:
                del out[e]
    return out


def qp_neg(p):
    return {e: -c for e, c in p.items()}


def qp_substitute_power(p, m):
    return {e * m: c for e, c in p.items()}


def qp_eval(p, q):
    return sum((c * q**e for e, c in p.items()), Fraction(0))


def qp_str(p):
    if not p:
        return "0"
    bits = []
    for e in sorted(p):
        c = p[e]
        if e == 0:
            bits.append(str(c))
        else:
            mono = "q" if e == 1 else f"q^{e}"
            if c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
    return " + ".join(bits).replace("+ -", "- ")


class MPoly:
    """terms: {exponent-vector: q-Laurent dict}; no zero q-polys stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {} if terms is None else {k: v for k, v in terms.items() if v}

    @staticmethod
    def zero(n):
        return MPoly(n)

    @staticmethod
    def one(n):
        return MPoly(n, {(0,) * n: {0: 1}})

    @staticmethod
    def var(n, i):
        """x_i, 1-based."""
        exps = tuple(1 if j == i - 1 else 0 for j in range(n))
        return MPoly(n, {exps: {0: 1}})

    @staticmethod
    def monomial(n, exps, qpoly):
        return MPoly(n, {tuple(exps): dict(qpoly)})

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("variable-count mismatch")

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        raise TypeError("MPoly is not hashable")

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            cur = out.get(k)
            if cur is None:
                out[k] = v
            else:
                s = qp_add(cur, v)
                if s:
                    out[k] = s
                else:
                    del out[k]
        return MPoly(self.n, out)

    def __neg__(self):
        return MPoly(self.n, {k: qp_neg(v) for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def mul(self, other, max_degree=None):
        self._check(other)
        out = {}
        for k1, v1 in self.terms.items():
            d1 = sum(k1)
            for k2, v2 in other.terms.items():
                if max_degree is not None and d1 + sum(k2) > max_degree:
                    continue
                k = tuple(a + b for a, b in zip(k1, k2))
                p = qp_mul(v1, v2)
                cur = out.get(k)
                if cur is None:
                    out[k] = p
                else:
                    s = qp_add(cur, p)
                    if s:
                        out[k] = s
                    else:
                        del out[k]
        return MPoly(self.n, out)

    def __mul__(self, other):
        return self.mul(other)

    def scale_qpoly(self, qpoly):
        if not qpoly:
            return MPoly.zero(self.n)
        return MPoly(self.n, {k: qp_mul(v, qpoly) for k, v in self.terms.items()})

    def substitute_q_power(self, m):
        return MPoly(self.n, {k: qp_substitute_power(v, m) for k, v in self.terms.items()})

    def extend_vars(self, n2):
        if n2 < self.n:
            raise ValueError("cannot drop variables")
        pad = (0,) * (n2 - self.n)
        return MPoly(n2, {k + pad: dict(v) for k, v in self.terms.items()})

    def swap_vars(self, i, j):
        """Exchange x_i and x_j (1-based)."""
        out = {}
        for k, v in self.terms.items():
            kl = list(k)
            kl[i - 1], kl[j - 1] = kl[j - 1], kl[i - 1]
            out[tuple(kl)] = dict(v)
        return MPoly(self.n, out)

    def homogeneous_component(self, d):
        return MPoly(self.n, {k: v for k, v in self.terms.items() if sum(k) == d})

    def truncate_degree(self, max_degree):
        return MPoly(self.n, {k: v for k, v in self.terms.items() if sum(k) <= max_degree})

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), {})

    def total_degree(self):
        return max((sum(k) for k in self.terms), default=0)

    def eval_point(self, xs, q):
        """Exact evaluation at rationals; len(xs) == n."""
        total = Fraction(0)
        for k, v in self.terms.items():
            mono = Fraction(1)
            for x, e in zip(xs, k):
                if e:
                    mono *= Fraction(x) ** e
            total += mono * qp_eval(v, q)
        return total

    def dump_lines(self):
        """Canonical dump: "exponent-vector : q-polynomial", lexicographic."""
        return [
            f"{','.join(map(str, k))} : {qp_str(self.terms[k])}"
            for k in sorted(self.terms)
        ]

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for k in sorted(self.terms):
            mono = "*".join(
                f"x{i+1}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(k)
                if e
            )
            coeff = qp_str(self.terms[k])
            if not mono:
                bits.append(f"({coeff})")
            else:
                bits.append(f"({coeff})*{mono}" if coeff != "1" else mono)
        return " + ".join(bits)

    __repr__ = __str__


def geometric_mpoly(n, exps, max_degree):
    """1/(1 - x^exps) expanded through total degree max_degree."""
    step = sum(e for e in exps)
    if step <= 0:
        raise ValueError("geometric factor needs positive degree")
    out = {}
    t = 0
    while t * step <= max_degree:
        out[tuple(e * t for e in exps)] = {0: 1}
        t += 1
    return MPoly(n, out)


def compare_mpoly(lhs, rhs):
    """(ok, witness) where witness = (exps, q_exp, lhs_coeff, rhs_coeff)."""
    keys = set(lhs.terms) | set(rhs.terms)
    for k in sorted(keys):
        p1 = lhs.terms.get(k, {})
        p2 = rhs.terms.get(k, {})
        if p1 != p2:
            for e in sorted(set(p1) | set(p2)):
                if p1.get(e, 0) != p2.get(e, 0):
                    return False, (k, e, p1.get(e, 0), p2.get(e, 0))
    return True, None
