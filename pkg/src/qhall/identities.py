"""The identity registry.

Every entry builds the two sides of one summation identity through disjoint
code paths (partition sums against product expansions, branching
Hall-Littlewood polynomials against geometric expansions, sign-vector sums
against rational-point evaluation) and compares them exactly, reporting a
coefficient-level witness on the first mismatch.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bivariate import BivariateSeries
from .hall import (
    all_sign_vectors,
    arm_leg_product_cells,
    hl_oracle,
    hl_poly,
    phi_eval,
    sample_point,
)
from .mpoly import MPoly, geometric_mpoly, qp_mul
from .partitions import partitions, horizontal_strip_extensions
from .qbinom import qbinom, qbinom_partition
from .rings import ABRing, ZZ
from .series import (
    QLaurentSeries,
    SeriesFactor,
    invert,
    pochhammer_finite,
    pochhammer_infinite,
)
from .verify import Checker, IdentitySpec, VerificationReport, Witness


# ---------------------------------------------------------------------------
# cached elementary series
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _poch(sign, shift, step, m, order):
    return pochhammer_finite(SeriesFactor(sign, 1, shift, step), m, ZZ, order)


@lru_cache(maxsize=None)
def _inv_poch(sign, shift, step, m, order):
    return invert(_poch(sign, shift, step, m, order))


@lru_cache(maxsize=None)
def _inv_poch_inf(sign, shift, step, order):
    return invert(pochhammer_infinite(SeriesFactor(sign, 1, shift, step), order, ZZ))


def _neg_q_qpoly(m, step=1):
    """(-q^step; q^step)_m as a plain q-polynomial dict."""
    return dict(_poch(1, step, step, m, None).coeffs)


# ---------------------------------------------------------------------------
# MPoly-side product expansions
# ---------------------------------------------------------------------------


def _pair_vector(n, i, j):
    return tuple((1 if t == i else 0) + (1 if t == j else 0) for t in range(n))


def _phi_expansion(n, deg):
    """Phi(X) = prod (1+q x_i)/(1-x_i) * prod_{i<j} (1-q^2 x_i x_j)/(1-x_i x_j)."""
    out = MPoly.one(n)
    for i in range(n):
        xi = tuple(1 if t == i else 0 for t in range(n))
        out = out.mul(MPoly(n, {(0,) * n: {0: 1}, xi: {1: 1}}), deg)
        out = out.mul(geometric_mpoly(n, xi, deg), deg)
    for i in range(n):
        for j in range(i + 1, n):
            v = _pair_vector(n, i, j)
            out = out.mul(MPoly(n, {(0,) * n: {0: 1}, v: {2: -1}}), deg)
            out = out.mul(geometric_mpoly(n, v, deg), deg)
    return out


def _hl_sum_rhs(n, deg, step):
    """prod 1/(1-x_i) * prod_{i<j} (1-q^step x_i x_j)/(1-x_i x_j)."""
    out = MPoly.one(n)
    for i in range(n):
        xi = tuple(1 if t == i else 0 for t in range(n))
        out = out.mul(geometric_mpoly(n, xi, deg), deg)
    for i in range(n):
        for j in range(i + 1, n):
            v = _pair_vector(n, i, j)
            out = out.mul(MPoly(n, {(0,) * n: {0: 1}, v: {step: -1}}), deg)
            out = out.mul(geometric_mpoly(n, v, deg), deg)
    return out


def _pair_product_rhs(n, deg):
    """prod_{i<=j} (1-q x_i x_j)/(1-x_i x_j), diagonal included."""
    out = MPoly.one(n)
    for i in range(n):
        for j in range(i, n):
            v = _pair_vector(n, i, j)
            out = out.mul(MPoly(n, {(0,) * n: {0: 1}, v: {1: -1}}), deg)
            out = out.mul(geometric_mpoly(n, v, deg), deg)
    return out


def _elementary_mpoly(n, d):
    if d == 0:
        return MPoly.one(n)
    if d > n:
        return MPoly.zero(n)
    terms = {}
    for combo in itertools.combinations(range(n), d):
        exps = tuple(1 if t in combo else 0 for t in range(n))
        terms[exps] = {0: 1}
    return MPoly(n, terms)


# ---------------------------------------------------------------------------
# runners: Hall-Littlewood summations, compared degreewise in x
# ---------------------------------------------------------------------------


def verify_kawanaka(params, checker):
    spec = IdentitySpec("kawanaka", "mpoly-degreewise", params,
                        "full Hall-Littlewood sum with odd-multiplicity weights vs Phi")
    n_values = params.get("n_values") or [params["n"]]
    deg = params["D"]
    for n in n_values:
        lhs = MPoly.zero(n)
        for lam in partitions(max_weight=deg, max_length=n):
            coeff = {0: 1}
            for m in lam.multiplicities().values():
                coeff = qp_mul(coeff, _neg_q_qpoly(m))
            lhs = lhs + hl_poly(lam, n, q_square=True).scale_qpoly(coeff)
        rhs = _phi_expansion(n, deg)
        for d in range(deg + 1):
            ok, w = checker.mpoly(
                f"n={n} deg {d}", lhs.homogeneous_component(d), rhs.homogeneous_component(d)
            )
            if not ok:
                return VerificationReport(spec, "mismatch", f"n={n}", w)
    return VerificationReport(
        spec, "match", f"x-degree {deg} for n in {list(n_values)}"
    )


def verify_hl_summation(params, checker):
    spec = IdentitySpec("hl-sum", "mpoly-degreewise", params,
                        "sum of all Hall-Littlewood polynomials vs product form, q and q^2")
    n_values = params.get("n_values") or [params["n"]]
    deg = params["D"]
    for n in n_values:
        for step in (1, 2):
            lhs = MPoly.zero(n)
            for lam in partitions(max_weight=deg, max_length=n):
                lhs = lhs + hl_poly(lam, n, q_square=(step == 2))
            rhs = _hl_sum_rhs(n, deg, step)
            for d in range(deg + 1):
                ok, w = checker.mpoly(
                    f"n={n} step={step} deg {d}",
                    lhs.homogeneous_component(d),
                    rhs.homogeneous_component(d),
                )
                if not ok:
                    return VerificationReport(spec, "mismatch", f"n={n} q^{step}", w)
    return VerificationReport(spec, "match", f"x-degree {deg}, both variable powers")


def verify_kawanaka2(params, checker):
    spec = IdentitySpec("kawanaka2", "mpoly-degreewise", params,
                        "even-odd-multiplicity Hall-Littlewood sum vs symmetric pair product")
    n_values = params.get("n_values") or [params["n"]]
    deg = params["D"]
    for n in n_values:
        lhs = MPoly.zero(n)
        for lam in partitions(max_weight=deg, max_length=n):
            if any(v % 2 and p % 2 for p, v in lam.multiplicities().items()):
                continue
            o = lam.o_stat()
            if o % 2:
                return VerificationReport(
                    spec, "error", detail=f"odd part-count parity violated at {lam}"
                )
            coeff = {o // 2: 1}
            coeff = qp_mul(coeff, arm_leg_product_cells(lam))
            lhs = lhs + hl_poly(lam, n).scale_qpoly(coeff)
        rhs = _pair_product_rhs(n, deg)
        for d in range(deg + 1):
            ok, w = checker.mpoly(
                f"n={n} deg {d}", lhs.homogeneous_component(d), rhs.homogeneous_component(d)
            )
            if not ok:
                return VerificationReport(spec, "mismatch", f"n={n}", w)
    return VerificationReport(spec, "match", f"x-degree {deg} for n in {list(n_values)}")


def _mac_y_elementaries(length, y_degree):
    """e_d of {q^(1-j) : j=1..length} for d running to y_degree, as Laurent q-polys."""
    es = [{0: 1}] + [{} for _ in range(y_degree)]
    for j in range(1, length + 1):
        mono = {1 - j: 1}
        for d in range(min(j, y_degree), 0, -1):
            es[d] = dict(es[d])
            for e, c in qp_mul(es[d - 1], mono).items():
                s = es[d].get(e, 0) + c
                if s:
                    es[d][e] = s
                elif e in es[d]:
                    del es[d][e]
    return es


def verify_macdonald_y(params, checker):
    """Tests the one-extra-parameter Hall-Littlewood sum under both n() conventions
    (index-weighted sum_i (i-1)*lambda_i vs row-binomial sum_i C(lambda_i,2)) and
    reports which one validates."""
    spec = IdentitySpec("macdonald-y", "mpoly-degreewise", params,
                        "y-deformed Hall-Littlewood sum; reports validating n() convention")
    from .mpoly import compare_mpoly

    n_values = params.get("n_values") or [params["n"]]
    deg = params["D"]
    y_degree = params["y_degree"]
    outcomes = {}
    witnesses = {}
    for conv in ("index-weighted", "row-binomial"):
        good = True
        wit = None
        for n in n_values:
            lhs_by_d = [MPoly.zero(n) for _ in range(y_degree + 1)]
            for lam in partitions(max_weight=deg, max_length=n):
                nstat = (
                    sum((i - 1) * p for i, p in enumerate(lam.parts, start=1))
                    if conv == "index-weighted"
                    else lam.n_stat()
                )
                es = _mac_y_elementaries(lam.length(), y_degree)
                p = hl_poly(lam, n)
                for d in range(y_degree + 1):
                    coeff = qp_mul({nstat: 1}, es[d])
                    if coeff:
                        lhs_by_d[d] = lhs_by_d[d] + p.scale_qpoly(coeff)
            geom_all = MPoly.one(n)
            for i in range(n):
                xi = tuple(1 if t == i else 0 for t in range(n))
                geom_all = geom_all.mul(geometric_mpoly(n, xi, deg), deg)
            for d in range(y_degree + 1):
                rhs = _elementary_mpoly(n, d).mul(geom_all, deg)
                for dd in range(deg + 1):
                    ok, w = compare_mpoly(
                        lhs_by_d[d].homogeneous_component(dd),
                        rhs.homogeneous_component(dd),
                    )
                    if not ok:
                        good = False
                        if wit is None:
                            k, e, a, b = w
                            wit = Witness(
                                f"n={n} y^{d} x^({','.join(map(str, k))}) q^{e}",
                                str(a), str(b),
                            )
        outcomes[conv] = good
        witnesses[conv] = wit
    detail = "; ".join(
        f"{conv} n(): {'match' if ok else 'mismatch'}" for conv, ok in outcomes.items()
    )
    if outcomes["index-weighted"] or outcomes["row-binomial"]:
        return VerificationReport(
            spec, "match", f"x-degree {deg}, y-degree {y_degree}", detail=detail
        )
    return VerificationReport(
        spec, "mismatch", "", witnesses["index-weighted"], detail=detail
    )


# ---------------------------------------------------------------------------
# finite extension at rational points
# ---------------------------------------------------------------------------


def _neg_q_value(q, m):
    out = Fraction(1)
    for j in range(1, m + 1):
        out *= 1 + q**j
    return out


def verify_kawanaka_finite(params, checker):
    spec = IdentitySpec("kawanaka-finite", "rational-point", params,
                        "bounded-first-row Hall-Littlewood sum vs sign-twisted Phi sum")
    cases = params.get("cases")
    if cases is None:
        cases = [
            (n, k)
            for n in (params.get("n_values") or [params["n"]])
            for k in (params.get("k_values") or [params["k"]])
        ]
    points = params["points"]
    seed = params.get("seed", 0)
    lam_cache = {}
    total_points = 0
    for n, k in cases:
        lams = lam_cache.setdefault(
            (n, k), list(partitions(max_part=k, max_length=n))
        )
        rng = random.Random(f"kawanaka-finite:{seed}:{n}:{k}")
        plan = [(False, i) for i in range(points)] + [(True, i) for i in range(2)]
        for q_zero, idx in plan:
            point = sample_point(rng, n, q_zero=q_zero)
            q = point.q
            lhs = Fraction(0)
            for lam in lams:
                coeff = Fraction(1)
                mults = lam.multiplicities()
                for i in range(1, k):
                    coeff *= _neg_q_value(q, mults.get(i, 0))
                lhs += coeff * hl_poly(lam, n, q_square=True).eval_point(point.xs, q)
            rhs = Fraction(0)
            for xi in all_sign_vectors(n):
                rhs += phi_eval(xi, point, k)
            label = f"n={n} k={k} {'q=0 ' if q_zero else ''}point {idx}"
            ok, w = checker.value(label, lhs, rhs)
            if not ok:
                return VerificationReport(spec, "mismatch", f"n={n} k={k}", w)
            total_points += 1
    return VerificationReport(
        spec, "match", f"{total_points} rational points over {len(cases)} (n,k) cases"
    )


def verify_hl_oracle(params, checker):
    spec = IdentitySpec("hl-oracle", "rational-point", params,
                        "branching Hall-Littlewood vs definitional permutation sum")
    max_weight = params["max_weight"]
    n_max = params["n_max"]
    points = params["points"]
    seed = params.get("seed", 0)
    issues = []
    npoints = 0
    for n in range(1, n_max + 1):
        rng = random.Random(f"hl-oracle:{seed}:{n}")
        pts = [sample_point(rng, n) for _ in range(points)]
        for lam in partitions(max_weight=max_weight, max_length=n):
            p = hl_poly(lam, n)
            dom = p.coefficient(tuple(lam.parts) + (0,) * (n - len(lam)))
            if dom != {0: 1}:
                issues.append(f"dominant coefficient of {lam} at n={n} is {dom}")
            if n >= 2:
                i, j = (rng.randrange(1, n + 1), rng.randrange(1, n + 1))
                if i != j and p.swap_vars(i, j) != p:
                    issues.append(f"{lam} at n={n} not symmetric under swap {i},{j}")
            for idx, point in enumerate(pts):
                ok, w = checker.value(
                    f"{lam} n={n} point {idx}",
                    p.eval_point(point.xs, point.q),
                    hl_oracle(lam, n, point),
                )
                npoints += 1
                if not ok:
                    return VerificationReport(spec, "mismatch", f"{lam} n={n}", w)
    if issues:
        return VerificationReport(
            spec, "mismatch", "", Witness(issues[0], "", ""), detail="; ".join(issues[:3])
        )
    return VerificationReport(
        spec, "match",
        f"{npoints} point checks, monic+symmetry, weight<={max_weight}, n<={n_max}",
    )


# ---------------------------------------------------------------------------
# bivariate principal-specialization identities (integer coefficients)
# ---------------------------------------------------------------------------


def _principal_lhs(n, k, z_order, q_order):
    out = BivariateSeries.zero(ZZ, z_order, q_order)
    for w in range(z_order):
        acc = QLaurentSeries.zero(ZZ, q_order)
        for lam in partitions(weight=w, max_length=k):
            if lam.part(1) > n:
                continue
            coeff = qbinom_partition(n, lam, step=2)
            for g in lam.padded_gaps(k)[: k - 1]:
                coeff = coeff * _poch(1, 1, 1, g, None)
            acc = acc + coeff.shift(lam.n2_stat()).truncate(q_order)
        out.coeffs[w] = acc
    return out


def _principal_rhs(n, k, z_order, q_order):
    total = BivariateSeries.zero(ZZ, z_order, q_order)
    for r in range(n + 1):
        t = BivariateSeries.one(ZZ, z_order, q_order)
        for e in range(2 * n + 1):
            t = t.mul_binomial(1, 1, e)
        for i in range(n + 1):
            t = t.div_binomial(1, 2, 2 * r + 2 * i)
        t = t.mul_binomial(-1, 1, 2 * r)
        scalar = qbinom(n, r, step=2).shift((k + 1) * r * r)
        if r % 2:
            scalar = -scalar
        total = total + t.scale_series(scalar).shift_z(k * r)
    return total


def verify_principal(params, checker):
    spec = IdentitySpec("principal", "zq-bivariate", params,
                        "principal specialization of the finite sum vs its closed r-sum")
    z_order, q_order = params["z_order"], params["q_order"]
    cases = [
        (n, k)
        for n in (params.get("n_values") or [params["n"]])
        for k in (params.get("k_values") or [params["k"]])
    ]
    for n, k in cases:
        lhs = _principal_lhs(n, k, z_order, q_order)
        rhs = _principal_rhs(n, k, z_order, q_order)
        for m in range(z_order):
            ok, w, _ = checker.series(
                f"n={n} k={k} z^{m}", lhs.coeffs[m], rhs.coeffs[m], lo=0, hi=q_order
            )
            if not ok:
                return VerificationReport(spec, "mismatch", f"n={n} k={k}", w)
    return VerificationReport(
        spec, "match", f"z^{z_order - 1}, q^{q_order - 1} over {len(cases)} (n,k) cases"
    )


def verify_klimit(params, checker):
    spec = IdentitySpec("klimit", "zq-bivariate", params,
                        "unbounded-width principal sum vs (-z)_2n/(z^2;q^2)_n")
    z_order, q_order = params["z_order"], params["q_order"]
    for n in params.get("n_values") or [params["n"]]:
        lhs = BivariateSeries.zero(ZZ, z_order, q_order)
        for w in range(z_order):
            acc = QLaurentSeries.zero(ZZ, q_order)
            for lam in partitions(weight=w, max_part=n):
                coeff = qbinom_partition(n, lam, step=2)
                for g in lam.gaps():
                    coeff = coeff * _poch(1, 1, 1, g, None)
                acc = acc + coeff.shift(2 * lam.n_stat()).truncate(q_order)
            lhs.coeffs[w] = acc
        rhs = BivariateSeries.one(ZZ, z_order, q_order)
        for e in range(2 * n):
            rhs = rhs.mul_binomial(1, 1, e)
        for i in range(n):
            rhs = rhs.div_binomial(1, 2, 2 * i)
        for m in range(z_order):
            ok, w, _ = checker.series(
                f"n={n} z^{m}", lhs.coeffs[m], rhs.coeffs[m], lo=0, hi=q_order
            )
            if not ok:
                return VerificationReport(spec, "mismatch", f"n={n}", w)
    return VerificationReport(spec, "match", f"z^{z_order - 1}, q^{q_order - 1}")


def verify_binomial_product(params, checker):
    spec = IdentitySpec("binomial-product", "zq-bivariate", params,
                        "partition-binomial generating sum vs (-z)_n/(z^2)_n")
    z_order, q_order = params["z_order"], params["q_order"]
    for n in params.get("n_values") or [params["n"]]:
        lhs = BivariateSeries.zero(ZZ, z_order, q_order)
        for w in range(z_order):
            acc = QLaurentSeries.zero(ZZ, q_order)
            for lam in partitions(weight=w, max_part=n):
                acc = acc + qbinom_partition(n, lam).shift(lam.n_stat()).truncate(q_order)
            lhs.coeffs[w] = acc
        rhs = BivariateSeries.one(ZZ, z_order, q_order)
        for e in range(n):
            rhs = rhs.mul_binomial(1, 1, e)
        for i in range(n):
            rhs = rhs.div_binomial(1, 2, i)
        for m in range(z_order):
            ok, w, _ = checker.series(
                f"n={n} z^{m}", lhs.coeffs[m], rhs.coeffs[m], lo=0, hi=q_order
            )
            if not ok:
                return VerificationReport(spec, "mismatch", f"n={n}", w)
    return VerificationReport(spec, "match", f"z^{z_order - 1}, q^{q_order - 1}")


def verify_qpieri(params, checker):
    spec = IdentitySpec("qpieri", "polynomial", params,
                        "row-adding binomial expansion over horizontal strips")
    n_max, m_max, weight_max = params["n_max"], params["m_max"], params["weight_max"]
    cases = 0
    for n in range(1, n_max + 1):
        for mu in partitions(max_weight=weight_max):
            if mu.part(1) > n:
                continue
            for m in range(m_max + 1):
                lhs = (qbinom(n, m) * qbinom_partition(n, mu)).shift(
                    m * (m - 1) // 2 + mu.n_stat()
                )
                rhs = QLaurentSeries.zero(ZZ)
                for lam in horizontal_strip_extensions(mu, m, max_first_part=n):
                    term = qbinom_partition(n, lam).shift(lam.n_stat())
                    parts = lam.parts
                    for i in range(len(parts)):
                        nxt = parts[i + 1] if i + 1 < len(parts) else 0
                        term = term * qbinom(parts[i] - nxt, parts[i] - mu.part(i + 1))
                    rhs = rhs + term
                cases += 1
                ok, w, _ = checker.series(f"n={n} m={m} mu={mu}", lhs, rhs)
                if not ok:
                    return VerificationReport(spec, "mismatch", f"n={n} m={m} mu={mu}", w)
    return VerificationReport(spec, "match", f"{cases} exact polynomial cases")


def verify_csq_euler(params, checker):
    spec = IdentitySpec("csq-euler", "polynomial", params,
                        "odd-power binomial column sum vs distinct-parts product")
    n_max = params["n_max"]
    for n in range(n_max + 1):
        lhs = QLaurentSeries.zero(ZZ)
        for k in range(n + 1):
            lhs = lhs + qbinom(n, k, step=2).shift(k)
        rhs = QLaurentSeries.one(ZZ)
        for k in range(1, n + 1):
            rhs = rhs.mul_binomial(1, k)
        ok, w, _ = checker.series(f"n={n}", lhs, rhs)
        if not ok:
            return VerificationReport(spec, "mismatch", f"n={n}", w)
    return VerificationReport(spec, "match", f"exact polynomials for n<={n_max}")


# ---------------------------------------------------------------------------
# a,b-extended identities over ZZ[a,b]
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _ab_ring(cap):
    return ABRing(cap)


@lru_cache(maxsize=None)
def _abq_poch_shifted(t, cap, order=None):
    """q^(t(t-1)) * (a,b; 1/q)_t over ZZ[a,b], truncated below `order`.

    Expanded through the finite binomial theorem in the inverted base:
    (a;1/q)_t = sum_i (-1)^i q^(-C(i,2)-i(t-i)) [t i] a^i, so the a^i b^j
    piece of the shifted product sits at q^(C(t-i,2)+C(t-j,2)) and up.
    Everything is a power series after the shift.
    """
    from .rings import ABPoly

    ring = _ab_ring(cap)
    rows = []
    for i in range(t + 1):
        e = (t - i) * (t - i - 1) // 2
        if order is not None and e >= order:
            continue
        rows.append((i, e, sorted(qbinom(t, i).coeffs.items())))
    out = {}
    for i, ei, pi in rows:
        for j, ej, pj in rows:
            e0 = ei + ej
            if order is not None and e0 >= order:
                continue
            sign = -1 if (i + j) % 2 else 1
            for e1, c1 in pi:
                if order is not None and e0 + e1 >= order:
                    break
                for e2, c2 in pj:
                    e = e0 + e1 + e2
                    if order is not None and e >= order:
                        break
                    mono = out.setdefault(e, {})
                    mono[(i, j)] = mono.get((i, j), 0) + sign * c1 * c2
    coeffs = {}
    for e, mono in out.items():
        mono = {k: v for k, v in mono.items() if v}
        if mono:
            coeffs[e] = ABPoly(ring, mono)
    return QLaurentSeries(ring, coeffs, order, _skip_normalize=True)


def _stembridge_lhs(z_order, q_hi, ring):
    out = BivariateSeries.zero(ring, z_order, q_hi)
    for w in range(z_order):
        acc = QLaurentSeries.zero(ring, q_hi)
        for lam in partitions(weight=w):
            t = lam.part(1)
            inv = QLaurentSeries.one(ZZ, q_hi)
            for g in lam.gaps():
                inv = inv * _inv_poch(-1, 1, 1, g, q_hi)
            # 2n(lambda) - t(t-1) >= 0, so the shifted product stays a power series
            term = _abq_poch_shifted(t, ring.cap, q_hi) * inv.to_ring(ring)
            acc = acc + term.shift(2 * lam.n_stat() - t * (t - 1))
        out.coeffs[w] = acc
    return out


def _stembridge_rhs(z_order, q_hi, ring):
    out = BivariateSeries.one(ring, z_order, q_hi)
    a, b = ring.a, ring.b
    ab = a * b
    out = out.pochhammer_z(-a, 1, 0, 1, q_hi)
    out = out.pochhammer_z(-b, 1, 0, 1, q_hi)
    out = out.pochhammer_z(1, 1, 0, 1, q_hi, inverse=True)
    out = out.pochhammer_z(ab, 1, 0, 1, q_hi, inverse=True)
    return out


def verify_stembridge(params, checker):
    spec = IdentitySpec("stembridge-ab", "zq-bivariate", params,
                        "two-parameter partition sum vs (az,bz)/(z,abz) product")
    z_order = params["z_order"]
    q_lo, q_hi = params["window"]
    ring = _ab_ring(z_order + 1)
    lhs = _stembridge_lhs(z_order, q_hi, ring)
    rhs = _stembridge_rhs(z_order, q_hi, ring)
    for m in range(z_order):
        ok, w, _ = checker.series(f"z^{m}", lhs.coeffs[m], rhs.coeffs[m], lo=q_lo, hi=q_hi)
        if not ok:
            return VerificationReport(spec, "mismatch", f"z^{m}", w)
    return VerificationReport(
        spec, "match", f"z^{z_order - 1}, q-window [{q_lo},{q_hi})"
    )


def _master_lhs_bivariate(k, z_order, hi_b, ring):
    # group by the first part: the a,b-dependence enters only through it,
    # so the integer inner sums are accumulated first and joined once
    groups = {}
    for w in range(z_order):
        for lam in partitions(weight=w, max_length=k):
            t = lam.part(1)
            inv = _inv_poch(1, 1, 1, lam.part(k), hi_b)
            for g in lam.padded_gaps(k):
                inv = inv * _inv_poch(-1, 1, 1, g, hi_b)
            # 2n(lambda) - t(t-1) >= 0: the shift keeps integer exponents >= 0
            shifted = inv.shift(2 * lam.n_stat() - t * (t - 1))
            slot = groups.setdefault(t, [QLaurentSeries.zero(ZZ, hi_b)] * z_order)
            slot[w] = slot[w] + shifted
    out = BivariateSeries.zero(ring, z_order, hi_b)
    for t, slots in groups.items():
        ab = _abq_poch_shifted(t, ring.cap, hi_b)
        for m, c in enumerate(slots):
            if not c.is_zero():
                out.coeffs[m] = out.coeffs[m] + ab * c.to_ring(ring)
    return out


def _master_rhs_bivariate(k, z_order, hi_b, ring):
    a, b = ring.a, ring.b
    total = BivariateSeries.zero(ring, z_order, hi_b)
    r = 0
    while k * r < z_order:
        # q^(r + (2k+2) C(r,2)) * (a,b;1/q)_r has lowest exponent r + 2k*C(r,2)
        base = r + 2 * k * (r * (r - 1) // 2)
        if base >= hi_b:
            break
        t = BivariateSeries.one(ring, z_order, hi_b)
        t = t.pochhammer_z(-a, 1, r, 1, hi_b)
        t = t.pochhammer_z(-b, 1, r, 1, hi_b)
        t = t.pochhammer_z(1, 2, 2 * r - 2, 2, hi_b, inverse=True)
        t = t.mul_binomial(-1, 1, 2 * r - 1)
        scalar = _abq_poch_shifted(r, ring.cap, hi_b).shift(base)
        scalar = scalar * _inv_poch(-1, 2, 2, r, hi_b).to_ring(ring)
        if r % 2:
            scalar = -scalar
        # shift in z first so the scalar's a,b degrees land inside the caps
        total = total + t.shift_z(k * r).scale_series(scalar)
        r += 1
    total = total.pochhammer_z(1, 1, -1, 1, hi_b)  # (-z/q)_infinity
    total = total.pochhammer_z(a * b, 1, 0, 1, hi_b, inverse=True)  # 1/(abz)_infinity
    return total


@lru_cache(maxsize=None)
def _master_sides(k, z_order, hi_b, cap):
    ring = _ab_ring(cap)
    return (
        _master_lhs_bivariate(k, z_order, hi_b, ring),
        _master_rhs_bivariate(k, z_order, hi_b, ring),
    )


def verify_master_ab(params, checker):
    spec = IdentitySpec("master-ab", "zq-bivariate", params,
                        "two-parameter finite-width sum vs its r-sum of infinite products")
    z_order = params["z_order"]
    q_lo, q_hi = params["window"]
    hi_b = q_hi + z_order + 2
    for k in params.get("k_values") or [params["k"]]:
        lhs, rhs = _master_sides(k, z_order, hi_b, z_order + 1)
        for m in range(z_order):
            ok, w, _ = checker.series(
                f"k={k} z^{m}", lhs.coeffs[m], rhs.coeffs[m], lo=q_lo, hi=q_hi
            )
            if not ok:
                return VerificationReport(spec, "mismatch", f"k={k} z^{m}", w)
    return VerificationReport(
        spec, "match", f"z^{z_order - 1}, q-window [{q_lo},{q_hi})"
    )


# ---------------------------------------------------------------------------
# master specializations z = q^2 and z = q
# ---------------------------------------------------------------------------


def _series_ab_constant(s):
    out = {}
    for e, poly in s.coeffs.items():
        v = poly.coefficient(0, 0)
        if v:
            out[e] = v
    return QLaurentSeries(ZZ, out, s.order, _skip_normalize=True)


def master_rhs_direct(which, k, order, ring):
    """The reduced right-hand sides at z=q^2 / z=q, computed from their
    displayed closed forms (independent of the bivariate assembly)."""
    a, b = ring.a, ring.b
    inv_qinf = _inv_poch_inf(-1, 1, 1, order).to_ring(ring)
    if which == "zq2":
        total = QLaurentSeries.zero(ring, order)
        r = 0
        while True:
            base = (2 * k + 1) * r + 2 * k * (r * (r - 1) // 2)
            if base >= order:
                break
            term = _abq_poch_shifted(r, ring.cap, order).shift(
                (2 * k + 1) * r + (2 * k + 2) * (r * (r - 1) // 2) - r * (r - 1)
            ).truncate(order)
            for i in range(order - r - 2):
                term = term.mul_binomial(-a, r + 2 + i)
                term = term.mul_binomial(-b, r + 2 + i)
            term = term.mul_binomial(-1, 2 * r + 1)
            if r % 2:
                term = -term
            total = total + term
            r += 1
        total = total * inv_qinf
        for i in range(order):
            total = total.div_binomial(a * b, 2 + i)
        return total
    if which == "zq":
        head = QLaurentSeries.one(ring, order)
        for i in range(1, order):
            head = head.mul_binomial(-a, i)
            head = head.mul_binomial(-b, i)
        total = head
        r = 1
        while (k + 1) * r * r - r * (r - 1) < order:
            term = _abq_poch_shifted(r, ring.cap, order).shift(
                (k + 1) * r * r - r * (r - 1)
            ).truncate(order)
            for i in range(order - r - 1):
                term = term.mul_binomial(-a, r + 1 + i)
                term = term.mul_binomial(-b, r + 1 + i)
            term = term.scale(2)
            if r % 2:
                term = -term
            total = total + term
            r += 1
        total = total * inv_qinf
        for i in range(order):
            total = total.div_binomial(a * b, 1 + i)
        return total
    raise ValueError(f"unknown master specialization {which!r}")


@lru_cache(maxsize=None)
def build_master_specialized(which, k, q_order):
    """Specialize the assembled two-variable sides at z=q^2 (zq2) or z=q (zq).

    z_order is chosen so the discarded z-tail provably cannot reach below
    q_order: the left coefficients have q-valuation >= m (so tail >= (j+1)m),
    the right ones >= m-2 against the shift j*m.
    """
    j = 2 if which == "zq2" else 1
    z_order = max(q_order // (j + 1) + 1, (q_order + 2) // j + 1)
    hi_b = q_order + 4
    lhs_b, rhs_b = _master_sides(k, z_order, hi_b, z_order + 1)
    lhs = lhs_b.specialize_z(j, (j + 1) * z_order)
    rhs = rhs_b.specialize_z(j, j * z_order - 2)
    return lhs, rhs, _ab_ring(z_order + 1)


def verify_master_special(params, checker):
    which = params["which"]
    spec = IdentitySpec(f"master-{which}", "q-series", params,
                        "assembled two-variable identity specialized at "
                        + ("z=q^2" if which == "zq2" else "z=q"))
    q_order = params["q_order"]
    for k in params.get("k_values") or [params["k"]]:
        lhs, rhs, ring = build_master_specialized(which, k, q_order)
        ok, w, _ = checker.series(f"k={k}", lhs, rhs, hi=q_order)
        if not ok:
            return VerificationReport(spec, "mismatch", f"k={k}", w)
        direct = master_rhs_direct(which, k, q_order, ring)
        ok, w, _ = checker.series(f"k={k} reduced form", rhs, direct, hi=q_order)
        if not ok:
            return VerificationReport(
                spec, "mismatch", f"k={k}", w, detail="assembly vs displayed reduced form"
            )
    return VerificationReport(spec, "match", f"q^{q_order - 1} with formal a,b")


# ---------------------------------------------------------------------------
# the twelve multiple Rogers-Ramanujan type identities
# ---------------------------------------------------------------------------


def _num_one(t, order):
    return QLaurentSeries.one(ZZ, order)


def _num_negq(t, order):
    return _poch(1, 1, 1, t, order)


def _num_negq_2t(t, order):
    return _poch(1, 1, 1, 2 * t, order)


def _num_negq_odd(t, order):
    return _poch(1, 1, 2, t, order)


def _num_negq_row(t, order):
    # (-q)_t * (1 - q^t); vanishes on the empty row
    if t == 0:
        return QLaurentSeries.zero(ZZ, order)
    return _poch(1, 1, 1, t, order).mul_binomial(-1, t)


def _num_row2(t, order):
    if t == 0:
        return QLaurentSeries.zero(ZZ, order)
    return QLaurentSeries.one(ZZ, order).mul_binomial(-1, 2 * t)


@dataclass(frozen=True)
class RRSpec:
    """One partition-sum identity of Rogers-Ramanujan type.

    The summand exponent is sum_i (alpha*part_i^2 + beta*part_i) + top(first
    part); num multiplies in first-row factors, the denominators are the
    gap product in base q^gap_base and the last-entry factor in base
    q^neg_base.  rhs lists ((sign, shift, step), ...) numerator Pochhammers
    followed by inverse Pochhammers for the product side.
    """

    alpha: int
    beta: int
    top: object
    num: object
    gap_base: int
    neg_base: int
    rhs_num: tuple
    rhs_den: tuple


def _rr_spec_table(k):
    c2 = lambda t: t * (t - 1) // 2
    return {
        "krr1": RRSpec(1, 1, lambda t: 0, _num_one, 1, 1,
                       ((-1, 2 * k + 2, 2 * k + 2), (-1, 2 * k + 1, 2 * k + 2), (-1, 1, 2 * k + 2)),
                       ((-1, 1, 1),)),
        "krr2": RRSpec(1, 1, lambda t: -(t * t + t) // 2, _num_negq, 1, 1,
                       ((1, 1, 1), (-1, 2 * k + 1, 2 * k + 1), (-1, 2 * k, 2 * k + 1), (-1, 1, 2 * k + 1)),
                       ((-1, 1, 1),)),
        "krr3": RRSpec(2, 2, lambda t: -t * t, _num_negq_odd, 2, 2,
                       ((1, 1, 2), (-1, 4 * k + 2, 4 * k + 2), (-1, 4 * k + 1, 4 * k + 2), (-1, 1, 4 * k + 2)),
                       ((-1, 2, 2),)),
        "krr4": RRSpec(2, 2, lambda t: -2 * t * t - t, _num_negq_2t, 2, 2,
                       ((1, 1, 1), (-1, 4 * k, 4 * k), (-1, 4 * k - 1, 4 * k), (-1, 1, 4 * k)),
                       ((-1, 1, 1),)),
        "krr5": RRSpec(1, 1, lambda t: -(t * t + 3 * t) // 2, _num_negq_row, 1, 1,
                       ((1, 1, 1), (-1, 2 * k + 1, 2 * k + 1), (-1, 2 * k - 1, 2 * k + 1), (-1, 2, 2 * k + 1)),
                       ((-1, 1, 1),)),
        "krr6": RRSpec(1, 1, lambda t: -t, _num_one, 1, 1,
                       ((-1, 2 * k + 2, 2 * k + 2), (-1, 2 * k, 2 * k + 2), (-1, 2, 2 * k + 2)),
                       ((-1, 1, 1),)),
        "krr7": RRSpec(2, 2, lambda t: -t * t - 2 * t, _num_negq_odd, 2, 2,
                       ((1, 1, 2), (-1, 4 * k + 2, 4 * k + 2), (-1, 4 * k - 1, 4 * k + 2), (-1, 3, 4 * k + 2)),
                       ((-1, 2, 2),)),
        "krr8": RRSpec(1, 1, lambda t: -2 * t, _num_row2, 1, 1,
                       ((-1, 2 * k + 2, 2 * k + 2), (-1, 2 * k - 1, 2 * k + 2), (-1, 3, 2 * k + 2)),
                       ((-1, 1, 1),)),
        "krr9": RRSpec(1, 0, lambda t: 0, _num_one, 1, 1,
                       ((-1, 2 * k + 2, 2 * k + 2), (-1, k + 1, 2 * k + 2), (-1, k + 1, 2 * k + 2)),
                       ((-1, 1, 1),)),
        "krr10": RRSpec(2, 0, lambda t: -t * t, _num_negq_odd, 2, 2,
                        ((1, 1, 2), (-1, 4 * k + 2, 4 * k + 2), (-1, 2 * k + 1, 4 * k + 2), (-1, 2 * k + 1, 4 * k + 2)),
                        ((-1, 2, 2),)),
        "krr11": RRSpec(1, 0, lambda t: -(t * t + t) // 2, _num_negq, 1, 1,
                        ((1, 0, 1), (-1, 2 * k + 1, 2 * k + 1), (-1, k, 2 * k + 1), (-1, k + 1, 2 * k + 1)),
                        ((-1, 1, 1),)),
        "krr12": RRSpec(1, 0, lambda t: -t, _num_one, 1, 1,
                        ((1, 0, 1), (-1, 2 * k + 2, 2 * k + 2), (-1, k, 2 * k + 2), (-1, k + 2, 2 * k + 2)),
                        ((-1, 2, 2),)),
    }


def rr_lhs(rr_id, k, order):
    """The k-row partition sum, assembled along gap chains.

    Writing lambda as (p_1 >= ... >= p_k >= 0), the summand factors through
    the consecutive gaps, so the sum is computed by one pass per row from the
    innermost row outward; this is algebraically identical to the direct
    enumeration (see rr_lhs_naive, used as a guard in the tests).
    """
    sp = _rr_spec_table(k)[rr_id]
    s, s2 = sp.gap_base, sp.neg_base

    def e_part(p):
        return sp.alpha * p * p + sp.beta * p

    def e_top(t):
        return e_part(t) + sp.top(t)

    p_top = 0
    while e_top(p_top + 1) < order:
        p_top += 1
    scan = max(p_top, 1) + order + 4
    min_top_from = [min((e_top(t) for t in range(p, scan + 1)), default=order)
                    for p in range(scan + 2)]
    p_inner = 0
    while p_inner + 1 <= p_top and e_part(p_inner + 1) + min_top_from[p_inner + 1] < order:
        p_inner += 1

    inv_gap = [_inv_poch(-1, s, s, g, order) for g in range(p_top + 1)]
    inv_neg = [_inv_poch(1, s2, s2, p, order) for p in range(p_inner + 1)]

    if k == 1:
        total = QLaurentSeries.zero(ZZ, order)
        for p in range(p_top + 1):
            if e_top(p) >= order:
                continue
            inner = inv_gap[p] * _inv_poch(1, s2, s2, p, order)
            total = total + (sp.num(p, order) * inner).shift(e_top(p))
        return total

    chain = [None] * (p_inner + 1)
    for p in range(p_inner + 1):
        chain[p] = (inv_gap[p] * inv_neg[p]).shift(e_part(p))
    for _ in range(k - 2):
        nxt = [None] * (p_inner + 1)
        for p in range(p_inner + 1):
            acc = QLaurentSeries.zero(ZZ, order)
            for p2 in range(p + 1):
                acc = acc + inv_gap[p - p2] * chain[p2]
            nxt[p] = acc.shift(e_part(p))
        chain = nxt
    total = QLaurentSeries.zero(ZZ, order)
    for p in range(p_top + 1):
        if e_top(p) >= order:
            continue
        acc = QLaurentSeries.zero(ZZ, order)
        for p2 in range(min(p, p_inner) + 1):
            acc = acc + inv_gap[p - p2] * chain[p2]
        total = total + (sp.num(p, order) * acc).shift(e_top(p))
    return total


def rr_lhs_naive(rr_id, k, order):
    """Direct enumeration of the same sum; independent path for tests."""
    sp = _rr_spec_table(k)[rr_id]
    s, s2 = sp.gap_base, sp.neg_base
    total = QLaurentSeries.zero(ZZ, order)
    w = 0
    while True:
        alive = False
        for lam in partitions(weight=w, max_length=k):
            t = lam.part(1)
            e = sum(sp.alpha * p * p + sp.beta * p for p in lam.parts) + sp.top(t)
            if e >= order:
                continue
            alive = True
            term = sp.num(t, order)
            for g in lam.padded_gaps(k):
                term = term * _inv_poch(-1, s, s, g, order)
            term = term * _inv_poch(1, s2, s2, lam.part(k), order)
            total = total + term.shift(e)
        # every summand exponent is >= weight - 4 across the twelve shapes
        if not alive and w > order + 6:
            break
        w += 1
    return total


def rr_rhs(rr_id, k, order):
    sp = _rr_spec_table(k)[rr_id]
    out = QLaurentSeries.one(ZZ, order)
    for sign, shift, step in sp.rhs_num:
        out = out * pochhammer_infinite(SeriesFactor(sign, 1, shift, step), order, ZZ)
    for sign, shift, step in sp.rhs_den:
        out = out * _inv_poch_inf(sign, shift, step, order)
    return out


def verify_rr(params, checker):
    rr_id = params["id"]
    spec = IdentitySpec(rr_id, "q-series", params,
                        "k-row partition sum vs modular infinite product")
    q_order = params["q_order"]
    for k in params.get("k_values") or [params["k"]]:
        lhs = rr_lhs(rr_id, k, q_order)
        rhs = rr_rhs(rr_id, k, q_order)
        ok, w, _ = checker.series(f"k={k}", lhs, rhs, lo=0, hi=q_order)
        if not ok:
            return VerificationReport(spec, "mismatch", f"k={k}", w)
    return VerificationReport(spec, "match", f"q^{q_order - 1}")


def _k1_lhs(which, order):
    total = QLaurentSeries.zero(ZZ, order)
    n = 0
    while True:
        e = {"rr3": n * n + 2 * n, "rr6": n * n, "rr7": n * n}[which]
        if e >= order:
            break
        if which == "rr6":
            term = _inv_poch(-1, 2, 2, n, order)
        else:
            term = _poch(1, 1, 2, n, order) * _inv_poch(-1, 4, 4, n, order)
        total = total + term.shift(e)
        n += 1
    return total


def _k1_rhs(which, order):
    out = QLaurentSeries.one(ZZ, order)
    if which == "rr6":
        for shift, step in ((2, 4), (2, 4), (4, 4)):
            out = out * pochhammer_infinite(SeriesFactor(-1, 1, shift, step), order, ZZ)
        return out * _inv_poch_inf(-1, 1, 1, order)
    trip = {"rr3": ((1, 6), (5, 6), (6, 6)), "rr7": ((3, 6), (3, 6), (6, 6))}[which]
    out = out * pochhammer_infinite(SeriesFactor(1, 1, 1, 2), order, ZZ)
    for shift, step in trip:
        out = out * pochhammer_infinite(SeriesFactor(-1, 1, shift, step), order, ZZ)
    return out * _inv_poch_inf(-1, 2, 2, order)


def verify_k1_reductions(params, checker):
    spec = IdentitySpec("k1-reductions", "q-series", params,
                        "the three single-sum reductions of the width-1 cases")
    q_order = params["q_order"]
    for which in ("rr3", "rr6", "rr7"):
        ok, w, _ = checker.series(
            which, _k1_lhs(which, q_order), _k1_rhs(which, q_order), lo=0, hi=q_order
        )
        if not ok:
            return VerificationReport(spec, "mismatch", which, w)
    return VerificationReport(spec, "match", f"q^{q_order - 1} for rr3, rr6, rr7")


# ---------------------------------------------------------------------------
# the k -> infinity bivariate form and the cross-identity coherence checks
# ---------------------------------------------------------------------------


def _limit_lhs(k, z_order, hi_b):
    out = BivariateSeries.zero(ZZ, z_order, hi_b)
    for w in range(z_order):
        acc = QLaurentSeries.zero(ZZ, hi_b)
        for lam in partitions(weight=w, max_length=k):
            inv = _inv_poch(1, 1, 1, lam.part(k), hi_b)
            for g in lam.padded_gaps(k):
                inv = inv * _inv_poch(-1, 1, 1, g, hi_b)
            acc = acc + inv.shift(2 * lam.n_stat())
        out.coeffs[w] = acc
    return out


def _limit_rhs(k, z_order, hi_b):
    total = BivariateSeries.zero(ZZ, z_order, hi_b)
    r = 0
    while k * r < z_order:
        e = r + (2 * k + 2) * (r * (r - 1) // 2)
        if e >= hi_b:
            break
        t = BivariateSeries.one(ZZ, z_order, hi_b)
        t = t.pochhammer_z(1, 2, 2 * r - 2, 2, hi_b, inverse=True)
        t = t.mul_binomial(-1, 1, 2 * r - 1)
        scalar = _inv_poch(-1, 2, 2, r, hi_b).shift(e)
        if r % 2:
            scalar = -scalar
        total = total + t.shift_z(k * r).scale_series(scalar)
        r += 1
    return total.pochhammer_z(1, 1, -1, 1, hi_b)


@lru_cache(maxsize=None)
def _limit_sides(k, z_order, hi_b):
    return _limit_lhs(k, z_order, hi_b), _limit_rhs(k, z_order, hi_b)


def verify_principal_limit(params, checker):
    spec = IdentitySpec("principal-limit", "zq-bivariate", params,
                        "width-k sum with unbounded alphabet vs its r-sum of products")
    z_order, q_order = params["z_order"], params["q_order"]
    hi_b = q_order + 2 * z_order + 4
    for k in params.get("k_values") or [params["k"]]:
        lhs, rhs = _limit_sides(k, z_order, hi_b)
        for m in range(z_order):
            ok, w, _ = checker.series(
                f"k={k} z^{m}", lhs.coeffs[m], rhs.coeffs[m], lo=-2 * z_order, hi=q_order
            )
            if not ok:
                return VerificationReport(spec, "mismatch", f"k={k} z^{m}", w)
    return VerificationReport(spec, "match", f"z^{z_order - 1}, q^{q_order - 1}")


def verify_coherence_limit(params, checker):
    """The n=8 principal identity agrees with the unbounded-alphabet limit
    through z^6 after the z -> z*q regrading; stabilization makes the
    difference O(q^17), so the window [0,17) is exact."""
    spec = IdentitySpec("coherence-limit", "zq-bivariate", params,
                        "finite-alphabet principal sides converge onto the limit sides")
    n = params.get("n", 8)
    z_hi = params.get("z_hi", 7)
    # difference of any z^m coefficient has q-valuation >= 2n+1 (binomial
    # stabilization) for m < z_hi <= n, so [0, 2n+1) is an exact comparison
    hi = 2 * n + 1
    for k in params.get("k_values") or [params["k"]]:
        cor_lhs = _principal_lhs(n, k, z_hi, hi + 1)
        cor_rhs = _principal_rhs(n, k, z_hi, hi + 1)
        lim_lhs, lim_rhs = _limit_sides(k, z_hi, hi + 2 * z_hi + 4)
        for m in range(z_hi):
            for tag, cor_c, lim_c in (
                ("lhs", cor_lhs.coeffs[m], lim_lhs.coeffs[m]),
                ("rhs", cor_rhs.coeffs[m], lim_rhs.coeffs[m]),
            ):
                ok, w, _ = checker.series(
                    f"k={k} {tag} z^{m}", cor_c, lim_c.shift(m), lo=0, hi=hi
                )
                if not ok:
                    return VerificationReport(spec, "mismatch", f"k={k} z^{m}", w)
    return VerificationReport(spec, "match", f"z^{z_hi - 1}, q^{hi - 1} at n={n}")


def verify_coherence_rr_master(params, checker):
    """krr1 and krr9 coincide with the a=b=0 specialization of the two
    reduced master identities, comparing both sides pathwise."""
    spec = IdentitySpec("coherence-rr-master", "q-series", params,
                        "a=b=0 master specializations reproduce krr1/krr9")
    q_order = params["q_order"]
    for which, rr_id in (("zq2", "krr1"), ("zq", "krr9")):
        for k in params.get("k_values") or [params["k"]]:
            m_lhs, m_rhs, _ring = build_master_specialized(which, k, q_order)
            for tag, mside, rrside in (
                ("lhs", m_lhs, rr_lhs(rr_id, k, q_order)),
                ("rhs", m_rhs, rr_rhs(rr_id, k, q_order)),
            ):
                ok, w, _ = checker.series(
                    f"{which}/{rr_id} k={k} {tag}",
                    _series_ab_constant(mside),
                    rrside,
                    hi=q_order,
                )
                if not ok:
                    return VerificationReport(spec, "mismatch", f"{which} k={k}", w)
    return VerificationReport(spec, "match", f"q^{q_order - 1}, both pairings")


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RegistryEntry:
    id: str
    strategy: str
    description: str
    runner: object
    quick: dict
    full: dict
    injectable: bool = True


def _entry(id, strategy, description, runner, quick, full, injectable=True):
    return RegistryEntry(id, strategy, description, runner, quick, full, injectable)


def _build_registry():
    entries = [
        _entry("kawanaka", "mpoly-degreewise",
               "full Hall-Littlewood sum with odd-multiplicity weights vs Phi",
               verify_kawanaka,
               {"n_values": [1, 2], "D": 5}, {"n_values": [1, 2, 3], "D": 8}),
        _entry("hl-sum", "mpoly-degreewise",
               "sum of all Hall-Littlewood polynomials vs product form (q and q^2)",
               verify_hl_summation,
               {"n_values": [1, 2], "D": 4}, {"n_values": [1, 2, 3], "D": 6}),
        _entry("kawanaka2", "mpoly-degreewise",
               "even-multiplicity-constrained Hall-Littlewood sum vs pair product",
               verify_kawanaka2,
               {"n_values": [1], "D": 4}, {"n_values": [1, 2], "D": 6}),
        _entry("macdonald-y", "mpoly-degreewise",
               "y-deformed Hall-Littlewood sum; reports the validating n() convention",
               verify_macdonald_y,
               {"n_values": [1], "D": 3, "y_degree": 3},
               {"n_values": [1, 2], "D": 4, "y_degree": 4},
               injectable=False),
        _entry("kawanaka-finite", "rational-point",
               "bounded-first-row Hall-Littlewood sum vs sign-twisted Phi sum",
               verify_kawanaka_finite,
               {"n_values": [1, 2], "k_values": [1, 2], "points": 4, "seed": 0},
               {"n_values": [1, 2, 3], "k_values": [1, 2, 3, 4], "points": 20, "seed": 0}),
        _entry("hl-oracle", "rational-point",
               "branching Hall-Littlewood vs definitional permutation sum",
               verify_hl_oracle,
               {"max_weight": 4, "n_max": 3, "points": 3, "seed": 0},
               {"max_weight": 6, "n_max": 4, "points": 10, "seed": 0}),
        _entry("principal", "zq-bivariate",
               "principal specialization of the finite sum vs its closed r-sum",
               verify_principal,
               {"n_values": [1, 2, 3], "k_values": [1, 2], "z_order": 6, "q_order": 16},
               {"n_values": [1, 2, 3, 4, 5], "k_values": [1, 2, 3, 4],
                "z_order": 8, "q_order": 30}),
        _entry("klimit", "zq-bivariate",
               "unbounded-width principal sum vs (-z)_2n/(z^2;q^2)_n",
               verify_klimit,
               {"n_values": [0, 1, 2], "z_order": 6, "q_order": 16},
               {"n_values": [0, 1, 2, 3], "z_order": 8, "q_order": 30}),
        _entry("binomial-product", "zq-bivariate",
               "partition-binomial generating sum vs (-z)_n/(z^2)_n",
               verify_binomial_product,
               {"n_values": [0, 1, 2], "z_order": 6, "q_order": 14},
               {"n_values": [0, 1, 2, 3, 4], "z_order": 8, "q_order": 25}),
        _entry("stembridge-ab", "zq-bivariate",
               "two-parameter partition sum vs (az,bz)/(z,abz) product",
               verify_stembridge,
               {"z_order": 4, "window": (-8, 15)}, {"z_order": 6, "window": (-10, 25)}),
        _entry("master-ab", "zq-bivariate",
               "two-parameter width-k sum vs its r-sum of infinite products",
               verify_master_ab,
               {"k_values": [1, 2], "z_order": 4, "window": (-12, 18)},
               {"k_values": [1, 2, 3], "z_order": 6, "window": (-20, 30)}),
        _entry("master-zq2", "q-series",
               "reduced master identity at z=q^2, formal a,b",
               verify_master_special,
               {"which": "zq2", "k_values": [1, 2], "q_order": 20},
               {"which": "zq2", "k_values": [1, 2, 3], "q_order": 40}),
        _entry("master-zq", "q-series",
               "reduced master identity at z=q, formal a,b",
               verify_master_special,
               {"which": "zq", "k_values": [1, 2], "q_order": 20},
               {"which": "zq", "k_values": [1, 2, 3], "q_order": 40}),
        _entry("principal-limit", "zq-bivariate",
               "width-k sum with unbounded alphabet vs its r-sum of products",
               verify_principal_limit,
               {"k_values": [1, 2], "z_order": 6, "q_order": 16},
               {"k_values": [1, 2, 3], "z_order": 8, "q_order": 30}),
        _entry("qpieri", "polynomial",
               "row-adding binomial expansion over horizontal strips",
               verify_qpieri,
               {"n_max": 3, "m_max": 3, "weight_max": 6},
               {"n_max": 4, "m_max": 4, "weight_max": 8}),
        _entry("csq-euler", "polynomial",
               "odd-power binomial column sum vs distinct-parts product",
               verify_csq_euler,
               {"n_max": 8}, {"n_max": 20}),
        _entry("k1-reductions", "q-series",
               "the three single-sum reductions of the width-1 cases",
               verify_k1_reductions,
               {"q_order": 20}, {"q_order": 50}),
        _entry("coherence-limit", "zq-bivariate",
               "finite-alphabet principal sides converge onto the limit sides",
               verify_coherence_limit,
               {"n": 8, "z_hi": 7, "k_values": [1, 2]},
               {"n": 8, "z_hi": 7, "k_values": [1, 2, 3]}),
        _entry("coherence-rr-master", "q-series",
               "a=b=0 master specializations reproduce krr1/krr9",
               verify_coherence_rr_master,
               {"k_values": [1], "q_order": 18},
               {"k_values": [1, 2, 3], "q_order": 40}),
    ]
    for i in range(1, 13):
        rid = f"krr{i}"
        entries.append(
            _entry(rid, "q-series",
                   "k-row partition sum vs modular infinite product",
                   verify_rr,
                   {"id": rid, "k_values": [1, 2], "q_order": 25},
                   {"id": rid, "k_values": [1, 2, 3, 4], "q_order": 60})
        )
    return {e.id: e for e in sorted(entries, key=lambda e: e.id)}


REGISTRY = _build_registry()


def run_identity_checked(identity_id, profile="quick", overrides=None, injection=None):
    """Run one identity; returns (report, checker) so callers can inspect the
    comparison count and any applied corruption."""
    if identity_id not in REGISTRY:
        raise KeyError(identity_id)
    entry = REGISTRY[identity_id]
    params = dict(entry.quick if profile == "quick" else entry.full)
    for key, val in (overrides or {}).items():
        if val is None:
            continue
        if key == "n":
            params.pop("n_values", None)
        if key == "k":
            params.pop("k_values", None)
        params[key] = val
    checker = Checker(injection)
    try:
        report = entry.runner(params, checker)
    except Exception as exc:  # a single identity must never take down a sweep
        report = VerificationReport(
            IdentitySpec(identity_id, entry.strategy, params),
            "error",
            detail=f"{type(exc).__name__}: {exc}",
        )
    report.spec.params["profile"] = profile
    return report, checker


def run_identity(identity_id, profile="quick", overrides=None, injection=None):
    return run_identity_checked(identity_id, profile, overrides, injection)[0]


def verify_all(profile="quick", seed=0):
    """Run the whole registry; deterministic for a given seed."""
    reports = []
    for identity_id in sorted(REGISTRY):
        reports.append(run_identity(identity_id, profile, {"seed": seed}))
    return reports


# ---------------------------------------------------------------------------
# named series expressions for the dump command
# ---------------------------------------------------------------------------


def dump_series(expr_id, q_order):
    if expr_id == "partition-gf":
        return _inv_poch_inf(-1, 1, 1, q_order)
    if expr_id == "pentagonal":
        return pochhammer_infinite(SeriesFactor(-1, 1, 1, 1), q_order, ZZ)
    name, _, side = expr_id.rpartition("-")
    if side in ("lhs", "rhs"):
        if name in ("rr3", "rr6", "rr7"):
            return _k1_lhs(name, q_order) if side == "lhs" else _k1_rhs(name, q_order)
        if name.startswith("krr") and name in {f"krr{i}" for i in range(1, 13)}:
            k = 1
            return (rr_lhs if side == "lhs" else rr_rhs)(name, k, q_order)
        if "@" in name:
            base, _, kval = name.partition("@")
            if base in {f"krr{i}" for i in range(1, 13)}:
                return (rr_lhs if side == "lhs" else rr_rhs)(base, int(kval), q_order)
    raise KeyError(expr_id)


def dump_expressions():
    out = ["partition-gf", "pentagonal"]
    for name in ("rr3", "rr6", "rr7"):
        out += [f"{name}-lhs", f"{name}-rhs"]
    for i in range(1, 13):
        out += [f"krr{i}-lhs", f"krr{i}-rhs", f"krr{i}@k-lhs (k an integer)"]
    return out
