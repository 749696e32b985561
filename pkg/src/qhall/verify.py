"""Verification reports, exact comparators and the fault-injection hook."""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import _min_order


@dataclass
class IdentitySpec:
    id: str
    strategy: str
    params: dict = field(default_factory=dict)
    description: str = ""

    def to_dict(self):
        return {
            "id": self.id,
            "strategy": self.strategy,
            "params": {k: _jsonable(v) for k, v in sorted(self.params.items())},
            "description": self.description,
        }


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


@dataclass
class Witness:
    location: str
    lhs: str
    rhs: str

    def to_dict(self):
        return {"location": self.location, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class VerificationReport:
    spec: IdentitySpec
    status: str  # match | mismatch | error
    verified_through: str = ""
    witness: Witness | None = None
    detail: str = ""

    def to_dict(self):
        d = {
            "id": self.spec.id,
            "strategy": self.spec.strategy,
            "params": self.spec.to_dict()["params"],
            "status": self.status,
            "verified_through": self.verified_through,
        }
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        if self.detail:
            d["detail"] = self.detail
        return d

    def human_line(self):
        head = f"{self.spec.id:<22} {self.status:<9} {self.verified_through}"
        if self.witness is not None:
            head += f"  [at {self.witness.location}: lhs={self.witness.lhs} rhs={self.witness.rhs}]"
        if self.detail:
            head += f"  ({self.detail})"
        return head


class WindowShortfallError(ValueError):
    """A comparison was asked to cover more than the reliable windows allow."""


@dataclass(frozen=True)
class Injection:
    """Corrupt one compared value: the `index`-th comparison a checker sees,
    on the given side, at the rank-th populated slot."""

    index: int
    side: str  # "lhs" | "rhs"
    rank: int = 0


class Checker:
    """Counts comparisons, applies at most one injected corruption, and
    reports the first mismatch as a witness."""

    def __init__(self, injection=None):
        self.injection = injection
        self.count = 0
        self.applied = None  # (label, location) of the injected corruption

    def _take(self):
        self.count += 1
        return self.injection is not None and self.count - 1 == self.injection.index

    # -- series ---------------------------------------------------------------

    def series(self, label, lhs, rhs, lo=None, hi=None):
        """(ok, witness, hi_effective) on the common window intersected with [lo, hi)."""
        if self._take():
            lhs, rhs = self._corrupt_series(label, lhs, rhs, lo, hi)
        hi_eff = _min_order(lhs.order, rhs.order, hi)
        if hi is not None and (hi_eff is None or hi_eff < hi):
            raise WindowShortfallError(
                f"{label}: need order {hi}, have {lhs.order} and {rhs.order}"
            )
        for e in sorted(set(lhs.coeffs) | set(rhs.coeffs)):
            if lo is not None and e < lo:
                continue
            if hi_eff is not None and e >= hi_eff:
                continue
            a, b = lhs.coefficient(e), rhs.coefficient(e)
            if a != b:
                w = Witness(
                    location=f"{label} q^{e}",
                    lhs=lhs.ring.coeff_str(a),
                    rhs=rhs.ring.coeff_str(b),
                )
                return False, w, hi_eff
        return True, None, hi_eff

    def _corrupt_series(self, label, lhs, rhs, lo, hi):
        from .series import QLaurentSeries

        hi_eff = _min_order(lhs.order, rhs.order, hi)
        slots = [
            e
            for e in sorted(set(lhs.coeffs) | set(rhs.coeffs))
            if (lo is None or e >= lo) and (hi_eff is None or e < hi_eff)
        ]
        if not slots:
            slots = [lo if lo is not None else 0]
        e = slots[self.injection.rank % len(slots)]
        side = lhs if self.injection.side == "lhs" else rhs
        bumped = side + QLaurentSeries.monomial(side.ring.one, e, side.ring, side.order)
        self.applied = (label, f"{label} q^{e}")
        if self.injection.side == "lhs":
            return bumped, rhs
        return lhs, bumped

    # -- exact rational values --------------------------------------------------

    def value(self, label, lhs, rhs):
        if self._take():
            if self.injection.side == "lhs":
                lhs = lhs + 1
            else:
                rhs = rhs + 1
            self.applied = (label, label)
        if lhs != rhs:
            return False, Witness(location=label, lhs=str(lhs), rhs=str(rhs))
        return True, None

    # -- multivariate polynomials -------------------------------------------------

    def mpoly(self, label, lhs, rhs):
        if self._take():
            lhs, rhs = self._corrupt_mpoly(label, lhs, rhs)
        keys = set(lhs.terms) | set(rhs.terms)
        for k in sorted(keys):
            p1 = lhs.terms.get(k, {})
            p2 = rhs.terms.get(k, {})
            if p1 == p2:
                continue
            for e in sorted(set(p1) | set(p2)):
                if p1.get(e, 0) != p2.get(e, 0):
                    w = Witness(
                        location=f"{label} x^({','.join(map(str, k))}) q^{e}",
                        lhs=str(p1.get(e, 0)),
                        rhs=str(p2.get(e, 0)),
                    )
                    return False, w
        return True, None

    def _corrupt_mpoly(self, label, lhs, rhs):
        from .mpoly import MPoly

        slots = []
        for k in sorted(set(lhs.terms) | set(rhs.terms)):
            for e in sorted(set(lhs.terms.get(k, {})) | set(rhs.terms.get(k, {}))):
                slots.append((k, e))
        if not slots:
            slots = [((0,) * lhs.n, 0)]
        k, e = slots[self.injection.rank % len(slots)]
        side = lhs if self.injection.side == "lhs" else rhs
        bump = MPoly(side.n, {k: {e: 1}})
        bumped = side + bump
        self.applied = (label, f"{label} x^({','.join(map(str, k))}) q^{e}")
        if self.injection.side == "lhs":
            return bumped, rhs
        return lhs, bumped
