"""Integer partitions, their statistics, strip predicates and enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field


class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        self.parts = parts

    @staticmethod
    def parse(text):
        """Parse the textual form "(3,1,1)" or "()" (bare "3,1,1" also accepted)."""
        t = text.strip()
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1]
        t = t.strip()
        if not t:
            return Partition()
        try:
            parts = tuple(int(x) for x in t.split(","))
        except ValueError:
            raise ValueError(f"cannot parse partition {text!r}") from None
        return Partition(parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"

    __repr__ = __str__

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def weight(self):
        return sum(self.parts)

    def length(self):
        return len(self.parts)

    def part(self, i):
        """1-based part access; zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def conjugate(self):
        if not self.parts:
            return Partition()
        cols = []
        for j in range(1, self.parts[0] + 1):
            cols.append(sum(1 for p in self.parts if p >= j))
        return Partition(cols)

    def multiplicities(self):
        m = {}
        for p in self.parts:
            m[p] = m.get(p, 0) + 1
        return m

    def multiplicity(self, i):
        return sum(1 for p in self.parts if p == i)

    def gaps(self):
        """Differences lambda_i - lambda_{i+1}, with lambda_{l+1} = 0."""
        ps = self.parts
        return tuple(
            ps[i] - (ps[i + 1] if i + 1 < len(ps) else 0) for i in range(len(ps))
        )

    def padded_gaps(self, k):
        """Gaps of the partition padded with zeros to exactly k entries.

        Requires length <= k; entry i is lambda_i - lambda_{i+1} with the
        convention lambda_j = 0 for j > length.
        """
        if len(self.parts) > k:
            raise ValueError("partition longer than padding width")
        return tuple(self.part(i) - self.part(i + 1) for i in range(1, k + 1))

    def n_stat(self):
        """sum_i C(lambda_i, 2)."""
        return sum(p * (p - 1) // 2 for p in self.parts)

    def n2_stat(self):
        """sum_i lambda_i^2."""
        return sum(p * p for p in self.parts)

    def o_stat(self):
        """Number of odd parts (sum of multiplicities of odd part values)."""
        return sum(1 for p in self.parts if p % 2 == 1)

    def contains(self, other):
        """mu subseteq lambda as diagrams."""
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def cells(self):
        """All diagram cells (i, j), 1-based."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)


@dataclass
class PartitionStats:
    weight: int
    length: int
    multiplicities: dict = field(default_factory=dict)
    n_lambda: int = 0
    n2_lambda: int = 0
    o_lambda: int = 0
    gaps: tuple = ()


def conjugate(lam):
    return lam.conjugate()


def stats(lam):
    return PartitionStats(
        weight=lam.weight(),
        length=lam.length(),
        multiplicities=lam.multiplicities(),
        n_lambda=lam.n_stat(),
        n2_lambda=lam.n2_stat(),
        o_lambda=lam.o_stat(),
        gaps=lam.gaps(),
    )


def arm_leg(lam, cell):
    """(arm, leg) of a 1-based cell (i, j) inside the diagram."""
    i, j = cell
    if not (1 <= i <= len(lam.parts)) or not (1 <= j <= lam.parts[i - 1]):
        raise ValueError(f"cell {cell} outside diagram of {lam}")
    arm = lam.parts[i - 1] - j
    leg = sum(1 for p in lam.parts if p >= j) - i
    return arm, leg


def is_vertical_strip(lam, mu, m):
    """lambda/mu is a vertical m-strip: mu inside lambda, size m, <=1 cell per row."""
    if not lam.contains(mu):
        return False
    if lam.weight() - mu.weight() != m:
        return False
    return all(lam.part(i) - mu.part(i) <= 1 for i in range(1, len(lam) + 1))


def is_horizontal_strip(lam, mu, m):
    """lambda/mu is a horizontal m-strip: mu inside lambda, size m, <=1 cell per column."""
    if not lam.contains(mu):
        return False
    if lam.weight() - mu.weight() != m:
        return False
    return all(mu.part(i) >= lam.part(i + 1) for i in range(1, len(lam) + 1))


def _gen_fixed_weight(remaining, max_part, max_length, prefix):
    if remaining == 0:
        yield Partition(prefix)
        return
    if max_length == 0:
        return
    for p in range(min(max_part, remaining), 0, -1):
        yield from _gen_fixed_weight(remaining - p, p, max_length - 1, prefix + [p])


def partitions(weight=None, max_weight=None, max_part=None, max_length=None):
    """Enumerate partitions under the given constraints, each exactly once.

    Canonical order: by weight ascending, then parts in descending
    lexicographic order.  At least one of weight / max_weight, or both
    max_part and max_length, must be given.
    """
    if weight is None and max_weight is None:
        if max_part is None or max_length is None:
            raise ValueError("unbounded partition enumeration")
        max_weight = max_part * max_length
    weights = [weight] if weight is not None else range(max_weight + 1)
    mp = max_part
    ml = max_length
    for w in weights:
        yield from _gen_fixed_weight(
            w, mp if mp is not None else w, ml if ml is not None else w, []
        )


def horizontal_strip_extensions(mu, m, max_first_part=None):
    """All lambda containing mu with lambda/mu a horizontal m-strip.

    Interlacing form lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ... bounds the
    search; the first part may additionally be capped.
    """
    out = []
    lmu = len(mu)

    def rec(i, remaining, prev, acc):
        if remaining == 0 and mu.part(i) == 0:
            # every further part is forced to zero
            out.append(Partition(acc))
            return
        if i > lmu + 1:
            return
        lo = max(mu.part(i), 1)
        hi = min(prev, mu.part(i) + remaining)
        if i > 1:
            hi = min(hi, mu.part(i - 1))
        for li in range(hi, lo - 1, -1):
            rec(i + 1, remaining - (li - mu.part(i)), li, acc + [li])

    cap = mu.part(1) + m if max_first_part is None else max_first_part
    rec(1, m, cap, [])
    return out


def partition_count_table(n):
    """p(0..n) by the pentagonal-number recurrence (independent of any series code)."""
    p = [0] * (n + 1)
    p[0] = 1
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 == 1 else -1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p
