"""Partition type, statistics, strips, enumeration."""

import random

import pytest

from qhall.partitions import (
    Partition,
    arm_leg,
    conjugate,
    horizontal_strip_extensions,
    is_horizontal_strip,
    is_vertical_strip,
    partition_count_table,
    partitions,
    stats,
)
from qhall.rings import ZZ
from qhall.series import QLaurentSeries, SeriesFactor, invert, pochhammer_infinite


def P(*parts):
    return Partition(parts)


def test_construction_and_parse():
    assert Partition.parse("(3,1,1)") == P(3, 1, 1)
    assert Partition.parse("()") == P()
    assert str(P(3, 1, 1)) == "(3,1,1)"
    assert str(P()) == "()"
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition.parse("(2,x)")


def test_conjugate_examples():
    assert conjugate(P(3, 1)) == P(2, 1, 1)
    assert conjugate(P()) == P()
    assert conjugate(P(2, 2)) == P(2, 2)


def test_conjugate_involution_random():
    rng = random.Random(3)
    for _ in range(10_000):
        parts = sorted((rng.randrange(1, 12) for _ in range(rng.randrange(0, 8))), reverse=True)
        lam = Partition(parts)
        assert conjugate(conjugate(lam)) == lam


def test_stats_examples():
    s = stats(P(2, 2))
    assert (s.weight, s.length, s.n_lambda, s.n2_lambda) == (4, 2, 2, 8)
    assert s.multiplicities == {2: 2}
    assert stats(P(3, 1, 1)).o_lambda == 3
    z = stats(P())
    assert (z.weight, z.length, z.n_lambda, z.n2_lambda, z.o_lambda) == (0, 0, 0, 0, 0)
    assert z.gaps == ()
    assert stats(P(5, 3)).gaps == (2, 3)


def test_n_stat_matches_conjugate_convention():
    # sum_i C(lambda_i, 2) agrees with sum_i (i-1)*conjugate_i
    for lam in partitions(max_weight=12):
        via_conj = sum((i - 1) * p for i, p in enumerate(lam.conjugate().parts, start=1))
        assert lam.n_stat() == via_conj, lam


def test_arm_leg():
    assert arm_leg(P(3, 2), (1, 1)) == (2, 1)
    assert arm_leg(P(1), (1, 1)) == (0, 0)
    assert arm_leg(P(3, 2), (2, 2)) == (0, 0)
    with pytest.raises(ValueError):
        arm_leg(P(3, 2), (2, 3))


def test_strip_predicates():
    assert is_vertical_strip(P(2, 1), P(1, 1), 1)
    assert not is_vertical_strip(P(3, 1), P(1, 1), 2)
    assert is_vertical_strip(P(2, 2), P(2, 2), 0)
    assert is_horizontal_strip(P(3, 1), P(2, 1), 1)
    assert not is_horizontal_strip(P(2, 2), P(1, 1), 2)
    assert is_horizontal_strip(P(2, 2), P(2, 2), 0)


def test_strip_conjugate_duality():
    for lam in partitions(max_weight=10):
        subs = [mu for mu in partitions(max_weight=lam.weight()) if lam.contains(mu)]
        lc = lam.conjugate()
        for mu in subs:
            m = lam.weight() - mu.weight()
            assert is_vertical_strip(lam, mu, m) == is_horizontal_strip(lc, mu.conjugate(), m)


def test_enumerate_examples():
    assert list(partitions(weight=4, max_length=2)) == [P(4), P(3, 1), P(2, 2)]
    assert list(partitions(max_part=2, max_length=2)) == [
        P(), P(1), P(2), P(1, 1), P(2, 1), P(2, 2),
    ]
    with pytest.raises(ValueError):
        list(partitions(max_part=3))


def test_enumerate_counts_match_generating_series():
    table = partition_count_table(12)
    gf = invert(pochhammer_infinite(SeriesFactor(-1, 1, 1, 1), 13, ZZ))
    for n in range(13):
        count = sum(1 for _ in partitions(weight=n))
        assert count == table[n]
        assert gf.coefficient(n) == count


def test_p50():
    assert partition_count_table(50)[50] == 204226
    assert sum(1 for _ in partitions(weight=50)) == 204226


def test_horizontal_strip_extensions():
    got = {lam for lam in horizontal_strip_extensions(P(2, 1), 2)}
    want = {
        lam
        for lam in partitions(max_weight=5)
        if lam.weight() == 5 and is_horizontal_strip(lam, P(2, 1), 2)
    }
    assert got == want
    assert horizontal_strip_extensions(P(), 0) == [P()]
    assert {lam.part(1) for lam in horizontal_strip_extensions(P(3), 2, max_first_part=4)} == {3, 4}


def test_cells_and_padded_gaps():
    assert list(P(2, 1).cells()) == [(1, 1), (1, 2), (2, 1)]
    assert P(2, 1).padded_gaps(3) == (1, 1, 0)
    assert P().padded_gaps(2) == (0, 0)
    with pytest.raises(ValueError):
        P(1, 1, 1).padded_gaps(2)
