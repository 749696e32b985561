"""Gaussian binomials, partition binomials, triple products."""

import pytest

from qhall.partitions import Partition, partitions
from qhall.qbinom import (
    csq_euler_check,
    jacobi_triple_lhs,
    jacobi_triple_sum,
    pochhammer_partition_sym,
    qbinom,
    qbinom_partition,
)
from qhall.rings import ZZ
from qhall.series import QLaurentSeries, SeriesFactor, invert, pochhammer_finite


def S(d):
    return QLaurentSeries.from_dict(d, ZZ)


def _poch_poly(n, order=None):
    return pochhammer_finite(SeriesFactor(-1, 1, 1, 1), n, ZZ, order)


def test_qbinom_examples():
    assert qbinom(2, 1) == S({0: 1, 1: 1})
    assert qbinom(7, 0) == QLaurentSeries.one(ZZ)
    assert qbinom(3, -1).is_zero()
    assert qbinom(3, 4).is_zero()
    # oracle: exact quotient (q)_4 / ((q)_2 (q)_2) computed by series division
    order = 24
    quotient = _poch_poly(4, order) * invert(_poch_poly(2, order)) * invert(_poch_poly(2, order))
    want = S({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
    ok = all(quotient.coefficient(e) == want.coefficient(e) for e in range(10))
    assert ok
    assert qbinom(4, 2) == want


def test_qbinom_symmetry_and_step():
    for n in range(21):
        for m in range(n + 1):
            assert qbinom(n, m) == qbinom(n, n - m)
    assert qbinom(2, 1, step=2) == S({0: 1, 2: 1})


def test_qbinom_partition_examples():
    assert qbinom_partition(3, Partition((2,))) == qbinom(3, 2)
    assert qbinom_partition(2, Partition((3, 1))).is_zero()
    # oracle: (q)_2 / ((q)_0 (q)_1 (q)_1) by exact series division
    order = 16
    quotient = _poch_poly(2, order) * invert(_poch_poly(1, order)) * invert(_poch_poly(1, order))
    got = qbinom_partition(2, Partition((2, 1)))
    assert got == S({0: 1, 1: 1})
    assert all(quotient.coefficient(e) == got.coefficient(e) for e in range(8))


def test_qbinom_partition_nonnegative():
    for lam in partitions(max_weight=12):
        for n in range(lam.part(1), 9):
            p = qbinom_partition(n, lam)
            assert all(c > 0 for c in p.coeffs.values()), (n, lam)


def test_pochhammer_partition_sym():
    one = QLaurentSeries.one(ZZ)
    assert pochhammer_partition_sym(1, Partition(())) == one
    got = pochhammer_partition_sym(1, Partition((2, 2)), sign=1)
    assert got == S({0: 1, 1: 1, 2: 1, 3: 1})  # (1+q)(1+q^2)
    got = pochhammer_partition_sym(1, Partition((3, 1)), sign=-1)
    assert got == _poch_poly(2) * _poch_poly(1)


def test_jacobi_triple_product():
    for d in range(2, 9):
        for j in range(1, d):
            lhs = jacobi_triple_lhs(j, d, 40)
            assert jacobi_triple_sum("first", j, d, 40) == lhs
            assert jacobi_triple_sum("second", j, d, 40) == lhs
    with pytest.raises(ValueError):
        jacobi_triple_lhs(0, 3, 10)
    with pytest.raises(ValueError):
        jacobi_triple_sum("first", 3, 3, 10)
    with pytest.raises(ValueError):
        jacobi_triple_sum("third", 1, 3, 10)
    assert jacobi_triple_sum("first", 1, 3, 0).is_zero()
    assert jacobi_triple_sum("second", 1, 4, 9).coefficient(0) == 1


def test_csq_euler():
    for n in range(21):
        assert csq_euler_check(n)


def test_theta_product_type():
    from qhall.qbinom import ThetaProduct, triple_shifts

    from qhall.series import pochhammer_infinite

    tp = triple_shifts(1, 5, 6, 6).over(-1, 1, 1)
    want = jacobi_triple_lhs(1, 6, 30) * invert(
        pochhammer_infinite(SeriesFactor(-1, 1, 1, 1), 30, ZZ)
    )
    assert tp.series(30) == want
    with pytest.raises(ValueError):
        ThetaProduct().times(-1, 0, 4)
    with pytest.raises(ValueError):
        ThetaProduct().over(-1, 0, 4)


def test_pochhammer_partition_general_factor():
    from qhall.qbinom import pochhammer_partition

    f = SeriesFactor(1, 1, 2, 2)  # (-q^2; q^2) shape
    got = pochhammer_partition(f, Partition((3, 1)))
    want = pochhammer_finite(f, 2, ZZ) * pochhammer_finite(f, 1, ZZ)
    assert got == want
