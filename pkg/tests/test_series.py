#! /usr/bin/env python3

# Copyright 2026 The rootgw contributors
#
# This file is part of rootgw, distributed under the terms of the GNU
# General Public License version 3.

from fractions import Fraction

import pytest

from rootgw.series import Series, TruncationOrder
from rootgw.util import UsageError

T = TruncationOrder(2, 3)


def test_truncation_order():
    with pytest.raises(UsageError):
        TruncationOrder(-1, 0)
    assert T.admits((2, 1, 1, 1))
    assert not T.admits((3, 0, 0, 0))
    assert not T.admits((0, 2, 2, 0))


def test_sparse():
    s = Series(T, {(0, 0, 0, 0): 0, (1, 0, 0, 0): 2, (0, 4, 0, 0): 1})
    assert s.items() == [((1, 0, 0, 0), 2)]
    assert not Series(T)
    assert s - s == Series(T)
    assert not (s - s).coefficients


def test_arithmetic():
    y2, y3 = Series.variable(T, 2), Series.variable(T, 3)
    assert y2.items() == [((0, 1, 0, 0), 1)]
    assert Series.variable(T, 4).items() == [((0, 0, 0, 1), 1)]

    s = (1 + y2)*(1 - y2)
    assert s == 1 - y2*y2
    assert (y2 + y3)*(y2 + y3) == y2*y2 + 2*y2*y3 + y3*y3
    assert Fraction(1, 2)*y3 == y3*Fraction(1, 2)
    assert (y3*y3*y3*y3).coefficients == {}
    assert (2 - y3).coefficient((0, 0, 0, 0)) == 2
    assert -y3 == Series.monomial(T, (0, 0, 1, 0), -1)


def test_q_truncation():
    q = Series.monomial(T, (1, 0, 0, 0))
    assert q*q == Series.monomial(T, (2, 0, 0, 0))
    assert not q*q*q


def test_ring_laws():
    a = Series(T, {(0, 0, 0, 0): 1, (1, 1, 0, 0): Fraction(1, 3),
                   (0, 0, 2, 1): -2})
    b = Series(T, {(1, 0, 0, 0): 5, (0, 0, 1, 0): Fraction(-1, 2)})
    c = Series(T, {(0, 1, 0, 0): 7, (2, 0, 0, 3): 1})
    assert a + b == b + a
    assert a*b == b*a
    assert (a*b)*c == a*(b*c)
    assert a*(b + c) == a*b + a*c

    small = TruncationOrder(1, 2)
    assert (a*b).truncate(small) == a.truncate(small)*b.truncate(small)


def test_mismatched_truncation():
    with pytest.raises(UsageError):
        Series.constant(T, 1) + Series.constant(TruncationOrder(1, 1), 1)
    with pytest.raises(UsageError):
        Series.constant(T, 1)*Series.constant(TruncationOrder(1, 1), 1)


def test_divided_power_coefficient():
    s = Series.monomial(T, (1, 0, 3, 0), Fraction(1, 6))
    assert s.divided_power_coefficient((1, 0, 3, 0)) == 1
    assert s.divided_power_coefficient((1, 0, 2, 0)) == 0
