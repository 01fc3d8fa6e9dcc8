#! /usr/bin/env python3

# Copyright 2026 The rootgw contributors

# This file is part of rootgw.
#
#  rootgw is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License verson 3 as
#  published by the Free Software Foundation.
#
#  rootgw is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with rootgw.  If not, see <http://www.gnu.org/licenses/>.

"""series.py - truncated power series in Q, y2, y3, y4 with exact
coefficients

Exponents are tuples (dQ, m2, m3, m4).  Terms with dQ > q_max or with
m2 + m3 + m4 > y_max are dropped.  All exponents are non-negative, so the
dropped terms form an ideal and truncated arithmetic is exact below the
truncation.

Coefficients are stored against monomials.  divided_power_coefficient()
gives the coefficient against Q^d y2^m2/m2! y3^m3/m3! y4^m4/m4!, which is
the normalization of the quantum potential.
"""

import math

from dataclasses import dataclass
from fractions import Fraction

from rootgw.util import UsageError


@dataclass(frozen=True)
class TruncationOrder:
    """Maximum degree in Q and maximum total degree in y2, y3, y4."""
    q_max: int
    y_max: int

    def __post_init__(self):
        if self.q_max < 0 or self.y_max < 0:
            raise UsageError('Truncation orders must be non-negative')

    def admits(self, exponents):
        """True if the monomial survives truncation."""
        return exponents[0] <= self.q_max and \
          exponents[1] + exponents[2] + exponents[3] <= self.y_max


class Series:
    """A sparse truncated series.  No stored coefficient is zero."""

    __slots__ = ('trunc', 'coefficients')

    def __init__(self, trunc, coefficients=None):
        self.trunc = trunc
        self.coefficients = {}
        for exponents, c in (coefficients or {}).items():
            if c and trunc.admits(exponents):
                self.coefficients[tuple(exponents)] = Fraction(c)

    @classmethod
    def constant(cls, trunc, c):
        """Returns the constant series c."""
        return cls(trunc, {(0, 0, 0, 0): c})

    @classmethod
    def monomial(cls, trunc, exponents, c=1):
        """Returns c times the monomial."""
        return cls(trunc, {tuple(exponents): c})

    @classmethod
    def variable(cls, trunc, index):
        """Returns y_index for index 2, 3 or 4."""
        exponents = [0, 0, 0, 0]
        exponents[index - 1] = 1
        return cls.monomial(trunc, exponents)

    def _check(self, other):
        """Raises UsageError for mismatched truncation orders."""
        if self.trunc != other.trunc:
            raise UsageError('Mismatched truncation orders: %s and %s' %
                             (self.trunc, other.trunc))

    def __bool__(self):
        return bool(self.coefficients)

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.trunc == other.trunc and \
              self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash((self.trunc, frozenset(self.coefficients.items())))

    def __repr__(self):
        terms = ['%s*%s' % (c, e) for e, c in sorted(self.coefficients.items())]
        return 'Series(%s)' % (' + '.join(terms) or '0')

    def __neg__(self):
        return Series(self.trunc, {e: -c for e, c in self.coefficients.items()})

    def __add__(self, other):
        if not isinstance(other, Series):
            other = Series.constant(self.trunc, other)
        self._check(other)
        out = dict(self.coefficients)
        for e, c in other.coefficients.items():
            out[e] = out.get(e, 0) + c
        return Series(self.trunc, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):  # Scalar
            other = Fraction(other)
            return Series(self.trunc,
                          {e: c*other for e, c in self.coefficients.items()})
        self._check(other)
        q_max, y_max = self.trunc.q_max, self.trunc.y_max
        out = {}
        for (a0, a2, a3, a4), c in self.coefficients.items():
            room = y_max - a2 - a3 - a4
            for (b0, b2, b3, b4), k in other.coefficients.items():
                if a0 + b0 > q_max or b2 + b3 + b4 > room:
                    continue
                e = (a0 + b0, a2 + b2, a3 + b3, a4 + b4)
                out[e] = out.get(e, 0) + c*k
        return Series(self.trunc, out)

    __rmul__ = __mul__

    def items(self):
        """Returns the (exponents, coefficient) pairs in sorted order."""
        return sorted(self.coefficients.items())

    def coefficient(self, exponents):
        """Returns the monomial coefficient."""
        return self.coefficients.get(tuple(exponents), Fraction(0))

    def divided_power_coefficient(self, exponents):
        """Returns the coefficient against Q^d y^m / m!."""
        _, m2, m3, m4 = exponents
        scale = math.factorial(m2)*math.factorial(m3)*math.factorial(m4)
        return self.coefficient(exponents)*scale

    def truncate(self, trunc):
        """Returns the series truncated to a (smaller) order."""
        return Series(trunc, self.coefficients)
