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

"""potential.py - the quantum potential and the big quantum product

The potential is split into the cubic classical part Psi, the degree 0
four-point part Psi' = LAMBDA*y3^3*y4/6, and the positive degree part

    Gamma = sum_{d >= 1} Q^d I_d(n2, n3, n4) y2^n2/n2! y3^n3/n3! y4^n4/n4!

with Q = q*exp(y1).  A derivative by y1 multiplies the Q^d coefficient by d.
Nothing depends on y0 beyond the constant third derivatives of Psi, so y0
is dropped from the series ring altogether.
"""

import functools
import logging
import math

from fractions import Fraction

from rootgw.engine import InvariantKey, ZERO, LAMBDA, invariant, three_point
from rootgw.series import Series, TruncationOrder
from rootgw.util import UsageError

LOGGER = logging.getLogger(__name__)

BASIS = (0, 1, 2, 3, 4)

# Inverse of the intersection pairing on the inertia stack
PAIRING = ((0, 0, 1, 0, 0),
           (0, 1, 0, 0, 0),
           (1, 0, 0, 0, 0),
           (0, 0, 0, 0, 2),
           (0, 0, 0, 2, 0))

# The truncation that keeps constant coordinates only
CONSTANTS = TruncationOrder(0, 0)


def _check_basis(*indices):
    """Raises UsageError unless every index names T0..T4."""
    for i in indices:
        if i not in BASIS:
            raise UsageError('Basis index out of range: %r' % (i,))


#----------------------------------------------------------------------------
# Quantum elements

class QuantumElement:
    """Coordinates against T0..T4, each a Series of a shared truncation."""

    __slots__ = ('trunc', 'components')

    def __init__(self, trunc, components=None):
        self.trunc = trunc
        if components is None:
            components = [Series(trunc) for _ in BASIS]
        if len(components) != len(BASIS):
            raise UsageError('A quantum element has 5 components')
        for c in components:
            if c.trunc != trunc:
                raise UsageError('Mismatched truncation orders')
        self.components = tuple(components)

    @classmethod
    def basis(cls, trunc, i):
        """Returns T_i."""
        _check_basis(i)
        return cls.constant(trunc, [1 if f == i else 0 for f in BASIS])

    @classmethod
    def constant(cls, trunc, coefficients):
        """Returns the element with constant coordinates."""
        return cls(trunc, [Series.constant(trunc, c) for c in coefficients])

    def __eq__(self, other):
        if isinstance(other, QuantumElement):
            return self.components == other.components
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return 'QuantumElement(%s)' % ', '.join(repr(c) for c in
                                                self.components)

    def __bool__(self):
        return any(self.components)

    def __add__(self, other):
        return QuantumElement(self.trunc, [a + b for a, b in
                                           zip(self.components,
                                               other.components)])

    def __sub__(self, other):
        return QuantumElement(self.trunc, [a - b for a, b in
                                           zip(self.components,
                                               other.components)])

    def scale(self, s):
        """Multiplies every coordinate by the series or scalar s."""
        return QuantumElement(self.trunc, [c*s for c in self.components])

    def first_nonzero(self):
        """Returns (f, exponents, coefficient) of the first nonzero
        coefficient, or None."""
        for f, c in enumerate(self.components):
            for exponents, value in c.items():
                return f, exponents, value
        return None


#----------------------------------------------------------------------------
# Third derivatives of the potential

def _counts(*indices):
    """Counts the occurrences of 0..4 among the indices."""
    a = [0]*5
    for i in indices:
        a[i] += 1
    return a


def classical_third_derivative(cfg, i, j, k, trunc):
    """Returns Psi_ijk + Psi'_ijk."""

    _check_basis(i, j, k)
    out = Series.constant(trunc, three_point(cfg, i, j, k))

    # Psi' = LAMBDA*y3^3*y4/6 only involves y3 and y4, and y4 at most once
    a = _counts(i, j, k)
    if a[3] + a[4] == 3 and a[4] <= 1:
        if a[3] == 3:  # d^3/dy3^3 gives LAMBDA*y4
            out += Series.variable(trunc, 4)*LAMBDA
        else:  # d^3/dy3^2 dy4 gives LAMBDA*y3
            out += Series.variable(trunc, 3)*LAMBDA
    return out


def gamma_third_derivative(store, cfg, i, j, k, trunc):
    """Returns Gamma_ijk truncated to trunc."""

    _check_basis(i, j, k)
    a = _counts(i, j, k)
    if a[0]:
        return Series(trunc)

    # The coefficient of Q^d y^m/m! is d^a1 I_d(m + (a2, a3, a4)).  For
    # given (d, m3, m4) at most one m2 is admissible.
    delta = cfg.delta
    out = {}
    for d in range(1, trunc.q_max + 1):
        for m3 in range(trunc.y_max + 1):
            for m4 in range(trunc.y_max - m3 + 1):
                n3, n4 = m3 + a[3], m4 + a[4]
                twice = d*delta + n4 - n3
                if twice % 2:
                    continue
                n2 = 3*d - 1 - twice//2
                m2 = n2 - a[2]
                if m2 < 0 or m2 + m3 + m4 > trunc.y_max:
                    continue
                value = invariant(store, cfg, InvariantKey(d, n2, n3, n4))
                if value:
                    out[(d, m2, m3, m4)] = d**a[1]*value/_factorials(m2, m3,
                                                                      m4)
    return Series(trunc, out)


@functools.lru_cache(maxsize=None)
def _factorials(*ms):
    """Returns the product of the factorials."""
    return math.prod(math.factorial(m) for m in ms)


def stringy_product(cfg, i, j, trunc=CONSTANTS):
    """Returns T_i ._s T_j, the product the degree 0 three-point invariants
    give, as a constant element of truncation trunc."""
    _check_basis(i, j)
    out = [ZERO]*5
    for e in BASIS:
        psi = three_point(cfg, i, j, e)
        if psi:
            for f in BASIS:
                out[f] += psi*PAIRING[e][f]
    return QuantumElement.constant(trunc, out)


class ProductTable:
    """Caches third derivatives and products of basis elements for one
    (store, geometry, truncation)."""

    def __init__(self, store, cfg, trunc):
        self.store = store
        self.cfg = cfg
        self.trunc = trunc
        self._gamma = {}
        self._phi = {}
        self._products = {}
        LOGGER.debug('Product table for delta=%d at %s', cfg.delta, trunc)

    def gamma(self, i, j, k):
        """Returns Gamma_ijk."""
        key = tuple(sorted((i, j, k)))
        if key not in self._gamma:
            self._gamma[key] = gamma_third_derivative(self.store, self.cfg,
                                                      *key, self.trunc)
        return self._gamma[key]

    def phi(self, i, j, k):
        """Returns the third derivative of Psi + Psi' + Gamma."""
        key = tuple(sorted((i, j, k)))
        if key not in self._phi:
            self._phi[key] = classical_third_derivative(self.cfg, *key,
                                                        self.trunc) + \
              self.gamma(*key)
        return self._phi[key]

    def basis_product(self, i, j):
        """Returns T_i * T_j = sum_{e,f} Phi_ije g^{ef} T_f."""
        key = (min(i, j), max(i, j))
        if key not in self._products:
            components = [Series(self.trunc) for _ in BASIS]
            for e in BASIS:
                phi = self.phi(i, j, e)
                if not phi:
                    continue
                for f in BASIS:
                    if PAIRING[e][f]:
                        components[f] = components[f] + phi*PAIRING[e][f]
            self._products[key] = QuantumElement(self.trunc, components)
        return self._products[key]

    def product(self, a, b):
        """Returns the bilinear extension of basis_product()."""
        if a.trunc != self.trunc or b.trunc != self.trunc:
            raise UsageError('Mismatched truncation orders')
        out = QuantumElement(self.trunc)
        for i, ai in enumerate(a.components):
            if not ai:
                continue
            for j, bj in enumerate(b.components):
                if bj:
                    out = out + self.basis_product(i, j).scale(ai*bj)
        return out


def product_table(store, cfg, trunc):
    """Returns the shared ProductTable of (store, cfg, trunc).  The table is
    kept on the store and goes away with it."""
    key = ('product', cfg, trunc)
    table = store.derived.get(key)
    if table is None:
        table = store.derived.setdefault(key, ProductTable(store, cfg, trunc))
    return table


def third_derivative(store, cfg, i, j, k, trunc):
    """Returns the third derivative of the potential."""
    return product_table(store, cfg, trunc).phi(i, j, k)


def basis_product(store, cfg, i, j, trunc):
    """Returns T_i * T_j."""
    _check_basis(i, j)
    return product_table(store, cfg, trunc).basis_product(i, j)


def quantum_product(store, cfg, a, b, trunc):
    """Returns a * b in the big quantum product."""
    return product_table(store, cfg, trunc).product(a, b)


def unit_residual(store, cfg, i, trunc):
    """Returns T0*T_i - T_i."""
    _check_basis(i)
    table = product_table(store, cfg, trunc)
    t0, ti = QuantumElement.basis(trunc, 0), QuantumElement.basis(trunc, i)
    return table.product(t0, ti) - ti


def commutativity_residual(store, cfg, i, j, trunc):
    """Returns T_i*T_j - T_j*T_i, summed from the third derivatives in the
    two orders."""
    _check_basis(i, j)
    table = product_table(store, cfg, trunc)
    out = QuantumElement(trunc)
    for f in BASIS:
        for e in BASIS:
            if PAIRING[e][f]:
                diff = table.phi(i, j, e) - table.phi(j, i, e)
                out = out + QuantumElement.basis(trunc, f).scale(
                    diff*PAIRING[e][f])
    return out


def associativity_residual(store, cfg, i, j, k, trunc):
    """Returns (T_i*T_j)*T_k - T_i*(T_j*T_k), which must vanish."""
    _check_basis(i, j, k)
    table = product_table(store, cfg, trunc)
    ti, tk = QuantumElement.basis(trunc, i), QuantumElement.basis(trunc, k)
    left = table.product(table.basis_product(i, j), tk)
    right = table.product(ti, table.basis_product(j, k))
    return left - right


#----------------------------------------------------------------------------
# The four relations behind the recursions

def relation_residual_series(store, cfg, which, trunc):
    """Returns LHS - RHS of one of the four relations.

    They compare the T0 coordinates of (T1*T1)*T2 and T1*(T1*T2), the T3
    coordinates of (T3*T3)*T4 and T3*(T3*T4), the T3 coordinates of
    (T3*T1)*T4 and T3*(T1*T4), and the T1 coordinates of (T3*T3)*T1 and
    T3*(T3*T1), in that order.
    """

    table = product_table(store, cfg, trunc)
    G = table.gamma
    delta = cfg.delta
    y3, y4 = Series.variable(trunc, 3), Series.variable(trunc, 4)
    lam = LAMBDA

    if which == 1:
        lhs = G(2, 2, 2)
        rhs = G(1, 1, 2)*G(1, 1, 2) - G(1, 1, 1)*G(1, 2, 2) + \
          2*(2*G(1, 2, 3)*G(1, 2, 4) - G(1, 1, 3)*G(2, 2, 4)
             - G(1, 1, 4)*G(2, 2, 3))
    elif which == 2:
        lhs = delta*G(1, 4, 4) + 4*lam*(y4*G(4, 4, 4) - y3*G(3, 4, 4)) - \
          2*G(2, 3, 4)
        rhs = 2*(G(1, 3, 4)*G(1, 3, 4) - G(1, 3, 3)*G(1, 4, 4)) + \
          4*(G(3, 3, 4)*G(3, 4, 4) - G(3, 3, 3)*G(4, 4, 4))
    elif which == 3:
        lhs = 2*delta*G(4, 4, 4) - G(1, 2, 4) - 4*lam*y3*G(1, 4, 4)
        rhs = 2*(G(1, 1, 4)*G(1, 3, 4) - G(1, 1, 3)*G(1, 4, 4)) + \
          4*(G(1, 4, 4)*G(3, 3, 4) - G(1, 3, 3)*G(4, 4, 4))
    elif which == 4:
        lhs = G(2, 3, 3) + delta*(Fraction(1, 2)*G(1, 1, 1) - 2*G(1, 3, 4)) + \
          2*lam*(y3*G(1, 1, 3) + y4*G(1, 1, 4))
        rhs = G(1, 1, 3)*G(1, 1, 3) - G(1, 1, 1)*G(1, 3, 3) + \
          2*(2*G(1, 3, 3)*G(1, 3, 4) - G(1, 1, 3)*G(3, 3, 4)
             - G(1, 1, 4)*G(3, 3, 3))
    else:
        raise UsageError('There are four relations, not %r' % (which,))

    return lhs - rhs


def relation_residual(store, cfg, which, coeff):
    """Returns LHS - RHS of a relation at the coefficient of
    Q^d y2^m2/m2! y3^m3/m3! y4^m4/m4!, where coeff = (d, m2, m3, m4)."""
    d, m2, m3, m4 = coeff
    if d < 1:
        raise UsageError('Relations are compared in positive degree')
    trunc = TruncationOrder(d, m2 + m3 + m4)
    series = relation_residual_series(store, cfg, which, trunc)
    return series.divided_power_coefficient(coeff)


def derive_lambda(store, cfg):
    """Solves for LAMBDA in the degree 1 coefficient of the fourth relation.

    Returns None if the equation is degenerate.
    """
    delta = cfg.delta
    base = invariant(store, cfg, InvariantKey(1, 2, delta, 0))
    if not base:
        return None
    rhs = 2*delta*invariant(store, cfg, InvariantKey(1, 2, delta + 1, 1)) - \
      invariant(store, cfg, InvariantKey(1, 3, delta + 2, 0))
    return (rhs/(delta*base) - Fraction(1, 2))/2
