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

"""engine.py - genus 0 invariants of the square root stack P^2_{D,2}

D is a smooth plane curve of degree delta.  The classes T0..T4 are the unit,
hyperplane and point classes of P^2 followed by the unit and point classes
of D.  The core invariants are

    I_d(n2, n3, n4) = I_d(T2^n2 T3^n3 T4^n4),   d >= 1

and everything else reduces to them (see general_invariant()).  The core
invariants are computed from two seeded degree 1 values and four recursions
that come from associativity of the big quantum product.  All arithmetic is
exact.
"""

import contextlib
import logging
import math
import sys
import threading

from dataclasses import dataclass
from fractions import Fraction

from rootgw.util import UsageError, InternalError, CacheConflict

LOGGER = logging.getLogger(__name__)

ZERO = Fraction(0)

# The single degree 0 four-point invariant I_0(T3^3 T4)
LAMBDA = Fraction(-1, 4)

# Interpreter frames per link of an evaluation chain, and the headroom kept
# for callers below the outermost query
FRAMES_PER_LINK = 8
STACK_FLOOR = 1000


#----------------------------------------------------------------------------
# Domain types

@dataclass(frozen=True)
class GeometryConfig:
    """The degree delta of the branch curve D."""
    delta: int

    def __post_init__(self):
        if not isinstance(self.delta, int) or self.delta < 1:
            raise UsageError('delta must be a positive integer: %r' %
                             (self.delta,))


@dataclass(frozen=True, order=True)
class InvariantKey:
    """Indexes the core invariant I_d(n2, n3, n4)."""
    d: int
    n2: int
    n3: int
    n4: int

    def __post_init__(self):
        if self.d < 1 or min(self.n2, self.n3, self.n4) < 0:
            raise UsageError('Bad invariant key: d=%d, n=(%d, %d, %d)' %
                             (self.d, self.n2, self.n3, self.n4))

    @property
    def n(self):
        """The insertion counts (n2, n3, n4)."""
        return (self.n2, self.n3, self.n4)

    def moved(self, m2, m3, m4):
        """Returns the same-degree key shifted by (m2, m3, m4)."""
        return InvariantKey(self.d, self.n2 + m2, self.n3 + m3, self.n4 + m4)


@dataclass(frozen=True)
class GeneralKey:
    """Indexes I_d(T0^n0 T1^n1 T2^n2 T3^n3 T4^n4) for any d >= 0."""
    d: int
    n: tuple

    def __post_init__(self):
        if self.d < 0 or len(self.n) != 5 or min(self.n) < 0:
            raise UsageError('Bad invariant key: d=%d, n=%r' % (self.d, self.n))
        if self.d == 0 and sum(self.n) < 3:
            raise UsageError('Degree 0 invariants need at least 3 insertions')


@dataclass(frozen=True)
class SplitTerm:
    """One term d1 + d2 = d, p + q = target of a quadratic sum."""
    d1: int
    d2: int
    p: tuple
    q: tuple


_STACK_LOCK = threading.Lock()


def _ensure_stack(links):
    """Raises the interpreter's recursion limit to fit a chain of links.

    The limit is never lowered.
    """
    needed = STACK_FLOOR + FRAMES_PER_LINK*links
    if needed > sys.getrecursionlimit():
        with _STACK_LOCK:
            if needed > sys.getrecursionlimit():
                LOGGER.debug('Recursion limit raised to %d', 2*needed)
                sys.setrecursionlimit(2*needed)


class MemoStore:
    """Idempotent map from (delta, InvariantKey) to the invariant's value.

    Lookups and inserts may come from several threads.  Each thread tracks
    its own chain of keys under evaluation, so no query ever waits on
    another's.  Tables derived from the store (see
    rootgw.potential.product_table()) are kept in derived and live as long
    as the store.
    """

    def __init__(self):
        self.entries = {}
        self.hits = 0
        self.misses = 0
        self.max_chain = 0
        self.derived = {}
        self._lock = threading.Lock()
        self._local = threading.local()

    def __len__(self):
        return len(self.entries)

    def __contains__(self, item):
        return item in self.entries

    def _frames(self):
        """Returns this thread's stack of keys under evaluation."""
        if not hasattr(self._local, 'frames'):
            self._local.frames = []
            self._local.keys = set()
        return self._local.frames

    @property
    def in_progress(self):
        """The (delta, key) pairs this thread is currently evaluating."""
        self._frames()
        return frozenset(self._local.keys)

    def get(self, delta, key):
        """Returns the stored value or None."""
        value = self.entries.get((delta, key))
        with self._lock:
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
        return value

    def put(self, delta, key, value):
        """Stores a value.  A key is never rebound to a different value."""
        with self._lock:
            old = self.entries.get((delta, key))
            if old is not None and old != value:
                raise CacheConflict(
                    'Conflicting values for delta=%d %s: %s != %s' %
                    (delta, keystr(key), old, value))
            self.entries[(delta, key)] = value

    def items(self):
        """Returns the entries sorted by (delta, d, n2, n3, n4)."""
        return sorted(self.entries.items(),
                      key=lambda item: (item[0][0], item[0][1]))

    @contextlib.contextmanager
    def evaluating(self, cfg, key):
        """Marks key as in progress for the duration of its evaluation.

        Raises InternalError on re-entry, or when the chain of same-degree
        keys grows past recursion_depth_bound() of the chain's first key.
        """
        frames = self._frames()
        item = (cfg.delta, key)
        if item in self._local.keys:
            raise InternalError('Cycle detected at delta=%d %s' %
                                (cfg.delta, keystr(key)))

        # Split sums always drop the degree, so the same-degree chain is the
        # run of frames at the top of the stack with this degree
        if frames and frames[-1][0] == (cfg.delta, key.d):
            length, bound = frames[-1][1] + 1, frames[-1][2]
        else:
            length, bound = 0, recursion_depth_bound(cfg, key.d,
                                                     key.n3, key.n4)
        if length > bound:
            raise InternalError('Chain at delta=%d %s exceeds its bound %d' %
                                (cfg.delta, keystr(key), bound))
        with self._lock:
            self.max_chain = max(self.max_chain, length)
        _ensure_stack(len(frames) + 1)

        frames.append(((cfg.delta, key.d), length, bound))
        self._local.keys.add(item)
        try:
            yield
        finally:
            frames.pop()
            self._local.keys.discard(item)

    def stats(self):
        """Returns (entries, hits, misses, max_chain)."""
        return len(self.entries), self.hits, self.misses, self.max_chain


def keystr(key):
    """Formats a key for messages."""
    return 'I_%d(%d, %d, %d)' % (key.d, key.n2, key.n3, key.n4)


#----------------------------------------------------------------------------
# Elementary operations

def binomial(n, k):
    """Returns C(n, k), which is 0 unless 0 <= k <= n.

    Every recursion's gate keeps the upper index non-negative, so n < 0 is
    a bug.
    """
    if n < 0:
        raise InternalError('Binomial with negative upper index %d' % n)
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def expected_dimension(cfg, key):
    """Returns 3d - d*delta/2 + (n3 + n4)/2 + n2 - 1."""
    d, delta = key.d, cfg.delta
    return Fraction(6*d - d*delta + key.n3 + key.n4 + 2*key.n2 - 2, 2)


def _admissible(delta, d, n2, n3, n4):
    """Tuple form of dimension_admissible() for the inner loops."""
    twice = d*delta + n4 - n3
    return twice % 2 == 0 and 3*d - 1 == twice//2 + n2


def dimension_admissible(cfg, key):
    """True iff 3d - 1 = (d*delta + n4 - n3)/2 + n2 with an even numerator.

    Only admissible invariants can be nonzero.
    """
    return _admissible(cfg.delta, key.d, key.n2, key.n3, key.n4)


def recursion_depth_bound(cfg, d, n3, n4):
    """Returns an upper bound on the length of a same-degree chain that
    starts at (n3, n4)."""
    slope = (6 - cfg.delta)*d
    bound = Fraction(n4 - n3 + 8 - slope, 2) + n4 + max(0, 10 - slope)
    return max(0, math.ceil(bound))


def _splits(cfg, d, target):
    """Yields the SplitTerms over target whose factors are both admissible.

    The second index of p is fixed by admissibility of the first factor, so
    only (p3, p4) are enumerated.
    """
    t2, t3, t4 = target
    delta = cfg.delta
    for d1 in range(1, d):
        d2 = d - d1
        for p3 in range(t3 + 1):
            for p4 in range(t4 + 1):
                twice = d1*delta + p4 - p3
                if twice % 2:
                    continue
                p2 = 3*d1 - 1 - twice//2
                if p2 < 0 or p2 > t2:
                    continue
                q = (t2 - p2, t3 - p3, t4 - p4)
                if not _admissible(delta, d2, *q):
                    continue
                yield SplitTerm(d1, d2, (p2, p3, p4), q)


def _product(store, cfg, term):
    """Returns I_{d1}(p) * I_{d2}(q)."""
    left = invariant(store, cfg, InvariantKey(term.d1, *term.p))
    if not left:
        return ZERO
    return left * invariant(store, cfg, InvariantKey(term.d2, *term.q))


def _quadratic(store, cfg, d, target, weight):
    """Sums weight(term) * I_{d1}(p) * I_{d2}(q) over the splits."""
    total = ZERO
    for term in _splits(cfg, d, target):
        c = weight(term)
        if c:
            total += c*_product(store, cfg, term)
    return total


#----------------------------------------------------------------------------
# Recursions

def recursion1_value(store, cfg, key):
    """Right hand side of the recursion for n2 >= 3."""

    d, n2, n3, n4 = key.d, key.n2, key.n3, key.n4
    if n2 < 3:
        raise InternalError('Recursion 1 needs n2 >= 3: %s' % keystr(key))
    C = binomial

    def weight1(t):
        p2, p3, p4 = t.p
        return C(n3, p3)*C(n4, p4)*(t.d1**2*t.d2**2*C(n2-3, p2-1)
                                    - t.d1**3*t.d2*C(n2-3, p2))

    def weight2(t):
        p2, p3, p4 = t.p
        return 2*C(n3, p3-1)*C(n4, p4)*(2*t.d1*t.d2*C(n2-3, p2-1)
                                        - t.d1**2*C(n2-3, p2)
                                        - t.d2**2*C(n2-3, p2-2))

    return _quadratic(store, cfg, d, (n2-1, n3, n4), weight1) + \
      _quadratic(store, cfg, d, (n2-1, n3+1, n4+1), weight2)


def recursion2_value(store, cfg, key):
    """Solves the recursion with leading coefficient d*delta + n3 - n4 + 2.

    Needs n4 >= 2 and a nonzero leading coefficient.
    """

    d, n2, n3, n4 = key.d, key.n2, key.n3, key.n4
    leading = d*cfg.delta + n3 - n4 + 2
    if n4 < 2 or leading == 0:
        raise InternalError('Recursion 2 does not apply to %s' % keystr(key))
    C = binomial

    def weight1(t):
        p2, p3, p4 = t.p
        return 2*t.d1*t.d2*C(n2, p2)*(C(n3, p3-1)*C(n4-2, p4-1)
                                      - C(n3, p3-2)*C(n4-2, p4))

    def weight2(t):
        p2, p3, p4 = t.p
        return 4*C(n2, p2)*(C(n3, p3-2)*C(n4-2, p4-1)
                            - C(n3, p3-3)*C(n4-2, p4))

    total = 2*invariant(store, cfg, key.moved(1, 1, -1))
    total += _quadratic(store, cfg, d, (n2, n3+2, n4), weight1)
    total += _quadratic(store, cfg, d, (n2, n3+3, n4+1), weight2)
    return total/leading


def recursion3_value(store, cfg, key):
    """Solves the recursion with leading coefficient 2*delta.  Needs n4 >= 3.
    """

    d, n2, n3, n4 = key.d, key.n2, key.n3, key.n4
    if n4 < 3:
        raise InternalError('Recursion 3 needs n4 >= 3: %s' % keystr(key))
    C = binomial

    def weight1(t):
        p2, p3, p4 = t.p
        return 2*C(n2, p2)*C(n3, p3-1)*(t.d1*t.d2**2*C(n4-3, p4-1)
                                        - t.d1**2*t.d2*C(n4-3, p4))

    def weight2(t):
        p2, p3, p4 = t.p
        return 4*C(n2, p2)*C(n3, p3-2)*(t.d2*C(n4-3, p4-1)
                                        - t.d1*C(n4-3, p4))

    total = d*invariant(store, cfg, key.moved(1, 0, -2))
    if n3:  # Otherwise the coefficient vanishes and n3 - 1 is out of range
        total -= n3*d*invariant(store, cfg, key.moved(0, -1, -1))
    total += _quadratic(store, cfg, d, (n2, n3+1, n4-1), weight1)
    total += _quadratic(store, cfg, d, (n2, n3+2, n4), weight2)
    return total/(2*cfg.delta)


def recursion4_value(store, cfg, key):
    """Solves the recursion with leading coefficient d^2(d*delta - n3 - n4)/2.
    """

    d, n2, n3, n4 = key.d, key.n2, key.n3, key.n4
    delta = cfg.delta
    leading = Fraction(d*d*(d*delta - n3 - n4), 2)
    if leading == 0:
        raise InternalError('Recursion 4 does not apply to %s' % keystr(key))
    C = binomial

    def weight1(t):
        p2, p3, p4 = t.p
        return C(n2, p2)*C(n4, p4)*(t.d1**2*t.d2**2*C(n3, p3-1)
                                    - t.d1**3*t.d2*C(n3, p3))

    def weight2(t):
        p2, p3, p4 = t.p
        return 2*C(n2, p2)*C(n4, p4)*(2*t.d1*t.d2*C(n3, p3-2)
                                      - t.d1**2*C(n3, p3-1)
                                      - t.d2**2*C(n3, p3-3))

    total = 2*d*delta*invariant(store, cfg, key.moved(0, 1, 1))
    total -= invariant(store, cfg, key.moved(1, 2, 0))
    total += _quadratic(store, cfg, d, (n2, n3+2, n4), weight1)
    total += _quadratic(store, cfg, d, (n2, n3+3, n4+1), weight2)
    return total/leading


RECURSIONS = {1: recursion1_value, 2: recursion2_value,
              3: recursion3_value, 4: recursion4_value}


def gated_recursions(cfg, key):
    """Returns the numbers of the recursions that hold as identities at key.
    """
    d, n2, n3, n4 = key.d, key.n2, key.n3, key.n4
    line = d*cfg.delta + 2
    gates = []
    if n2 >= 3:
        gates.append(1)
    if n4 >= 2 and n4 - n3 != line:
        gates.append(2)
    if n4 >= 3 and n4 - n3 == line:
        gates.append(3)
    if n3 + n4 != d*cfg.delta:
        gates.append(4)
    return gates


#----------------------------------------------------------------------------
# The algorithm

def _algorithm(store, cfg, key):
    """Steps 2 to 7 of the algorithm.  key is admissible."""

    d, n2, n3, n4 = key.d, key.n2, key.n3, key.n4
    delta = cfg.delta

    # Seeded degree 1 values
    if (d, n2, n3, n4) == (1, 2, delta, 0):
        return Fraction(math.factorial(delta))
    if (d, n2, n3, n4) == (1, 1, delta - 1, 1):
        return Fraction(math.factorial(delta - 1))

    # Recursions
    if n2 >= 3:
        return recursion1_value(store, cfg, key)
    if n4 >= 2 and n4 - n3 != d*delta + 2:
        return recursion2_value(store, cfg, key)
    if n4 - n3 == d*delta + 2:
        return recursion3_value(store, cfg, key)
    return recursion4_value(store, cfg, key)


def invariant(store, cfg, key):
    """Returns I_d(n2, n3, n4).

    Inadmissible keys are 0 and never stored.  Admissible results are
    memoized.
    """

    if not dimension_admissible(cfg, key):
        return ZERO

    value = store.get(cfg.delta, key)
    if value is not None:
        return value

    with store.evaluating(cfg, key):
        try:
            value = _algorithm(store, cfg, key)
        except RecursionError as e:
            raise InternalError('Interpreter stack exhausted at delta=%d %s' %
                                (cfg.delta, keystr(key))) from e
    store.put(cfg.delta, key, value)

    LOGGER.debug('delta=%d %s = %s', cfg.delta, keystr(key), value)
    return value


#----------------------------------------------------------------------------
# General insertions

def _three_point_table(cfg):
    """Returns the nonzero degree 0 three-point invariants keyed by
    (n0, n1, n2, n3, n4)."""
    return {(2, 0, 1, 0, 0): Fraction(1),
            (1, 2, 0, 0, 0): Fraction(1),
            (0, 1, 0, 2, 0): Fraction(cfg.delta, 2),
            (1, 0, 0, 1, 1): Fraction(1, 2)}


def three_point(cfg, i, j, k):
    """Returns I_0(T_i T_j T_k)."""
    n = [0]*5
    for index in (i, j, k):
        n[index] += 1
    return _three_point_table(cfg).get(tuple(n), ZERO)


def general_admissible(cfg, key):
    """True iff 3d - 1 + n0 = (d*delta + n4 - n3)/2 + n2.  T1 insertions do
    not change the count."""
    d = key.d
    n0, _, n2, n3, n4 = key.n
    return 2*(3*d - 1 + n0 - n2) == d*cfg.delta + n4 - n3


def general_invariant(store, cfg, key):
    """Returns I_d(T0^n0 T1^n1 T2^n2 T3^n3 T4^n4) for any d >= 0.

    T0 and T1 insertions are removed by forgetting untwisted points.
    """

    d = key.d
    n0, n1, n2, n3, n4 = key.n
    total = sum(key.n)
    stable = d > 0 or total > 3

    if not general_admissible(cfg, key):
        return ZERO

    # The unit kills everything but the three-point invariants
    if n0 and stable:
        return ZERO

    # Divisor rule, applied n1 times
    if n1 and stable:
        if d == 0:
            return ZERO
        return d**n1*general_invariant(store, cfg,
                                       GeneralKey(d, (n0, 0, n2, n3, n4)))

    if d == 0:
        if n2 and total > 3:
            return ZERO
        if total == 3:
            return _three_point_table(cfg).get(tuple(key.n), ZERO)
        return LAMBDA if (n0, n1, n2, n3, n4) == (0, 0, 0, 3, 1) else ZERO

    return invariant(store, cfg, InvariantKey(d, n2, n3, n4))


#----------------------------------------------------------------------------
# Enumeration

def admissible_keys(cfg, d, max_n3):
    """Yields the admissible keys of degree d with n3 <= max_n3, sorted by
    (n3, n4)."""
    delta = cfg.delta
    for n3 in range(max_n3 + 1):
        # n2 >= 0 bounds n4
        for n4 in range(6*d - 2 - d*delta + n3 + 1):
            twice = d*delta + n4 - n3
            if twice % 2:
                continue
            n2 = 3*d - 1 - twice//2
            if n2 >= 0:
                yield InvariantKey(d, n2, n3, n4)


def contact_key(cfg, d, a, b):
    """Returns the key of degree d curves meeting D transversally at a fixed
    points and tangent to D at b points, through 3d - 1 - a - b points of P^2.
    """
    n2, n3 = 3*d - 1 - a - b, d*cfg.delta - a - 2*b
    if d < 1 or a < 0 or b < 0 or n2 < 0 or n3 < 0:
        raise UsageError('No contact profile for d=%d, a=%d, b=%d' % (d, a, b))
    return InvariantKey(d, n2, n3, a)


def contact_table(store, cfg, d):
    """Returns [(a, b, key, value), ...] for every contact profile of degree
    d, sorted by (a, b)."""
    rows = []
    for a in range(min(3*d - 1, d*cfg.delta) + 1):
        for b in range((d*cfg.delta - a)//2 + 1):
            if 3*d - 1 - a - b < 0:
                break
            key = contact_key(cfg, d, a, b)
            rows.append((a, b, key, invariant(store, cfg, key)))
    return rows
