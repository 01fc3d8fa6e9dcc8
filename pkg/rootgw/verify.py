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

"""verify.py - verification suites for rootgw"""

import itertools
import json
import logging
import math
import random
import time

from dataclasses import dataclass, field
from fractions import Fraction

import yaml

from rootgw import util
from rootgw.engine import GeometryConfig, InvariantKey, GeneralKey, LAMBDA
from rootgw.engine import ZERO, RECURSIONS, keystr
from rootgw.engine import invariant, general_invariant, gated_recursions
from rootgw.engine import dimension_admissible, admissible_keys, contact_table
from rootgw.potential import BASIS, associativity_residual
from rootgw.potential import commutativity_residual, unit_residual
from rootgw.potential import relation_residual_series, derive_lambda
from rootgw.series import TruncationOrder
from rootgw.util import writelines, rational, UsageError

LOGGER = logging.getLogger(__name__)

SUITES = ('closed-forms', 'bases', 'pinned', 'relations', 'wdvv', 'cross',
          'degree0', 'guards', 'contact')


@dataclass
class SuiteReport:
    """Exact comparisons made by a suite."""
    name: str
    cases: list = field(default_factory=list)
    elapsed: float = 0.

    @property
    def passed(self):
        """True iff every case passed."""
        return all(case[3] for case in self.cases)

    def add(self, description, expected, actual):
        """Records a case.  It passes iff expected == actual exactly."""
        expected = Fraction(expected)
        actual = Fraction(actual)
        self.cases.append((description, expected, actual, expected == actual))

    def extend(self, other):
        """Appends the cases of another report."""
        self.cases.extend(other.cases)
        self.elapsed += other.elapsed

    def failures(self):
        """Returns the failed cases."""
        return [case for case in self.cases if not case[3]]


def _first_nonzero(element):
    """Returns the first nonzero coefficient of a QuantumElement, or 0."""
    first = element.first_nonzero()
    return ZERO if first is None else first[2]


#----------------------------------------------------------------------------
# Closed forms and base cases

def lambda_k(k):
    """Returns (-1)^k k!/2^(k+1)."""
    if k < 0:
        raise UsageError('k must be non-negative: %d' % k)
    return Fraction((-1)**k*math.factorial(k), 2**(k + 1))


def check_line_closed_form(store, k_max):
    """Checks I_1(0, k, k+3) = lambda_k for a line."""
    report = SuiteReport('line-closed-form')
    cfg = GeometryConfig(1)
    for k in range(k_max + 1):
        key = InvariantKey(1, 0, k, k + 3)
        report.add('delta=1 %s' % keystr(key), lambda_k(k),
                   invariant(store, cfg, key))
    return report


def check_conic_closed_form(store, k_max):
    """Checks I_2(0, k, k+6) = lambda_k for a conic."""
    report = SuiteReport('conic-closed-form')
    cfg = GeometryConfig(2)
    for k in range(k_max + 1):
        key = InvariantKey(2, 0, k, k + 6)
        report.add('delta=2 %s' % keystr(key), lambda_k(k),
                   invariant(store, cfg, key))
    return report


def check_degree1_bases(store, delta_max):
    """Checks the seeded degree 1 values, and I_1(0, delta-2, 2) = (delta-2)!
    which the recursions must recover."""
    report = SuiteReport('bases')
    for delta in range(1, delta_max + 1):
        cfg = GeometryConfig(delta)
        expected = [(InvariantKey(1, 2, delta, 0), math.factorial(delta)),
                    (InvariantKey(1, 1, delta - 1, 1),
                     math.factorial(delta - 1))]
        if delta >= 2:
            expected.append((InvariantKey(1, 0, delta - 2, 2),
                             math.factorial(delta - 2)))
        for key, value in expected:
            report.add('delta=%d %s' % (delta, keystr(key)), value,
                       invariant(store, cfg, key))
    return report


def check_pinned_values(store, lambda_deltas=(1, 2, 3, 4),
                        vanishing_delta_max=5):
    """Checks the quartic value 416, the derivation of LAMBDA, and the
    degree 1 vanishing instances."""

    report = SuiteReport('pinned')

    key = InvariantKey(4, 7, 0, 4)
    report.add('delta=1 %s' % keystr(key), 416,
               invariant(store, GeometryConfig(1), key))

    for delta in lambda_deltas:
        value = derive_lambda(store, GeometryConfig(delta))
        if value is None:  # Degenerate; record it as a failure
            report.cases.append(('delta=%d lambda' % delta, LAMBDA, None,
                                 False))
        else:
            report.add('delta=%d lambda' % delta, LAMBDA, value)

    for delta in range(1, vanishing_delta_max + 1):
        cfg = GeometryConfig(delta)
        for key in (InvariantKey(1, 3, delta + 2, 0),
                    InvariantKey(1, 2, delta + 1, 1)):
            report.add('delta=%d %s' % (delta, keystr(key)), 0,
                       invariant(store, cfg, key))

    return report


#----------------------------------------------------------------------------
# Cross checks

def cross_check(store, cfg, key):
    """Compares invariant() against every recursion whose gate holds at key.
    """
    report = SuiteReport('cross')
    if not dimension_admissible(cfg, key):
        raise UsageError('Cross checks need an admissible key: %s' %
                         keystr(key))
    value = invariant(store, cfg, key)
    for number in gated_recursions(cfg, key):
        report.add('delta=%d %s recursion %d' % (cfg.delta, keystr(key),
                                                 number),
                   value, RECURSIONS[number](store, cfg, key))
    return report


def check_cross(store, deltas, d_max, max_n3, max_n4):
    """Cross checks every admissible key in range."""
    report = SuiteReport('cross')
    for delta in deltas:
        cfg = GeometryConfig(delta)
        for d in range(1, d_max + 1):
            for key in admissible_keys(cfg, d, max_n3):
                if key.n4 <= max_n4:
                    report.extend(cross_check(store, cfg, key))
    return report


def check_contact(store, deltas, d_max):
    """Cross checks every invariant of the contact families."""
    report = SuiteReport('contact')
    for delta in deltas:
        cfg = GeometryConfig(delta)
        for d in range(1, d_max + 1):
            for _, _, key, _ in contact_table(store, cfg, d):
                report.extend(cross_check(store, cfg, key))
    return report


#----------------------------------------------------------------------------
# Quantum product checks

def check_relations(store, deltas, d_max, y_max):
    """Checks that the four relations hold at every coefficient of degree
    1..d_max and total y degree <= y_max.

    Each case reports the first nonzero coefficient of one degree.
    """
    report = SuiteReport('relations')
    trunc = TruncationOrder(d_max, y_max)
    for delta in deltas:
        cfg = GeometryConfig(delta)
        for which in (1, 2, 3, 4):
            residual = relation_residual_series(store, cfg, which, trunc)
            for d in range(1, d_max + 1):
                actual = next((residual.divided_power_coefficient(e)
                               for e, _ in residual.items() if e[0] == d),
                              ZERO)
                report.add('delta=%d relation %d at degree %d' %
                           (delta, which, d), 0, actual)
    return report


def check_wdvv(store, deltas, q_max, y_max):
    """Checks associativity for all 125 basis triples, and commutativity."""
    report = SuiteReport('wdvv')
    trunc = TruncationOrder(q_max, y_max)
    for delta in deltas:
        cfg = GeometryConfig(delta)
        for i, j in itertools.combinations_with_replacement(BASIS, 2):
            residual = commutativity_residual(store, cfg, i, j, trunc)
            report.add('delta=%d T%d*T%d = T%d*T%d' % (delta, i, j, j, i),
                       0, _first_nonzero(residual))
        for i, j, k in itertools.product(BASIS, repeat=3):
            residual = associativity_residual(store, cfg, i, j, k, trunc)
            report.add('delta=%d (T%d*T%d)*T%d = T%d*(T%d*T%d)' %
                       (delta, i, j, k, i, j, k), 0,
                       _first_nonzero(residual))
    return report


#----------------------------------------------------------------------------
# Degree 0 and guards

def _expected_degree_zero(delta, n):
    """The degree 0 invariants, written out independently of the engine."""
    if n == (2, 0, 1, 0, 0) or n == (1, 2, 0, 0, 0):
        return Fraction(1)
    if n == (0, 1, 0, 2, 0):
        return Fraction(delta, 2)
    if n == (1, 0, 0, 1, 1):
        return Fraction(1, 2)
    if n == (0, 0, 0, 3, 1):
        return LAMBDA
    return ZERO


def check_degree_zero(store, deltas, max_insertions=6):
    """Checks the degree 0 invariants with up to max_insertions insertions,
    and the unit axiom."""
    report = SuiteReport('degree0')
    trunc = TruncationOrder(1, 2)
    for delta in deltas:
        cfg = GeometryConfig(delta)
        for total in range(3, max_insertions + 1):
            for n in _compositions(total, 5):
                report.add('delta=%d I_0%s' % (delta, n),
                           _expected_degree_zero(delta, n),
                           general_invariant(store, cfg, GeneralKey(0, n)))
        for i in BASIS:
            report.add('delta=%d T0*T%d = T%d' % (delta, i, i), 0,
                       _first_nonzero(unit_residual(store, cfg, i, trunc)))
    return report


def _compositions(total, parts):
    """Yields the tuples of parts non-negative integers summing to total."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def check_guards(store, samples, seed):
    """Checks that pseudo-random inadmissible keys give 0 and are never
    stored."""
    report = SuiteReport('guards')
    rng = random.Random(seed)
    count = 0
    while count < samples:
        cfg = GeometryConfig(rng.randint(1, 6))
        key = InvariantKey(rng.randint(1, 4), rng.randint(0, 12),
                           rng.randint(0, 12), rng.randint(0, 12))
        if dimension_admissible(cfg, key):
            continue
        count += 1
        value = invariant(store, cfg, key)
        stored = (cfg.delta, key) in store
        report.add('delta=%d %s%s' % (cfg.delta, keystr(key),
                                      ' (stored)' if stored else ''),
                   0, 1 if stored else value)
    return report


#----------------------------------------------------------------------------
# Suite selection

def _option(options, key, default):
    """Returns options[key] unless it is missing or None."""
    value = options.get(key)
    return default() if value is None else value


def _suite(store, name, options):
    """Runs a single named suite."""

    getint, getintlist = util.getint, util.getintlist
    deltas = options.get('deltas')

    if name == 'closed-forms':
        k_max = _option(options, 'k_max', lambda: getint('k-max'))
        report = check_line_closed_form(store, k_max)
        report.extend(check_conic_closed_form(store, k_max))
        return report
    if name == 'bases':
        delta_max = max(deltas) if deltas else getint('bases-delta-max')
        return check_degree1_bases(store, delta_max)
    if name == 'pinned':
        return check_pinned_values(
            store, deltas or getintlist('pinned-lambda-deltas'),
            getint('pinned-vanishing-delta-max'))
    if name == 'relations':
        return check_relations(
            store, deltas or getintlist('relations-deltas'),
            _option(options, 'd_max', lambda: getint('relations-d-max')),
            _option(options, 'y_max', lambda: getint('relations-y-max')))
    if name == 'wdvv':
        return check_wdvv(
            store, deltas or getintlist('wdvv-deltas'),
            _option(options, 'q_max', lambda: getint('wdvv-q-max')),
            _option(options, 'y_max', lambda: getint('wdvv-y-max')))
    if name == 'cross':
        return check_cross(
            store, deltas or getintlist('cross-deltas'),
            _option(options, 'd_max', lambda: getint('cross-d-max')),
            getint('cross-max-n3'), getint('cross-max-n4'))
    if name == 'degree0':
        return check_degree_zero(store, deltas or getintlist('degree0-deltas'))
    if name == 'guards':
        return check_guards(
            store,
            _option(options, 'samples', lambda: getint('guards-samples')),
            _option(options, 'seed', lambda: getint('guards-seed')))
    if name == 'contact':
        return check_contact(
            store, deltas or getintlist('contact-deltas'),
            _option(options, 'd_max', lambda: getint('contact-d-max')))
    raise UsageError('Unknown suite: %s' % name)


def run_suite(store, name, options=None):
    """Runs the named suite, or every suite for 'all'.

    options - a dict with any of deltas, k_max, d_max, q_max, y_max, samples
              and seed; missing or None entries come from the configuration
    """

    options = options or {}
    names = SUITES if name == 'all' else (name,)
    if name != 'all' and name not in SUITES:
        raise UsageError('Unknown suite: %s' % name)

    report = SuiteReport(name)
    for suite in names:
        start = time.perf_counter()
        part = _suite(store, suite, options)
        part.elapsed = time.perf_counter() - start
        LOGGER.info('Suite %s: %d cases in %.2f s', suite, len(part.cases),
                    part.elapsed)
        report.extend(part)

    LOGGER.debug('Memo store: %d entries, %d hits, %d misses, '
                 'longest chain %d', *store.stats())
    return report


#----------------------------------------------------------------------------
# verify()

def _value(value):
    """Renders a case value; None marks a degenerate computation."""
    return 'undefined' if value is None else rational(value)


def report_dict(report):
    """Returns the report as a dict for json and yaml output."""
    return {'suite': report.name,
            'passed': report.passed,
            'cases': [{'description': description,
                       'expected': _value(expected),
                       'actual': _value(actual),
                       'passed': passed}
                      for description, expected, actual, passed in
                      report.cases]}


def render_report(report, fmt):
    """Returns the lines of a rendered report."""
    if fmt == 'json':
        return [json.dumps(report_dict(report), separators=(',', ':')), '\n']
    if fmt == 'yaml':
        return [yaml.safe_dump(report_dict(report), sort_keys=False,
                               default_flow_style=False)]
    if fmt != 'text':
        raise UsageError('Reports are rendered as text, json or yaml')

    lines = []
    for description, expected, actual, passed in report.cases:
        lines.append('Checking %s... ' % description)
        if passed:
            lines.append('OK.\n')
        else:
            lines.append('FAILED (expected %s, got %s).\n' %
                         (_value(expected), _value(actual)))
    failures = len(report.failures())
    lines.append('Suite %s: %d of %d cases passed.\n' %
                 (report.name, len(report.cases) - failures,
                  len(report.cases)))
    return lines


def verify(args, store):
    """Runs the selected suite and writes the report.  Returns the exit
    status: 0 on a full pass and 1 otherwise."""

    options = {'deltas': args.delta, 'k_max': args.k_max,
               'd_max': args.d_max, 'q_max': args.q_max,
               'y_max': args.y_max, 'samples': args.samples,
               'seed': args.seed}
    fmt = args.format or util.getconfig('verify-format')
    if args.json:
        fmt = 'json'

    report = run_suite(store, args.suite, options)
    writelines(render_report(report, fmt))

    if not report.passed:
        LOGGER.warning('%d failed cases in suite %s', len(report.failures()),
                       report.name)
        return 1
    return 0
