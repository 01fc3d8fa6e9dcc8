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

"""compute.py - single invariants and contact families"""

import json
import logging

from rootgw.engine import GeometryConfig, InvariantKey, GeneralKey
from rootgw.engine import invariant, general_invariant, contact_table
from rootgw.engine import dimension_admissible, general_admissible
from rootgw.table import ResultRecord
from rootgw.util import write, writelines, rational, UsageError

LOGGER = logging.getLogger(__name__)


def parse_counts(text):
    """Parses "n0,n1,n2,n3,n4" into a tuple of five integers."""
    tokens = [t.strip() for t in text.split(',')]
    if len(tokens) != 5 or not all(t.isdigit() for t in tokens):
        raise UsageError('Expected five comma-separated counts: %s' % text)
    return tuple(int(t) for t in tokens)


def _emit(record, as_json):
    """Writes a record as its bare value or as json."""
    write((record.json() if as_json else rational(record.value)) + '\n')


def compute(args, store):
    """Writes I_d(n2, n3, n4)."""
    cfg = GeometryConfig(args.delta)
    key = InvariantKey(args.degree, args.n2, args.n3, args.n4)
    _emit(ResultRecord(cfg.delta, key.d, key.n, invariant(store, cfg, key),
                       dimension_admissible(cfg, key)), args.json)
    LOGGER.debug('Memo store: %d entries, %d hits, %d misses, '
                 'longest chain %d', *store.stats())


def general(args, store):
    """Writes I_d(T0^n0 T1^n1 T2^n2 T3^n3 T4^n4)."""
    cfg = GeometryConfig(args.delta)
    key = GeneralKey(args.degree, parse_counts(args.n))
    _emit(ResultRecord(cfg.delta, key.d, key.n,
                       general_invariant(store, cfg, key),
                       general_admissible(cfg, key)), args.json)


def contact(args, store):
    """Writes the contact family of one degree: a points of D fixed, b
    tangencies, and 3d - 1 - a - b points of P^2."""

    cfg = GeometryConfig(args.delta)
    if args.degree < 1:
        raise UsageError('Contact families start in degree 1')
    rows = contact_table(store, cfg, args.degree)

    if args.json:
        out = [{'a': a, 'b': b, 'n': list(key.n), 'value': rational(value)}
               for a, b, key, value in rows]
        write(json.dumps({'delta': cfg.delta, 'd': args.degree,
                          'contacts': out}, separators=(',', ':')) + '\n')
    else:
        writelines('a=%d b=%d I_%d(%d, %d, %d) = %s\n' %
                   (a, b, key.d, key.n2, key.n3, key.n4, rational(value))
                   for a, b, key, value in rows)
