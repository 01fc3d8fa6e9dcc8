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

"""cache.py - reads and writes memo store cache files

A cache file is UTF-8 text with LF line endings.  The first line is the
header and every other line is

    delta<TAB>d<TAB>n2<TAB>n3<TAB>n4<TAB>value

with the value in lowest terms, "p/q" with q > 1 or the bare integer "p".
"""

import logging
import re

from fractions import Fraction

from rootgw import util
from rootgw.engine import GeometryConfig, InvariantKey, dimension_admissible
from rootgw.engine import admissible_keys, invariant, keystr
from rootgw.util import write, rational, UsageError, CacheConflict

LOGGER = logging.getLogger(__name__)

HEADER = '#rootstack-gw-cache v1'

INTEGER = re.compile(r'(0|[1-9][0-9]*)\Z')
VALUE = re.compile(r'-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?\Z')


#----------------------------------------------------------------------------
# Writing

def format_cache(store):
    """Returns the lines of the cache file for the store, sorted by
    (delta, d, n2, n3, n4)."""
    lines = [HEADER + '\n']
    for (delta, key), value in store.items():
        lines.append('%d\t%d\t%d\t%d\t%d\t%s\n' %
                     (delta, key.d, key.n2, key.n3, key.n4, rational(value)))
    return lines


def export_cache(store, path):
    """Writes the store to path.  Returns the number of entries."""
    try:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.writelines(format_cache(store))
    except OSError as e:
        raise UsageError('Cannot write %s: %s' % (path, e.strerror)) from e
    LOGGER.info('Exported %d entries to %s', len(store), path)
    return len(store)


#----------------------------------------------------------------------------
# Reading

def _integer(token, lineno):
    """Parses a canonical non-negative decimal integer."""
    if not INTEGER.match(token):
        raise UsageError('Line %d: bad integer %r' % (lineno, token))
    return int(token)


def _value(token, lineno):
    """Parses a canonical fraction."""
    if not VALUE.match(token) or str(Fraction(token)) != token:
        raise UsageError('Line %d: value %r is not in lowest terms' %
                         (lineno, token))
    return Fraction(token)


def parse_cache(text):
    """Parses the text of a cache file.  Returns [(delta, key, value), ...].

    Raises UsageError for a malformed file.
    """

    if '\r' in text:
        raise UsageError('Cache files have LF line endings')
    lines = text.split('\n')
    if lines[-1] == '':
        del lines[-1]
    if not lines or lines[0] != HEADER:
        raise UsageError('Bad cache file header; expected %r' % HEADER)

    entries = []
    seen = set()
    for lineno, line in enumerate(lines[1:], 2):
        fields = line.split('\t')
        if len(fields) != 6:
            raise UsageError('Line %d: expected 6 tab-separated fields' %
                             lineno)
        delta, d, n2, n3, n4 = [_integer(t, lineno) for t in fields[:5]]
        value = _value(fields[5], lineno)
        if delta < 1 or d < 1:
            raise UsageError('Line %d: delta and d must be positive' % lineno)
        cfg, key = GeometryConfig(delta), InvariantKey(d, n2, n3, n4)
        if not dimension_admissible(cfg, key):
            raise UsageError('Line %d: %s is not admissible' %
                             (lineno, keystr(key)))
        if (delta, key) in seen:
            raise UsageError('Line %d: duplicate entry for %s' %
                             (lineno, keystr(key)))
        seen.add((delta, key))
        entries.append((delta, key, value))
    return entries


def import_cache(store, path):
    """Validates the cache file at path and seeds the store with it.
    Returns the number of entries.

    Nothing is stored if any entry disagrees with the store.
    """

    try:
        with open(path, encoding='utf-8', newline='') as f:
            text = f.read()
    except OSError as e:
        raise UsageError('Cannot read %s: %s' % (path, e.strerror)) from e
    except UnicodeDecodeError as e:
        raise UsageError('%s is not UTF-8 text' % path) from e

    entries = parse_cache(text)
    for delta, key, value in entries:
        old = store.entries.get((delta, key))
        if old is not None and old != value:
            raise CacheConflict('Conflicting values for delta=%d %s: %s != %s'
                                % (delta, keystr(key), old, value))
    for delta, key, value in entries:
        store.put(delta, key, value)

    LOGGER.info('Imported %d entries from %s', len(entries), path)
    return len(entries)


#----------------------------------------------------------------------------
# cache()

def warm(store, cfg, degree_max, max_n3):
    """Computes the tables of degrees 1..degree_max."""
    for d in range(1, degree_max + 1):
        for key in admissible_keys(cfg, d, max_n3):
            invariant(store, cfg, key)


def cache(args, store):
    """Exports or imports a cache file."""

    if args.action == 'export':
        if args.delta is not None:
            degree_max = args.degree_max
            if degree_max is None:
                degree_max = util.getint('cache-degree-max')
            max_n3 = args.max_n3
            if max_n3 is None:
                max_n3 = util.getint('cache-max-n3')
            warm(store, GeometryConfig(args.delta), degree_max, max_n3)
        count = export_cache(store, args.file)
        write('Exported %d entries to %s.\n' % (count, args.file))
    else:
        count = import_cache(store, args.file)
        write('Imported %d entries from %s.\n' % (count, args.file))
