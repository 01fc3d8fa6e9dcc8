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

"""table.py - result records and invariant tables"""

import csv
import io
import json

from dataclasses import dataclass

import yaml

from rootgw import util
from rootgw.engine import GeometryConfig, admissible_keys, invariant
from rootgw.util import writelines, rational, UsageError


@dataclass(frozen=True)
class ResultRecord:
    """One computed invariant.  n has 3 entries for core invariants and 5
    for general ones."""
    delta: int
    d: int
    n: tuple
    value: object
    admissible: bool

    def __post_init__(self):
        if not self.admissible and self.value:
            raise util.InternalError('Inadmissible record with value %s' %
                                     self.value)

    def asdict(self):
        """Returns the record in its json shape."""
        return {'delta': self.delta, 'd': self.d, 'n': list(self.n),
                'value': rational(self.value), 'admissible': self.admissible}

    def json(self):
        """Returns the record as one line of compact json."""
        return json.dumps(self.asdict(), separators=(',', ':'))

    def text(self):
        """Returns the record as I_d(n) = value."""
        return 'delta=%d I_%d(%s) = %s' % (self.delta, self.d,
                                           ', '.join(str(n) for n in self.n),
                                           rational(self.value))


def render_records(records, fmt):
    """Returns the lines of a rendered list of records."""

    if fmt == 'json':
        return [json.dumps([r.asdict() for r in records],
                           separators=(',', ':')), '\n']
    if fmt == 'yaml':
        return [yaml.safe_dump([r.asdict() for r in records], sort_keys=False,
                               default_flow_style=False)]
    if fmt == 'text':
        return [r.text() + '\n' for r in records]
    if fmt != 'csv':
        raise UsageError('Tables are rendered as text, csv, json or yaml')

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    names = ['n%d' % i for i in range(5 - len(records[0].n), 5)] \
      if records else ['n2', 'n3', 'n4']
    writer.writerow(['delta', 'd'] + names + ['value', 'admissible'])
    for r in records:
        writer.writerow([r.delta, r.d] + list(r.n) +
                        [rational(r.value), str(r.admissible).lower()])
    return [buf.getvalue()]


def table_records(store, cfg, d, max_n3):
    """Returns the records of the admissible keys of degree d with
    n3 <= max_n3, sorted by (n3, n4)."""
    return [ResultRecord(cfg.delta, d, key.n, invariant(store, cfg, key), True)
            for key in admissible_keys(cfg, d, max_n3)]


#----------------------------------------------------------------------------
# table()

def table(args, store):
    """Writes the table of one degree."""
    cfg = GeometryConfig(args.delta)
    if args.degree < 1:
        raise UsageError('Tables start in degree 1')
    records = table_records(store, cfg, args.degree, args.max_n3)
    fmt = args.format or util.getconfig('table-format')
    writelines(render_records(records, fmt))
