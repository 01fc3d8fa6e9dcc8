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

"""rgw.py - genus 0 invariants of the square root stack P^2_{D,2}"""

import argparse
import logging
import sys

from rootgw import util
from rootgw.cache import cache, import_cache, export_cache
from rootgw.compute import compute, general, contact
from rootgw.engine import MemoStore
from rootgw.table import table
from rootgw.util import RootGWError, InternalError
from rootgw.verify import verify, SUITES


def count(text):
    """Parses a non-negative integer flag."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError('not an integer: %r' % text)
    if value < 0:
        raise argparse.ArgumentTypeError('negative: %d' % value)
    return value


def intlist(text):
    """Parses a comma-separated list of non-negative integers."""
    return [count(t.strip()) for t in text.split(',')]


def _geometry(subparser):
    """Adds the --delta and --degree flags."""
    subparser.add_argument('--delta', type=count, required=True)
    subparser.add_argument('--degree', type=count, required=True)


def make_parser():
    """Returns the argument parser."""

    # Create a top-level parser
    parser = argparse.ArgumentParser(prog='rootgw')
    parser.add_argument('--verbose', '-v', action='count', default=0)
    parser.add_argument('--load', metavar='FILE')
    parser.add_argument('--save', metavar='FILE')
    subparsers = parser.add_subparsers()

    # 'compute'
    subparser = subparsers.add_parser('compute')
    _geometry(subparser)
    subparser.add_argument('--n2', type=count, required=True)
    subparser.add_argument('--n3', type=count, required=True)
    subparser.add_argument('--n4', type=count, required=True)
    subparser.add_argument('--json', action='store_true')
    subparser.set_defaults(func=compute)

    # 'general'
    subparser = subparsers.add_parser('general')
    _geometry(subparser)
    subparser.add_argument('--n', required=True, metavar='N0,N1,N2,N3,N4')
    subparser.add_argument('--json', action='store_true')
    subparser.set_defaults(func=general)

    # 'table'
    subparser = subparsers.add_parser('table')
    _geometry(subparser)
    subparser.add_argument('--max-n3', type=count, required=True)
    subparser.add_argument('--format', choices=['text', 'csv', 'json',
                                                'yaml'])
    subparser.set_defaults(func=table)

    # 'contact'
    subparser = subparsers.add_parser('contact')
    _geometry(subparser)
    subparser.add_argument('--json', action='store_true')
    subparser.set_defaults(func=contact)

    # 'verify'
    subparser = subparsers.add_parser('verify')
    subparser.add_argument('--suite', choices=SUITES + ('all',),
                           required=True)
    subparser.add_argument('--delta', type=intlist)
    subparser.add_argument('--q-max', type=count)
    subparser.add_argument('--y-max', type=count)
    subparser.add_argument('--k-max', type=count)
    subparser.add_argument('--d-max', type=count)
    subparser.add_argument('--samples', type=count)
    subparser.add_argument('--seed', type=count)
    subparser.add_argument('--format', choices=['text', 'json', 'yaml'])
    subparser.add_argument('--json', action='store_true')
    subparser.set_defaults(func=verify)

    # 'cache'
    subparser = subparsers.add_parser('cache')
    subparser.add_argument('action', choices=['export', 'import'])
    subparser.add_argument('--file', required=True)
    subparser.add_argument('--delta', type=count)
    subparser.add_argument('--degree-max', type=count)
    subparser.add_argument('--max-n3', type=count)
    subparser.set_defaults(func=cache)

    return parser


def main(argv=None):
    """Main program."""

    parser = make_parser()
    args = parser.parse_args(argv)

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose,
                                                      logging.DEBUG)
    logging.basicConfig(stream=util.STDERR, level=level,
                        format='%(name)s:%(levelname)s:%(message)s')

    if not hasattr(args, 'func'):
        parser.print_help()
        return

    # Call whatever function was selected
    store = MemoStore()
    status = 0
    try:
        util.getconfig()
        if args.load:
            import_cache(store, args.load)
        status = args.func(args, store) or 0
        if args.save and status == 0:
            export_cache(store, args.save)
    except RootGWError as e:
        util.error(str(e), e.errno)
    except RecursionError:
        util.error('Interpreter stack exhausted.', InternalError.errno)

    if status:
        sys.exit(status)

if __name__ == '__main__':
    main()
