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

"""util.py - utility functions for rootgw."""

import configparser
import copy
import io
import os
import sys


# Py3 strings are unicode.  Character encoding/decoding is performed
# automatically at stream interfaces.  Set it to UTF-8 with LF line endings
# for all streams so that output is byte-identical across platforms.
STDOUT = io.TextIOWrapper(sys.stdout.buffer, 'utf-8', 'strict', newline='\n')
STDERR = io.TextIOWrapper(sys.stderr.buffer, 'utf-8', 'strict', newline='\n')

# Global data store.  It should not change in a single execution.
CONFIG = None

# Packaged defaults
DEFAULTS = os.path.join(os.path.dirname(__file__), 'data', 'config.ini')


#----------------------------------------------------------------------------
# Errors

class RootGWError(Exception):
    """Base class for rootgw errors.  The errno is the process exit code."""
    errno = 1


class UsageError(RootGWError):
    """Malformed flags, configuration or input files."""
    errno = 2


class InternalError(RootGWError):
    """An invariant of the algorithm was violated.  Always a bug."""
    errno = 3


class CacheConflict(InternalError):
    """An imported value disagrees with a value already in the store."""


#----------------------------------------------------------------------------
# Configuration

def getconfig(key=None):
    """Returns the configuration as a dict.

    key - a single config item to return

    The packaged defaults are read first and a config.ini in the working
    directory, if there is one, is laid over them.
    """

    global CONFIG  # pylint: disable=global-statement
    if CONFIG:
        return CONFIG[key] if key else copy.deepcopy(CONFIG)

    # Read the config.ini files into a dict, discarding the section info
    config = {}
    parser = configparser.ConfigParser()
    parser.read([DEFAULTS, 'config.ini'])
    for section in parser.sections():
        config.update({k:v for k, v in parser.items(section)})

    # Store the config
    sanitycheck(config)
    CONFIG = config

    # Return the config dict or a value if the key is given
    return config[key] if key else copy.deepcopy(config)


def sanitycheck(data):
    """Checks to see if the config data are sane.  Make minor tweaks
    where necessary."""
    for k, v in data.items():
        v = str(v).strip()
        if k in ('table-format', 'verify-format'):
            if v not in ('text', 'csv', 'json', 'yaml'):
                raise UsageError('Bad output format for %s: %s' % (k, v))
        else:  # Everything else is a non-negative integer or a list of them
            tokens = [t.strip() for t in v.split(',')]
            if not all(t.isdigit() for t in tokens):
                raise UsageError('Bad configuration value for %s: %s' % (k, v))
            v = ', '.join(tokens)
        data[k] = v


def getint(key):
    """Returns a single integer config item."""
    return int(getconfig(key))


def getintlist(key):
    """Returns a comma-separated config item as a list of integers."""
    return [int(t) for t in getconfig(key).split(',')]


def resetconfig():
    """Forgets the cached configuration."""
    global CONFIG  # pylint: disable=global-statement
    CONFIG = None


#----------------------------------------------------------------------------
# Output

def write(line, f=None):
    """Writes the line to f.  Does not append a \n to be consistent with
    os.stdout.write()."""
    f = f or STDOUT
    f.write(line)
    f.flush()


def writelines(lines, f=None):
    """Writes the lines to f.  Does not append a \n to be consistent with
    os.stdout.writelines()."""
    f = f or STDOUT
    f.write(''.join(lines))
    f.flush()


def error(msg, errno=1):
    """Prints an error message to stderr and exits."""
    writelines(['\n', msg, '\n\nExiting (%d).\n\n'%errno], f=STDERR)
    sys.exit(errno)


def rational(value):
    """Renders an exact value as 'p/q' with q > 1, or as the bare 'p'."""
    # Fraction.__str__ is already canonical: reduced, sign on the numerator,
    # and never 'p/1'.
    return str(value)
