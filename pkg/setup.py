"""setup.py - install script for rootgw"""

# Copyright 2026 The rootgw contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import sys

from setuptools import setup

DESCRIPTION = """Exact genus 0 Gromov-Witten invariants of the square root
stack of the projective plane along a smooth curve."""

VERSION = '0.1'

# Check the python version
if sys.version_info < (3, 8):
    print('Python >= 3.8 required.  Exiting.')
    sys.exit(1)

setup(
    name='rootgw',
    version=VERSION,

    author='The rootgw contributors',
    description=DESCRIPTION,
    long_description=DESCRIPTION,
    license='GPL',
    keywords='gromov-witten root stack wdvv quantum cohomology',

    install_requires=['pyyaml'],
    extras_require={'test': ['pytest']},

    packages=['rootgw'],

    entry_points={'console_scripts':['rootgw = rootgw.rgw:main']},

    include_package_data = True,
    package_data = {'rootgw': ['data/config.ini']},

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Environment :: Console',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics'
        ],
)
