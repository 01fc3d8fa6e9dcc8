"""conftest.py - pytest configuration for rootgw"""

# Copyright 2026 The rootgw contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, version 3.


def pytest_configure(config):
    """Registers the markers."""
    config.addinivalue_line('markers',
                            'slow: associativity and relation sweeps')
