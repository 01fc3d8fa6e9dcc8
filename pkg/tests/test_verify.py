#! /usr/bin/env python3

# Copyright 2026 The rootgw contributors
#
# This file is part of rootgw, distributed under the terms of the GNU
# General Public License version 3.

import json

from fractions import Fraction

import pytest
import yaml

from rootgw.engine import GeometryConfig, InvariantKey, MemoStore
from rootgw.util import UsageError
from rootgw.verify import SuiteReport, lambda_k, render_report, report_dict
from rootgw.verify import check_line_closed_form, check_conic_closed_form
from rootgw.verify import check_degree1_bases, check_pinned_values
from rootgw.verify import cross_check, check_cross, check_contact
from rootgw.verify import check_relations, check_wdvv
from rootgw.verify import check_degree_zero, check_guards, run_suite


def test_lambda_k():
    assert lambda_k(0) == Fraction(1, 2)
    assert lambda_k(1) == Fraction(-1, 4)
    assert lambda_k(2) == Fraction(1, 4)
    assert lambda_k(3) == Fraction(-3, 8)
    assert lambda_k(4) == Fraction(3, 4)
    with pytest.raises(UsageError):
        lambda_k(-1)


def test_suite_report():
    report = SuiteReport('demo')
    assert report.passed
    report.add('one', 1, Fraction(2, 2))
    assert report.passed
    report.add('two', Fraction(1, 2), Fraction(1, 3))
    assert not report.passed
    assert report.failures() == [('two', Fraction(1, 2), Fraction(1, 3),
                                  False)]


def test_closed_forms():
    store = MemoStore()
    report = check_line_closed_form(store, 5)
    assert report.passed and len(report.cases) == 6
    report = check_conic_closed_form(store, 2)
    assert report.passed and len(report.cases) == 3


def test_bases():
    report = check_degree1_bases(MemoStore(), 5)
    assert report.passed
    assert len(report.cases) == 2 + 4*3


def test_pinned():
    report = check_pinned_values(MemoStore())
    assert report.passed
    assert len(report.cases) == 1 + 4 + 10


def test_cross_check():
    store = MemoStore()
    report = cross_check(store, GeometryConfig(1), InvariantKey(1, 0, 0, 3))
    assert report.passed and len(report.cases) == 2
    report = cross_check(store, GeometryConfig(3), InvariantKey(1, 2, 3, 0))
    assert report.passed and not report.cases
    report = cross_check(store, GeometryConfig(3), InvariantKey(1, 1, 2, 1))
    assert report.passed
    with pytest.raises(UsageError):
        cross_check(store, GeometryConfig(1), InvariantKey(1, 0, 0, 2))


def test_cross_sweep():
    report = check_cross(MemoStore(), [1, 2], 2, 3, 6)
    assert report.passed and report.cases


def test_contact():
    report = check_contact(MemoStore(), [1, 2], 2)
    assert report.passed and report.cases


def test_relations():
    report = check_relations(MemoStore(), [1], 2, 4)
    assert report.passed
    assert len(report.cases) == 4*2


@pytest.mark.slow
def test_wdvv():
    report = check_wdvv(MemoStore(), [1], 1, 3)
    assert report.passed
    assert len(report.cases) == 15 + 125


def test_degree_zero():
    report = check_degree_zero(MemoStore(), [1, 4])
    assert report.passed


def test_guards():
    store = MemoStore()
    report = check_guards(store, 200, 7)
    assert report.passed and len(report.cases) == 200
    assert len(store) == 0
    assert check_guards(MemoStore(), 200, 7).cases == report.cases


def test_run_suite():
    store = MemoStore()
    report = run_suite(store, 'closed-forms', {'k_max': 2})
    assert report.name == 'closed-forms'
    assert report.passed and len(report.cases) == 6
    with pytest.raises(UsageError):
        run_suite(store, 'nothing')


def test_render_report():
    report = SuiteReport('demo')
    report.add('one', 1, 1)
    report.add('two', Fraction(1, 2), Fraction(-1, 4))
    assert render_report(report, 'text') == [
        'Checking one... ', 'OK.\n',
        'Checking two... ', 'FAILED (expected 1/2, got -1/4).\n',
        'Suite demo: 1 of 2 cases passed.\n']

    data = json.loads(''.join(render_report(report, 'json')))
    assert data == report_dict(report)
    assert data['passed'] is False
    assert data['cases'][1] == {'description': 'two', 'expected': '1/2',
                                'actual': '-1/4', 'passed': False}
    assert yaml.safe_load(''.join(render_report(report, 'yaml'))) == data

    with pytest.raises(UsageError):
        render_report(report, 'csv')
