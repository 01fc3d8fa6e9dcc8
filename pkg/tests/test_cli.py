#! /usr/bin/env python3

# Copyright 2026 The rootgw contributors
#
# This file is part of rootgw, distributed under the terms of the GNU
# General Public License version 3.

import io
import json
import sys

from fractions import Fraction

import yaml

from rootgw import compute, rgw, util, verify
from rootgw.cache import HEADER


def run(monkeypatch, *argv):
    """Runs the main program.  Returns (status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    monkeypatch.setattr(util, 'STDOUT', out)
    monkeypatch.setattr(util, 'STDERR', err)
    monkeypatch.setattr(sys, 'argv', ['rootgw'] + list(argv))
    try:
        rgw.main()
        status = 0
    except SystemExit as e:
        status = e.code
    return status, out.getvalue(), err.getvalue()


def test_compute(monkeypatch):
    assert run(monkeypatch, 'compute', '--delta', '1', '--degree', '4',
               '--n2', '7', '--n3', '0', '--n4', '4') == (0, '416\n', '')
    assert run(monkeypatch, 'compute', '--delta', '1', '--degree', '1',
               '--n2', '0', '--n3', '1', '--n4', '4')[1] == '-1/4\n'
    assert run(monkeypatch, 'compute', '--delta', '2', '--degree', '1',
               '--n2', '0', '--n3', '5', '--n4', '0')[1] == '0\n'


def test_compute_json(monkeypatch):
    status, out, _ = run(monkeypatch, 'compute', '--delta', '2', '--degree',
                         '1', '--n2', '0', '--n3', '5', '--n4', '0', '--json')
    assert status == 0
    assert out == '{"delta":2,"d":1,"n":[0,5,0],"value":"0",' \
      '"admissible":false}\n'

    out = run(monkeypatch, 'compute', '--delta', '3', '--degree', '1',
              '--n2', '2', '--n3', '3', '--n4', '0', '--json')[1]
    assert json.loads(out) == {'delta': 3, 'd': 1, 'n': [2, 3, 0],
                               'value': '6', 'admissible': True}

def test_compute_long_chain(monkeypatch):
    k = 400
    status, out, err = run(monkeypatch, 'compute', '--delta', '1',
                           '--degree', '1', '--n2', '0', '--n3', str(k),
                           '--n4', str(k + 3))
    assert (status, err) == (0, '')
    assert Fraction(out.strip()) == verify.lambda_k(k)


def test_stack_exhaustion(monkeypatch):
    def exhausted(store, cfg, key):
        raise RecursionError('maximum recursion depth exceeded')

    monkeypatch.setattr(compute, 'invariant', exhausted)
    status, out, err = run(monkeypatch, 'compute', '--delta', '1',
                           '--degree', '1', '--n2', '0', '--n3', '0',
                           '--n4', '3')
    assert (status, out) == (3, '')
    assert 'Interpreter stack exhausted.' in err


def test_usage_errors(monkeypatch):
    assert run(monkeypatch, 'compute', '--delta', '-1', '--degree', '1',
               '--n2', '0', '--n3', '0', '--n4', '3')[0] == 2
    assert run(monkeypatch, 'compute', '--delta', '1', '--degree', '1',
               '--n2', '0', '--n3', 'x', '--n4', '3')[0] == 2
    status, out, err = run(monkeypatch, 'compute', '--delta', '0',
                           '--degree', '1', '--n2', '0', '--n3', '0',
                           '--n4', '3')
    assert status == 2 and out == ''
    assert 'delta must be a positive integer' in err
    assert 'Exiting (2).' in err
    assert run(monkeypatch, 'compute', '--delta', '1', '--degree', '0',
               '--n2', '0', '--n3', '0', '--n4', '3')[0] == 2


def test_general(monkeypatch):
    assert run(monkeypatch, 'general', '--delta', '3', '--degree', '1',
               '--n', '0,1,2,3,0')[1] == '6\n'
    assert run(monkeypatch, 'general', '--delta', '4', '--degree', '0',
               '--n', '0,1,0,2,0')[1] == '2\n'
    assert run(monkeypatch, 'general', '--delta', '2', '--degree', '0',
               '--n', '0,0,0,3,1')[1] == '-1/4\n'
    out = run(monkeypatch, 'general', '--delta', '2', '--degree', '0',
              '--n', '0,0,0,3,1', '--json')[1]
    assert json.loads(out) == {'delta': 2, 'd': 0, 'n': [0, 0, 0, 3, 1],
                               'value': '-1/4', 'admissible': True}
    assert run(monkeypatch, 'general', '--delta', '2', '--degree', '0',
               '--n', '1,1,0,0,0')[0] == 2
    assert run(monkeypatch, 'general', '--delta', '2', '--degree', '1',
               '--n', '1,2')[0] == 2


def test_table(monkeypatch):
    status, out, _ = run(monkeypatch, 'table', '--delta', '1', '--degree',
                         '1', '--max-n3', '1')
    assert status == 0
    assert out == 'delta,d,n2,n3,n4,value,admissible\n' \
      '1,1,1,0,1,1,true\n' \
      '1,1,0,0,3,1/2,true\n' \
      '1,1,2,1,0,1,true\n' \
      '1,1,1,1,2,0,true\n' \
      '1,1,0,1,4,-1/4,true\n'

    out = run(monkeypatch, 'table', '--delta', '3', '--degree', '1',
              '--max-n3', '3', '--format', 'json')[1]
    rows = {tuple(row['n']): row['value'] for row in json.loads(out)}
    assert rows[(2, 3, 0)] == '6'
    assert (1, 2, 1) in rows

    out = run(monkeypatch, 'table', '--delta', '6', '--degree', '1',
              '--max-n3', '0', '--format', 'yaml')[1]
    assert all(row['n'][1] == 0 for row in yaml.safe_load(out))

    out = run(monkeypatch, 'table', '--delta', '1', '--degree', '1',
              '--max-n3', '0', '--format', 'text')[1]
    assert out == 'delta=1 I_1(1, 0, 1) = 1\ndelta=1 I_1(0, 0, 3) = 1/2\n'

    assert run(monkeypatch, 'table', '--delta', '1', '--degree', '1')[0] == 2


def test_table_deterministic(monkeypatch):
    first = run(monkeypatch, 'table', '--delta', '2', '--degree', '2',
                '--max-n3', '2')
    assert run(monkeypatch, 'table', '--delta', '2', '--degree', '2',
               '--max-n3', '2') == first


def test_contact(monkeypatch):
    status, out, _ = run(monkeypatch, 'contact', '--delta', '1', '--degree',
                         '4')
    assert status == 0
    assert 'a=4 b=0 I_4(7, 0, 4) = 416\n' in out
    out = run(monkeypatch, 'contact', '--delta', '2', '--degree', '1',
              '--json')[1]
    data = json.loads(out)
    assert data['delta'] == 2 and data['d'] == 1
    assert data['contacts'][0] == {'a': 0, 'b': 0, 'n': [2, 2, 0],
                                   'value': '2'}


def test_verify(monkeypatch):
    status, out, _ = run(monkeypatch, 'verify', '--suite', 'closed-forms',
                         '--k-max', '2')
    assert status == 0
    assert out.startswith('Checking delta=1 I_1(0, 0, 3)... OK.\n')
    assert out.endswith('Suite closed-forms: 6 of 6 cases passed.\n')

    status, out, _ = run(monkeypatch, 'verify', '--suite', 'pinned', '--json')
    assert status == 0
    assert json.loads(out)['passed'] is True

    status, out, _ = run(monkeypatch, 'verify', '--suite', 'bases',
                         '--delta', '3', '--format', 'yaml')
    assert status == 0
    assert yaml.safe_load(out)['suite'] == 'bases'

    assert run(monkeypatch, 'verify', '--suite', 'bogus')[0] == 2
    assert run(monkeypatch, 'verify')[0] == 2


def test_verify_failure(monkeypatch):
    monkeypatch.setattr(verify, 'lambda_k', lambda k: Fraction(0))
    status, out, _ = run(monkeypatch, 'verify', '--suite', 'closed-forms',
                         '--k-max', '0')
    assert status == 1
    assert 'FAILED (expected 0, got 1/2).' in out


def test_cache(monkeypatch, tmp_path):
    path = str(tmp_path / 'cache.tsv')
    status, out, _ = run(monkeypatch, 'cache', 'export', '--file', path,
                         '--delta', '1', '--degree-max', '2', '--max-n3', '2')
    assert status == 0
    count = int(out.split()[1])
    assert out == 'Exported %d entries to %s.\n' % (count, path)
    with open(path, encoding='utf-8') as f:
        assert f.readline() == HEADER + '\n'

    assert run(monkeypatch, 'cache', 'import', '--file', path)[1] == \
      'Imported %d entries from %s.\n' % (count, path)

    cold = run(monkeypatch, 'table', '--delta', '1', '--degree', '2',
               '--max-n3', '2')
    assert run(monkeypatch, '--load', path, 'table', '--delta', '1',
               '--degree', '2', '--max-n3', '2') == cold


def test_load_and_save(monkeypatch, tmp_path):
    seeded = tmp_path / 'seeded.tsv'
    seeded.write_text(HEADER + '\n1\t1\t0\t0\t3\t1/3\n', encoding='utf-8')
    assert run(monkeypatch, '--load', str(seeded), 'compute', '--delta', '1',
               '--degree', '1', '--n2', '0', '--n3', '0', '--n4', '3')[1] == \
      '1/3\n'

    saved = str(tmp_path / 'saved.tsv')
    assert run(monkeypatch, '--save', saved, 'compute', '--delta', '1',
               '--degree', '1', '--n2', '0', '--n3', '0', '--n4', '3')[0] == 0
    with open(saved, encoding='utf-8') as f:
        assert f.read() == HEADER + '\n1\t1\t0\t0\t3\t1/2\n' \
          '1\t1\t1\t0\t1\t1\n'

    status, _, err = run(monkeypatch, '--load', str(seeded), 'cache',
                         'import', '--file', saved)
    assert status == 3
    assert 'Conflicting values' in err


def test_malformed_cache(monkeypatch, tmp_path):
    bad = tmp_path / 'bad.tsv'
    bad.write_text(HEADER + '\n1\t1\t0\t0\t3\t2/4\n', encoding='utf-8')
    status, _, err = run(monkeypatch, 'cache', 'import', '--file', str(bad))
    assert status == 2
    assert 'lowest terms' in err
