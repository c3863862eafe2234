# -*- coding: utf-8 -*-
import json
from dataclasses import replace
from fractions import Fraction

import pytest

from pyharnack.paper_examples import (EXACT_TOL, FOUR_PLACE_TOL, PRINTED_TOL, Expected,
                                      corpus, evaluate, get_example, repro_paper)
from pyharnack.report import Check, RunReport, dumps, format_value, to_jsonable


def test_corpus():
    ids = [ex.id for ex in corpus()]
    assert ids == ['remark-2.2-3x3', 'sec3-2x2-nilpotent', 'R-witness-1',
                   'R-witness-2', 'R-witness-3', 'remark-3.3-3x3']
    assert get_example('R-witness-2').singular_values[1] == Fraction(9, 20)
    with pytest.raises(KeyError):
        get_example('missing')


@pytest.mark.parametrize('example', corpus(), ids=lambda ex: ex.id)
def test_example_reproduces(example):
    checks = evaluate(example)
    assert len(checks) == len(example.expected)
    failed = [c for c in checks if not c.passed]
    assert not failed, failed


def test_repro_paper():
    report = repro_paper()
    assert report.passed, report.failures
    assert report.command == {'command': 'repro-paper'}
    assert report.duration > 0
    assert 'repro-paper: PASS' in report.render_table()


def test_tight_tolerance_fails():
    checks = evaluate(get_example('remark-2.2-3x3'), tolerance=1e-12)
    assert not all(c.passed for c in checks)
    # flags do not depend on the tolerance
    assert all(c.passed for c in checks if c.relation == 'is')
    # exact witnesses survive any tolerance
    assert all(c.passed for c in evaluate(get_example('R-witness-3'), tolerance=0.0))


def test_expected_tolerance():
    assert Expected('x', 18.972, PRINTED_TOL).scaled_tolerance() == pytest.approx(18.972e-3)
    assert Expected('x', 0.5, PRINTED_TOL).scaled_tolerance() == PRINTED_TOL
    assert Expected('x', True, 0.0, 'is').scaled_tolerance() == 0.0
    assert Expected('x', 3j, EXACT_TOL).scaled_tolerance() == pytest.approx(3e-12)
    assert Expected('x', 18.972, FOUR_PLACE_TOL,
                    relative=False).scaled_tolerance() == FOUR_PLACE_TOL


def test_four_place_values_are_absolute():
    ex = get_example('remark-2.2-3x3')
    assert all(not e.relative for e in ex.expected if e.relation == '==')
    assert all(e.relative for e in get_example('remark-3.3-3x3').expected)
    shifted = tuple(replace(e, value=18.985) if e.name == 'harnack_eig_1' else e
                    for e in ex.expected)
    checks = {c.name: c for c in evaluate(replace(ex, expected=shifted))}
    assert not checks['remark-2.2-3x3:harnack_eig_1'].passed
    assert checks['remark-2.2-3x3:harnack_eig_2'].passed
    for check in evaluate(ex):
        if check.relation == '==':
            assert abs(check.computed - check.expected) <= FOUR_PLACE_TOL


def test_broken_example_reports_failures():
    ex = get_example('R-witness-1')

    def boom(example):
        raise ZeroDivisionError('no')
    checks = evaluate(ex.__class__(ex.id, ex.source, boom, ex.expected,
                                   singular_values=ex.singular_values))
    assert len(checks) == len(ex.expected)
    assert all(not c.passed and c.relation == 'error' for c in checks)
    assert checks[0].note.startswith('ZeroDivisionError')


def test_report_json():
    report = repro_paper()
    text = report.to_json()
    obj = json.loads(text)
    assert obj['passed'] is True
    assert obj['n_checks'] == len(report.checks)
    again = RunReport.from_dict(obj)
    assert json.loads(again.to_json()) == obj


def test_jsonable():
    assert to_jsonable(float('inf')) == 'inf'
    assert to_jsonable(-float('inf')) == '-inf'
    assert to_jsonable(float('nan')) == 'nan'
    assert to_jsonable(1 - 2j) == {'re': 1.0, 'im': -2.0}
    assert to_jsonable(Fraction(1, 4)) == 0.25
    assert to_jsonable((1, [2.5])) == [1, [2.5]]
    with pytest.raises(TypeError):
        to_jsonable(object())
    assert dumps({'b': 1, 'a': 2}).index('"a"') < dumps({'b': 1, 'a': 2}).index('"b"')
    assert format_value(None) == '-'
    assert format_value(0.5 + 1j) == '0.5+1i'


def test_check_relations():
    assert Check.compare('x', 1.0, 1.0 + 1e-13, 1e-12).passed
    assert not Check.compare('x', 1.0, 1.1, 1e-12).passed
    assert Check.compare('x', 1.0, 0.5, 0.0, '>').passed
    assert not Check.compare('x', 1.0, 1.0, 0.0, '<').passed
    assert Check.compare('x', 1.0 + 1e-10, 1.0, 1e-9, '<=').passed
    assert not Check.compare('x', None, 1.0, 1.0).passed
    assert Check.compare('x', False, False, 0.0, 'is').passed
    with pytest.raises(ValueError):
        Check.compare('x', 1, 1, 0, '~')
