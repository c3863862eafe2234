# -*- coding: utf-8 -*-
import csv
import logging
from dataclasses import replace

import numpy as np
import pytest

from pyharnack import (ComplexMatrix, Context, InvalidSpec, Mode, NotContractive,
                       RandomSpec, SearchConfig, SingularMatrix, random_matrix,
                       search)
from pyharnack.conjectures import (HISTOGRAM_EDGES, SearchResult, build_histogram,
                                   descend, evaluate_trial, histogram_labels,
                                   j_conjecture_slack, loewner_counterexample_check,
                                   project, remark33_check, resolvent_spectrum,
                                   special_case_check, trial_matrix, weak_bounds_check)
from pyharnack.linalg import singular_values
from pyharnack.sampling import rng_for


def contraction(seed, n=3):
    mode = list(Mode)[seed % len(Mode)]
    return random_matrix(RandomSpec(n, mode, 0.9, seed=seed))


def test_slack_scalar():
    rec = j_conjecture_slack(np.diag([0.5j]))
    assert rec.slacks == pytest.approx([2 / 15.])
    assert rec.min_j == 1
    assert rec.norm_slack == pytest.approx(2 / 15.)
    assert rec.shifted_norm_slack == pytest.approx(2 / 15.)
    rec = j_conjecture_slack(np.zeros((2, 2)))
    assert rec.slacks == [0.0, 0.0]
    assert rec.min_slack == 0.0
    with pytest.raises(NotContractive):
        j_conjecture_slack(np.eye(2))


def test_slack_forms_agree():
    for seed in range(500):
        rec = j_conjecture_slack(contraction(seed))
        assert rec.min_slack == min(rec.slacks)
        assert rec.slacks[rec.min_j - 1] == rec.min_slack
        assert rec.shifted_norm_slack == pytest.approx(rec.slacks[0], abs=1e-10)
        # lambda_j(H) - (1 - r)/(1 + r) is twice the resolvent slack
        assert np.allclose(rec.harnack_slacks, 2 * np.array(rec.slacks),
                           rtol=0, atol=1e-10)
        d = rec.to_dict()
        assert d['matrix']['n'] == 3
        assert d['trial'] is None

    rec = j_conjecture_slack(ComplexMatrix([[0, 0.1], [0, 0]]))
    # H = [[1, .1], [.1, 1]], r = (0.1, 0)
    assert rec.harnack_slacks == pytest.approx([0.1, 0.9 - 0.9 / 1.1], abs=1e-14)
    assert rec.slacks == pytest.approx([0.05, 0.95 - 1 / 1.1], abs=1e-14)


def test_resolvent_spectrum():
    lam = resolvent_spectrum(np.diag([0.5, -0.5]))
    assert lam == pytest.approx([2, 2 / 3.])
    with pytest.raises(SingularMatrix):
        resolvent_spectrum(np.eye(2))


def test_loewner_nilpotent():
    rep = loewner_counterexample_check(ComplexMatrix([[0, 0.1], [0, 0]]))
    assert rep.resolvent_sum.allclose([[2, 0.1], [0.1, 2]], atol=1e-15)
    assert rep.upper_matrix.allclose([[2, 0], [0, 20 / 9.]], atol=1e-14)
    assert rep.lower_matrix.allclose([[2, 0], [0, 20 / 11.]], atol=1e-14)
    assert not rep.upper_holds
    assert not rep.lower_holds
    assert rep.min_eig_upper < 0 and rep.min_eig_lower < 0

    rep = loewner_counterexample_check(np.diag([0.5, 0.2]))
    assert rep.upper_holds and rep.lower_holds


def test_weak_bounds():
    for seed in range(1000):
        rows = weak_bounds_check(contraction(seed, n=1 + seed % 5))
        for row in rows:
            assert all(row.verdict.values()), (seed, row)
        assert 'norm_weak' in rows[0].verdict
        assert all('norm_weak' not in row.verdict for row in rows[1:])
    rows = weak_bounds_check(ComplexMatrix([[0, 0.1], [0, 0]]))
    assert [row.j for row in rows] == [1, 2]


def test_special_cases():
    cases = {c.tag: c for c in special_case_check(np.diag([0.5, -0.3j, 0.1]))}
    assert cases['normal'].applicable and cases['normal'].holds
    assert cases['j=n'].indices == (3,)
    assert not cases['singular-j=1'].applicable

    cases = {c.tag: c for c in special_case_check(ComplexMatrix([[0, 0.1], [0, 0]]))}
    assert not cases['normal'].applicable
    assert cases['singular-j=1'].applicable
    assert all(c.holds for c in cases.values())

    for seed in range(500):
        cases = {c.tag: c for c in special_case_check(contraction(seed, n=2 + seed % 4))}
        assert cases['j=n'].holds, (seed, cases['j=n'])
        assert all(c.holds for c in cases.values())


def test_remark33():
    rep = remark33_check(np.diag([0.5]))
    assert rep.max_re_resolvent == pytest.approx(2)
    assert rep.threshold == pytest.approx(2 / 3.)
    assert rep.sufficient_condition_holds
    rep = remark33_check(np.zeros((3, 3)))
    assert (rep.max_re_resolvent, rep.threshold, rep.norm_value) == (1, 1, 1)
    assert rep.eigenvalues == [0, 0, 0]


def test_search_config():
    cfg = SearchConfig(3, trials=10, modes='hermitian')
    assert cfg.modes == (Mode.HERMITIAN,)
    assert cfg.max_norm == pytest.approx(1 - 2e-6)
    assert cfg.to_dict()['modes'] == ['hermitian']
    assert SearchConfig(2).modes == tuple(Mode)
    for kwds in [dict(n=0), dict(n=2, trials=0), dict(n=2, margin=0.5),
                 dict(n=2, modes=()), dict(n=2, modes=('uniform',)),
                 dict(n=2, prescribed=(0.5,)), dict(n=2, trials='ten'),
                 dict(n=2, workers=0), dict(n=2, descent_scale=0)]:
        with pytest.raises(InvalidSpec):
            SearchConfig(**kwds)
    with pytest.raises(InvalidSpec):
        search({'n': 2})


def test_trial_matrix():
    cfg = SearchConfig(3, trials=50, seed=11, margin=0.01)
    for t in range(50):
        mode, a = trial_matrix(cfg, t)
        assert mode in cfg.modes
        assert singular_values(a)[0] <= 0.98 + 1e-12
        assert trial_matrix(cfg, t)[1] == a
    # a trial does not depend on the trial count
    assert evaluate_trial(cfg, 7).min_slack == evaluate_trial(replace(cfg, trials=8), 7).min_slack


def test_project():
    arr = np.diag([2.0, 0.5])
    assert np.allclose(singular_values(project(arr, 0.1)), [0.8, 0.2])
    small = np.diag([0.1, 0.0])
    assert project(small, 0.1) is small


def test_search_deterministic():
    cfg = SearchConfig(2, trials=40, seed=3, descent_steps=25)
    first = search(cfg)
    second = search(cfg)
    assert first.to_dict() == second.to_dict()
    assert first.trials_completed == 40
    assert first.best.min_slack >= -1e-8
    assert first.descent.steps == 25
    assert first.descent.final_slack <= first.descent.start_slack
    assert not first.violation
    counts = sum(sum(h.values()) for h in first.to_dict()['histogram'].values())
    assert counts == 40


def test_search_workers():
    cfg = SearchConfig(2, trials=12, seed=9)
    serial = search(cfg)
    parallel = search(replace(cfg, workers=2))
    a = serial.to_dict()
    b = parallel.to_dict()
    a['config'].pop('workers')
    b['config'].pop('workers')
    assert a == b
    assert serial.rows == sorted(parallel.rows)


def test_search_prescribed_zero():
    cfg = SearchConfig(3, trials=1, modes=('prescribed',), prescribed=(0, 0, 0))
    result = search(cfg)
    assert result.best.min_slack == 0.0
    assert result.histogram['prescribed-singular-values']['[0, 0.001)'] == 1


def test_violation_reporting(caplog, tmp_path):
    cfg = SearchConfig(2, trials=3, seed=1)
    with caplog.at_level(logging.INFO, logger='pyharnack.conjectures'):
        result = search(cfg)
    assert any('search done' in rec.message for rec in caplog.records)

    fake = replace(result.best, min_slack=-0.5)
    bad = SearchResult(cfg, fake, 3, result.histogram, result.descent, -1e-8)
    assert bad.violation
    assert bad.to_dict()['violation']
    with Context(violation_threshold=-1.0):
        assert not search(cfg).violation

    path = tmp_path / 'trials.csv'
    result.write_csv(str(path))
    with open(str(path)) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ['trial', 'mode', 'min_slack']
    assert [int(r[0]) for r in rows[1:]] == [0, 1, 2]
    assert float(rows[1][2]) == result.rows[0][2]


def test_histogram():
    labels = histogram_labels()
    assert len(labels) == len(HISTOGRAM_EDGES) + 1
    assert labels[0] == '[-inf, -1e-08)'
    assert labels[-1] == '[1, inf)'
    rows = [(0, 'hermitian', -1.0), (1, 'hermitian', -1e-8), (2, 'hermitian', 0.0),
            (3, 'hermitian', 0.05), (4, 'hermitian', 7.0)]
    hist = build_histogram(rows, [Mode.HERMITIAN, Mode.NORMAL])
    assert hist['normal'] == dict.fromkeys(labels, 0)
    h = hist['hermitian']
    assert h['[-inf, -1e-08)'] == 1
    assert h['[-1e-08, 0)'] == 1
    assert h['[0, 0.001)'] == 1
    assert h['[0.01, 0.1)'] == 1
    assert h['[1, inf)'] == 1


def test_descend_noop():
    cfg = SearchConfig(2, trials=1)
    rec = j_conjecture_slack(np.diag([0.5, 0.1]))
    out, log = descend(rec, cfg)
    assert out is rec
    assert log.steps == 0 and log.final_slack == rec.min_slack


def test_weak_bounds_zero():
    for row in weak_bounds_check(np.zeros((3, 3))):
        assert row.resolvent_eigenvalue == 1
        assert row.resolvent_weak == row.resolvent_r1 == row.harnack_r1 == 1
        assert all(row.verdict.values())


def test_special_cases_targeted():
    for seed in range(500):
        normal = random_matrix(RandomSpec(4, Mode.NORMAL, 0.95, seed=seed))
        cases = {c.tag: c for c in special_case_check(normal)}
        assert cases['normal'].applicable and cases['normal'].holds
        singular = random_matrix(RandomSpec(4, Mode.SINGULAR, 0.95, seed=seed))
        cases = {c.tag: c for c in special_case_check(singular)}
        assert cases['singular-j=1'].applicable and cases['singular-j=1'].holds
        assert cases['j=n'].holds
