# -*- coding: utf-8 -*-
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyharnack import (ComplexMatrix, DomainViolation, InvalidIndexSet, Mode,
                       NotContractive, NotUnitary, RandomSpec, SingularMatrix,
                       random_matrix)
from pyharnack.harnack import (LATTICE, bound_report, bound_reports,
                               determinant_consistency, eigen_bound_J0,
                               fan_operator_check, harnack_quotient, identity_residuals,
                               lattice_checks, lower_bound_family, multi_matrix_bound,
                               naive_lower_bound_check, require_contraction, tung_check,
                               upper_bound_family)
from pyharnack.indexset import all_index_sets, index_sets
from pyharnack.linalg import hermitian_eigenvalues, identity, singular_values
from pyharnack.paper_examples import NAIVE_LOWER_MATRIX
from pyharnack.sampling import random_unitary, rng_for


def contraction(seed, n=None, mode=None):
    rng = rng_for(seed, 99)
    n = n or int(rng.integers(1, 6))
    mode = mode or list(Mode)[seed % len(Mode)]
    return random_matrix(RandomSpec(n, mode, float(rng.uniform(0.1, 0.95)), seed=seed))


def suite_matrix(seed):
    """Mixed-mode strict contraction with n in 2..6."""
    return contraction(seed, n=2 + seed % 5)


def test_quotient():
    a = ComplexMatrix([[0, 0.1], [0, 0]])
    assert harnack_quotient(a).allclose([[1, 0.1], [0.1, 1]], atol=1e-15)
    assert harnack_quotient(np.zeros((3, 3))) == identity(3)
    h = harnack_quotient(ComplexMatrix.diag([0.5, -0.5]))
    assert h.allclose(np.diag([3, 1 / 3.]), atol=1e-14)
    assert harnack_quotient(contraction(3)).is_hermitian(tol=0)
    with pytest.raises(SingularMatrix):
        harnack_quotient(identity(2))


def test_identities():
    for seed in range(1000):
        res = identity_residuals(suite_matrix(seed))
        assert res.exp3 is not None
        assert res.within(1e-10), (seed, res)


def test_identities_noncontractive():
    for seed in range(1000):
        a = contraction(seed, n=2 + seed % 5, mode=Mode.GAUSSIAN)
        a = a * (1.5 / singular_values(a)[0])
        res = identity_residuals(a)
        assert res.exp3 is None
        assert res.within(1e-10), (seed, res)

    res = identity_residuals(2 * np.eye(2))
    assert res.exp3 is None
    assert res.note.startswith('NotContractive')
    assert res.expz < 1e-14 and res.fan < 1e-14
    assert set(res.as_dict()) == {'expz', 'exp2', 'fan', 'exp3'}


def test_tung():
    z = 0.5 * np.eye(2)
    right = tung_check(z, np.eye(2))
    assert right.equality_side == 'right'
    assert right.middle == pytest.approx(9)
    assert right.holds
    left = tung_check(z, -np.eye(2))
    assert left.equality_side == 'left'
    assert left.middle == pytest.approx(1 / 9.)
    both = tung_check(np.zeros((3, 3)), random_unitary(3, rng_for(1)))
    assert both.equality_side == 'both'
    assert both.lower == both.upper == 1

    for seed in range(1000):
        z = suite_matrix(seed)
        rep = tung_check(z, random_unitary(z.n, rng_for(seed, 1)))
        assert rep.holds
        assert rep.to_dict()['holds']

    with pytest.raises(NotUnitary):
        tung_check(z, 2 * np.eye(z.n))
    with pytest.raises(NotContractive):
        tung_check(np.eye(2), np.eye(2))


def test_require_contraction():
    assert require_contraction(np.diag([0.5, 0.25]))[0] == 0.5
    with pytest.raises(NotContractive):
        require_contraction(np.diag([0.9999999, 0]))
    require_contraction(np.diag([0.9999999, 0]), margin=1e-8)


def test_eigen_bound():
    for seed in range(1000):
        rows = eigen_bound_J0(suite_matrix(seed))
        assert all(row.holds for row in rows)
        assert [row.j for row in rows] == list(range(1, len(rows) + 1))
    # normal matrices attain the bound for lambda_1
    rows = eigen_bound_J0(np.diag([0.5, 0.2]))
    assert rows[0].eigenvalue == pytest.approx(rows[0].bound)


def test_bound_families_exact():
    half = Fraction(1, 2)
    up = upper_bound_family((half, half, Fraction(0), Fraction(0)), (3,))
    assert up['R2'] == 3 and up['R3'] == 1
    up = upper_bound_family((half, Fraction(9, 20), Fraction(0), Fraction(0)), (2,))
    assert (up['R2'], up['R3'], up['R4']) == (3, Fraction(400, 121), 4)
    up = upper_bound_family((half, half, half, Fraction(0), Fraction(0)), (2, 3))
    assert (up['R3'], up['R4']) == (16, 12)
    assert all(isinstance(v, Fraction) for v in up.values())

    low = lower_bound_family((half, Fraction(1, 4)), (1, 2))
    assert low['fan_lower'] == Fraction(1, 3) * Fraction(3, 5)
    assert low['Jb'] == low['Jb_swapped']
    assert low['JbY'] == Fraction(3, 4) ** 2 / (Fraction(9, 4) * Fraction(25, 16))


def test_bound_reports():
    for seed in range(1000):
        a = suite_matrix(seed)
        sets = index_sets(a.n, rng=rng_for(seed, 1))
        for rep in bound_reports(a, sets, matrix_id=str(seed)):
            assert rep.passed, rep.to_dict()
            assert all(rep.slacks[k] >= -1e-8 * (1 + rep.upper_bounds[k])
                       for k in rep.upper_bounds)
            assert set(rep.lattice) == {'%s<=%s' % pair for pair in LATTICE}

    rep = bound_report(np.diag([0.5, 0.2]), [1])
    assert rep.lhs == pytest.approx(3)
    assert rep.upper_bounds['R1'] == pytest.approx(3)
    assert rep.lhs_lower == pytest.approx(1.5)
    assert rep.lower_bounds['Jb'] == pytest.approx(1 / 3.)
    assert rep.to_dict()['index_set'] == {'k': 1, 'indices': [1]}

    with pytest.raises(InvalidIndexSet):
        bound_report(np.diag([0.5, 0.2]), [3])
    with pytest.raises(InvalidIndexSet):
        bound_report(np.diag([0.5, 0.2]), [2, 1])
    with pytest.raises(NotContractive):
        bound_report(np.eye(2), [1])


def test_lattice_detects_disorder():
    upper = {'R1': 5.0, 'R2': 4.0, 'R3': 6.0, 'R4': 7.0, 'R5': 8.0}
    lower = {'Jb': 0.5, 'Jb_swapped': 0.5, 'JbX': 0.1, 'JbY': 0.1, 'fan_lower': 0.4}
    checks = lattice_checks(upper, lower, tol=1e-9)
    assert not checks['R1<=R2']
    assert sum(not v for v in checks.values()) == 1


def test_naive_lower_bound():
    rows = naive_lower_bound_check(np.array(NAIVE_LOWER_MATRIX))
    assert rows[2].violated
    assert not rows[0].violated
    assert all(row.valid_holds for row in rows)
    for seed in range(1000):
        rows = naive_lower_bound_check(suite_matrix(seed))
        assert all(row.valid_holds for row in rows)


def test_fan_operator():
    for seed in range(1000):
        rep = fan_operator_check(suite_matrix(seed))
        assert rep.holds
        assert rep.c_lower * rep.c_upper == pytest.approx(1)
    rep = fan_operator_check(np.diag([0.5, -0.5]))
    assert rep.eig_max == pytest.approx(rep.c_upper)
    assert rep.eig_min == pytest.approx(rep.c_lower)


def test_determinant_consistency():
    for seed in range(1000):
        assert determinant_consistency(suite_matrix(seed)).holds
    rep = determinant_consistency(np.diag([0.5, 0.5]))
    assert rep.determinant_ratio == pytest.approx(9)
    assert rep.eigen_product == pytest.approx(9)


def test_multi_matrix():
    a = np.diag([0.8, 0.6])
    b = np.diag([0.1, 0.2])
    rep = multi_matrix_bound(a, b, [1])
    assert rep.residual < 1e-14
    assert rep.lhs == pytest.approx(2)
    assert rep.rhs == pytest.approx(2)
    assert rep.holds
    rep = multi_matrix_bound(a, b, [1, 2])
    assert rep.lhs == pytest.approx(2 * 0.63 / 0.49)
    assert rep.rhs == pytest.approx(2.8)
    assert rep.holds

    rep = multi_matrix_bound(np.diag([0.9, 0.3]), np.diag([0.5, 0.1]), [1])
    assert rep.rhs == float('inf')
    assert rep.holds

    with pytest.raises(DomainViolation):
        multi_matrix_bound(np.diag([0.5, 0.5]), np.diag([0.6, 0.1]), [1])
    with pytest.raises(SingularMatrix):
        multi_matrix_bound(np.diag([0.5, 0.0]), np.diag([0.1, 0.0]), [1])


def test_multi_matrix_random():
    for seed in range(50):
        a = random_matrix(RandomSpec(3, Mode.PRESCRIBED, prescribed=(0.9, 0.8, 0.7),
                                     seed=seed))
        b = 0.3 * contraction(seed, n=3)
        for s in all_index_sets(3):
            rep = multi_matrix_bound(a, b, s)
            assert rep.residual <= 1e-9 * rep.scale
            assert rep.holds


def test_zero_matrix():
    assert [(row.eigenvalue, row.bound) for row in eigen_bound_J0(np.zeros((3, 3)))] == \
        [(1, 1)] * 3
    rows = naive_lower_bound_check(np.zeros((2, 2)))
    assert [row.naive_bound for row in rows] == [1, 1]
    assert not any(row.violated for row in rows)


def test_multi_matrix_scalar_cases():
    rep = multi_matrix_bound(np.eye(1), np.diag([0.5]), [1])
    assert rep.lhs == pytest.approx(3)
    assert rep.rhs == pytest.approx(3)
    a = random_matrix(RandomSpec(3, Mode.PRESCRIBED, prescribed=(0.9, 0.6, 0.3), seed=4))
    rep = multi_matrix_bound(a, np.zeros((3, 3)), [1, 2, 3])
    assert rep.lhs == pytest.approx(1)
    assert rep.rhs == 1


def test_sampled_index_sets_n6():
    for seed in range(10):
        a = contraction(seed, n=6)
        sets = index_sets(6, rng=rng_for(seed, 1))
        for rep in bound_reports(a, sets):
            assert rep.passed, rep.to_dict()
            assert rep.lhs > 0 and rep.lhs_lower > 0
        assert hermitian_eigenvalues(harnack_quotient(a))[-1] > 0


@settings(max_examples=50, deadline=None)
@given(st.floats(0.0, 0.95), st.floats(-np.pi, np.pi))
def test_scalar_quotient(radius, angle):
    a = radius * np.exp(1j * angle)
    h = harnack_quotient([[a]])[0, 0]
    assert h.real == pytest.approx((1 - radius ** 2) / abs(1 - a) ** 2, rel=1e-12)
    assert h.real == pytest.approx(2 * (1 / (1 - a)).real - 1, rel=1e-12, abs=1e-15)
    assert identity_residuals([[a]]).within(1e-12)
