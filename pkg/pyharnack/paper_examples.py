# -*- coding: utf-8 -*-
"""Published numerical witnesses, embedded with their expected values.

Each `PaperExample` knows how to compute its quantities; `evaluate` turns the
computed values into `Check` records. Four-decimal values of the lower-bound
matrix must agree to an absolute 1e-4. The resolvent-eigenvalue matrix is a
rounded printout of an unpublished one, so its values carry 1e-3 relative.
Exact values carry 1e-12.
"""
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .conjectures import loewner_counterexample_check, remark33_check, resolvent_spectrum
from .harnack import (eigen_bound_J0, harnack_quotient, naive_lower_bound_check,
                      upper_bound_family)
from .linalg import (general_eigenvalues, hermitian_eigenvalues, inverse,
                     real_part, singular_values)
from .matrix import ComplexMatrix
from .report import Check, RunReport

PRINTED_TOL = 1e-3
FOUR_PLACE_TOL = 1e-4
EXACT_TOL = 1e-12


@dataclass(frozen=True)
class Expected(object):
    """One expected value. relation is '==', '<', '>', '<=', '>=' or 'is'.
    """
    name: str
    value: object
    tolerance: float
    relation: str = '=='
    relative: bool = True

    def scaled_tolerance(self):
        if not self.relative:
            return self.tolerance
        if isinstance(self.value, (bool, np.bool_)) or self.relation in ('<', '>', 'is'):
            return self.tolerance
        if isinstance(self.value, complex):
            return self.tolerance * max(1.0, abs(self.value))
        return self.tolerance * max(1.0, abs(float(self.value)))


@dataclass(frozen=True)
class PaperExample(object):
    id: str
    source: str
    compute: object
    expected: tuple
    matrix: tuple = None
    singular_values: tuple = None

    def as_matrix(self):
        return ComplexMatrix(np.array(self.matrix, dtype=complex))


def _printed(name, value):
    return Expected(name, value, PRINTED_TOL)


def _four_places(name, value):
    return Expected(name, value, FOUR_PLACE_TOL, relative=False)


def _exact(name, value):
    return Expected(name, value, EXACT_TOL)


def _flag(name, value=True):
    return Expected(name, value, 0.0, 'is')


# ----------------------------------------------------- 3x3, lower bound ---

NAIVE_LOWER_MATRIX = (
    (0.4831, 0.2041, 0.0447),
    (0.4689, 0.3308, 0.3671),
    (0.1308, 0.2583, 0.4787),
)


def _naive_lower(example):
    a = example.as_matrix()
    r = singular_values(a)
    lam_re = resolvent_spectrum(a)
    lam_h = hermitian_eigenvalues(harnack_quotient(a))
    row3 = naive_lower_bound_check(a)[2]
    out = {}
    for j in range(3):
        out['sigma_%d' % (j + 1)] = r[j]
        out['re_resolvent_eig_%d' % (j + 1)] = lam_re[j]
        out['harnack_eig_%d' % (j + 1)] = lam_h[j]
    out['re_resolvent_3_below_1/(1+r3)'] = lam_re[2] < 1 / (1 + r[2])
    out['naive_bound_3'] = row3.naive_bound
    out['naive_bound_3_violated'] = row3.violated
    out['valid_bound_3'] = row3.jby_bound
    out['valid_bounds_hold'] = all(row.valid_holds for row in naive_lower_bound_check(a))
    out['upper_bound_j_holds'] = all(row.holds for row in eigen_bound_J0(a))
    return out


# --------------------------------------------------- 2x2 nilpotent --------

NILPOTENT_MATRIX = ((0.0, 0.1), (0.0, 0.0))


def _max_entry_error(m, target):
    return float(np.max(np.abs(m.asarray() - np.array(target, dtype=complex))))


def _nilpotent(example):
    a = example.as_matrix()
    rep = loewner_counterexample_check(a)
    shifted = hermitian_eigenvalues(real_part(inverse(np.eye(2) - a.asarray()) @ a))[0]
    return {
        'resolvent_sum_error': _max_entry_error(rep.resolvent_sum, [[2, 0.1], [0.1, 2]]),
        'upper_matrix_error': _max_entry_error(rep.upper_matrix, [[2, 0], [0, 20 / 9]]),
        'harnack_quotient_error': _max_entry_error(harnack_quotient(a), [[1, 0.1], [0.1, 1]]),
        'upper_order_holds': rep.upper_holds,
        'lower_order_holds': rep.lower_holds,
        'shifted_resolvent_eig_1': shifted,
    }


# ------------------------------------------------------ R witnesses -------

def _witness(names, indices):
    def compute(example):
        upper = upper_bound_family(example.singular_values, indices)
        out = {name: upper[name] for name in names}
        out['R2>R3'] = upper['R2'] > upper['R3']
        out['R2<R3<R4'] = upper['R2'] < upper['R3'] < upper['R4']
        out['R3>R4'] = upper['R3'] > upper['R4']
        return out
    return compute


# ------------------------------------------------------ resolvent eig -----

RESOLVENT_EIG_MATRIX = (
    (-0.2007, 0.0263, -0.4910),
    (0.5055, -0.2419, 0.5709),
    (0.3799, 0.1640, -0.3848),
)


def _resolvent_eig(example):
    a = example.as_matrix()
    rep = remark33_check(a)
    eigs = general_eigenvalues(a)
    r = singular_values(a)
    out = {'eigenvalue_%d' % (j + 1): complex(eigs[j]) for j in range(3)}
    out.update({'sigma_%d' % (j + 1): r[j] for j in range(3)})
    out['max_re_resolvent'] = rep.max_re_resolvent
    out['threshold'] = rep.threshold
    out['norm_value'] = rep.norm_value
    out['max_re_resolvent<threshold'] = rep.max_re_resolvent < rep.threshold
    return out


def corpus():
    """The embedded examples, in reporting order.
    """
    half = Fraction(1, 2)
    examples = (
        PaperExample(
            id='remark-2.2-3x3',
            source='Remark on lower bounds: naive reversal (1-r_j)/(1+r_j) fails',
            compute=_naive_lower,
            matrix=NAIVE_LOWER_MATRIX,
            expected=(
                _four_places('sigma_1', 0.9468), _four_places('sigma_2', 0.3969),
                _four_places('sigma_3', 0.0049),
                _four_places('re_resolvent_eig_1', 9.9860),
                _four_places('re_resolvent_eig_2', 1.5616),
                _four_places('re_resolvent_eig_3', 0.7789),
                _four_places('harnack_eig_1', 18.9720),
                _four_places('harnack_eig_2', 2.1232),
                _four_places('harnack_eig_3', 0.5578),
                _flag('re_resolvent_3_below_1/(1+r3)'),
                _four_places('naive_bound_3', 0.9902),
                _flag('naive_bound_3_violated'),
                _four_places('valid_bound_3', 0.0273),
                _flag('valid_bounds_hold'),
                _flag('upper_bound_j_holds'),
            )),
        PaperExample(
            id='sec3-2x2-nilpotent',
            source='Loewner-order strengthening fails for A = [[0, 0.1], [0, 0]]',
            compute=_nilpotent,
            matrix=NILPOTENT_MATRIX,
            expected=(
                _exact('resolvent_sum_error', 0.0),
                _exact('upper_matrix_error', 0.0),
                _exact('harnack_quotient_error', 0.0),
                _flag('upper_order_holds', False),
                _flag('lower_order_holds', False),
                _exact('shifted_resolvent_eig_1', 0.05),
            )),
        PaperExample(
            id='R-witness-1',
            source='R2 and R3 are incomparable: r = (1/2, 1/2, 0, 0), i = (3)',
            compute=_witness(('R2', 'R3'), (3,)),
            singular_values=(half, half, Fraction(0), Fraction(0)),
            expected=(_exact('R2', Fraction(3)), _exact('R3', Fraction(1)),
                      _flag('R2>R3'))),
        PaperExample(
            id='R-witness-2',
            source='R2 < R3 < R4: r = (1/2, 9/20, 0, 0), i = (2)',
            compute=_witness(('R2', 'R3', 'R4'), (2,)),
            singular_values=(half, Fraction(9, 20), Fraction(0), Fraction(0)),
            expected=(_exact('R2', Fraction(3)), _exact('R3', Fraction(400, 121)),
                      _exact('R4', Fraction(4)), _flag('R2<R3<R4'))),
        PaperExample(
            id='R-witness-3',
            source='R3 and R4 are incomparable: r = (1/2, 1/2, 1/2, 0, 0), i = (2, 3)',
            compute=_witness(('R3', 'R4'), (2, 3)),
            singular_values=(half, half, half, Fraction(0), Fraction(0)),
            expected=(_exact('R3', Fraction(16)), _exact('R4', Fraction(12)),
                      _flag('R3>R4'))),
        PaperExample(
            id='remark-3.3-3x3',
            source='No eigenvalue of A reaches Re(1/(1-lambda)) >= 1/(1+r_n)',
            compute=_resolvent_eig,
            matrix=RESOLVENT_EIG_MATRIX,
            expected=(
                _printed('eigenvalue_1', complex(-0.5309, 0)),
                _printed('eigenvalue_2', complex(-0.1482, 0.3451)),
                _printed('eigenvalue_3', complex(-0.1482, -0.3451)),
                _printed('sigma_1', 0.9554), _printed('sigma_2', 0.5556),
                _printed('sigma_3', 0.1411),
                _printed('max_re_resolvent', 0.7988),
                _printed('threshold', 0.8763),
                _printed('norm_value', 1.0301),
                _flag('max_re_resolvent<threshold'),
            )),
    )
    ids = [ex.id for ex in examples]
    assert len(set(ids)) == len(ids), "duplicate example ids"
    return examples


def get_example(example_id):
    for ex in corpus():
        if ex.id == example_id:
            return ex
    raise KeyError("No example with id %r." % example_id)


def evaluate(example, tolerance=None):
    """Compute *example* and compare every expected value.

    Parameters
    ----------
    tolerance : float, optional
        Replaces every numeric tolerance (flags are unaffected).

    Returns
    -------
    list of Check
    """
    try:
        computed = example.compute(example)
    except Exception as exc:
        return [Check.failure('%s:%s' % (example.id, e.name),
                              '%s: %s' % (type(exc).__name__, exc))
                for e in example.expected]
    checks = []
    for exp in example.expected:
        if tolerance is not None and exp.relation != 'is':
            exp = replace(exp, tolerance=tolerance)
        value = computed[exp.name]
        if exp.relation == 'is':
            value = bool(value)
        elif isinstance(exp.value, complex) or isinstance(value, complex):
            value = complex(value)
        elif isinstance(exp.value, Fraction) and isinstance(value, Fraction):
            # exact comparison; the difference is reported
            pass
        else:
            value = float(value)
        checks.append(Check.compare('%s:%s' % (example.id, exp.name), value,
                                    exp.value, exp.scaled_tolerance(),
                                    exp.relation, example.source))
    return checks


def repro_paper(tolerance=None, command=None):
    """Evaluate the whole corpus into one RunReport.
    """
    report = RunReport(command=command or {'command': 'repro-paper'})
    for ex in corpus():
        report.extend(evaluate(ex, tolerance))
    return report.finish()
