# -*- coding: utf-8 -*-
"""Cayley transforms C(X) = (X - iI)(X + iI)^-1 and their singular value bounds.

The lower end of the difference chain uses (1 + sigma_j) denominators:

    prod 2 s_{i_j}(A-B) / ((1 + s_j(A))(1 + s_j(B)))
        <= prod s_{i_j}(C(A) - C(B))
        <= prod 2 s_{i_j}(A-B) / ((1 - s_j(A))(1 - s_j(B)))

which is what sigma_{n-j+1}((X + iI)^-1) >= 1/(1 + sigma_j(X)) gives. Reports
label it ``lower_form = 'corrected'``.
"""
from dataclasses import dataclass, field

import numpy as np

from .context import geq, leq, resolve
from .errors import NotHermitian
from .harnack import require_contraction
from .indexset import IndexSet
from .linalg import frobenius_norm, inverse, singular_values, unitarity_defect
from .matrix import ComplexMatrix, as_array

FACTOR_TOL = 1e-10


def cayley(x):
    """(X - iI)(X + iI)^-1.

    Raises
    ------
    SingularMatrix
        When X + iI fails the LU pivot test (-i is an eigenvalue of X).
    """
    arr = as_array(x)
    eye = np.eye(arr.shape[0])
    return ComplexMatrix((arr - 1j * eye) @ inverse(arr + 1j * eye).asarray())


@dataclass
class CayleyReport(object):
    """One partial singular value product of a Cayley transform (or of the
    difference of two) between its lower and upper bounds.
    """
    index_set: IndexSet
    lhs: float
    lower: float
    upper: float
    verdict: dict
    lower_form: str = 'standard'
    residual: float = None

    @property
    def passed(self):
        return all(self.verdict.values())

    def to_dict(self):
        out = {'index_set': self.index_set.to_dict(), 'lhs': self.lhs,
               'lower': self.lower, 'upper': self.upper,
               'verdict': self.verdict, 'lower_form': self.lower_form}
        if self.residual is not None:
            out['residual'] = self.residual
        return out


def _verdict(lower, lhs, upper, tol):
    return {'lower': bool(geq(lhs, lower, tol)), 'upper': bool(leq(lhs, upper, tol))}


def cayley_bounds(a, s, tol=None, margin=None):
    """prod (1 - s_{n-i_j+1}(A))/(1 + s_j(A)) <= prod s_{i_j}(C(A))
    <= prod (1 + s_{i_j}(A))/(1 - s_j(A)).
    """
    return cayley_reports(a, [s], tol, margin)[0]


def cayley_reports(a, sets, tol=None, margin=None):
    """cayley_bounds over several index sets with one SVD of C(A).
    """
    tol, margin = resolve(tol, margin)
    arr = as_array(a)
    n = arr.shape[0]
    sets = [IndexSet.coerce(s, n) for s in sets]
    r = require_contraction(arr, margin)
    sc = singular_values(cayley(arr))
    out = []
    for s in sets:
        pairs = list(enumerate(s, 1))
        lower = float(np.prod([(1 - r[n - i]) / (1 + r[j - 1]) for j, i in pairs]))
        upper = float(np.prod([(1 + r[i - 1]) / (1 - r[j - 1]) for j, i in pairs]))
        lhs = float(np.prod([sc[i - 1] for i in s]))
        out.append(CayleyReport(s, lhs, lower, upper, _verdict(lower, lhs, upper, tol)))
    return out


def difference_factorization_residual(a, b):
    """||C(A) - C(B) - 2i (B + iI)^-1 (A - B) (A + iI)^-1|| (Frobenius).
    """
    aarr = as_array(a)
    barr = as_array(b)
    eye = np.eye(aarr.shape[0])
    diff = cayley(aarr).asarray() - cayley(barr).asarray()
    factor = (2j * inverse(barr + 1j * eye).asarray() @ (aarr - barr)
              @ inverse(aarr + 1j * eye).asarray())
    return frobenius_norm(diff - factor)


def cayley_difference_bounds(a, b, s, tol=None, margin=None):
    """Bounds on prod s_{i_j}(C(A) - C(B)) in terms of s(A - B).

    The factorization C(A) - C(B) = 2i (B + iI)^-1 (A - B) (A + iI)^-1 is
    evaluated too; its residual is stored on the report and must stay below
    1e-10 for the ``identity`` verdict.
    """
    return cayley_difference_reports(a, b, [s], tol, margin)[0]


def cayley_difference_reports(a, b, sets, tol=None, margin=None):
    tol, margin = resolve(tol, margin)
    aarr = as_array(a)
    barr = as_array(b)
    n = aarr.shape[0]
    sets = [IndexSet.coerce(s, n) for s in sets]
    ra = require_contraction(aarr, margin, name='A')
    rb = require_contraction(barr, margin, name='B')
    sd = singular_values(aarr - barr)
    sc = singular_values(cayley(aarr).asarray() - cayley(barr).asarray())
    residual = difference_factorization_residual(aarr, barr)
    out = []
    for s in sets:
        pairs = list(enumerate(s, 1))
        lower = float(np.prod([2 * sd[i - 1] / ((1 + ra[j - 1]) * (1 + rb[j - 1]))
                               for j, i in pairs]))
        upper = float(np.prod([2 * sd[i - 1] / ((1 - ra[j - 1]) * (1 - rb[j - 1]))
                               for j, i in pairs]))
        lhs = float(np.prod([sc[i - 1] for i in s]))
        verdict = _verdict(lower, lhs, upper, tol)
        verdict['identity'] = bool(residual <= FACTOR_TOL)
        out.append(CayleyReport(s, lhs, lower, upper, verdict,
                                lower_form='corrected', residual=residual))
    return out


@dataclass
class CorollaryRow(object):
    j: int
    lower: float
    value: float
    upper: float
    holds: bool


def cayley_corollary(a, tol=None, margin=None):
    """Per-j bounds (1 - s_{n-j+1})/(1 + s_1) <= s_j(C(A)) <= (1 + s_j)/(1 - s_1).
    """
    tol, margin = resolve(tol, margin)
    r = require_contraction(a, margin)
    sc = singular_values(cayley(a))
    n = len(r)
    rows = []
    for j in range(1, n + 1):
        lower = float((1 - r[n - j]) / (1 + r[0]))
        upper = float((1 + r[j - 1]) / (1 - r[0]))
        value = float(sc[j - 1])
        rows.append(CorollaryRow(j, lower, value, upper,
                                 bool(geq(value, lower, tol) and leq(value, upper, tol))))
    return rows


@dataclass
class FanHoffmanReport(object):
    """s_j(C(A) - C(B)) <= 2 s_j(A - B) for Hermitian A, B, with partial sums.
    """
    transform_values: list
    difference_values: list
    per_j: list
    partial_sums: list
    unitarity_defects: tuple
    holds: bool = field(default=False)

    def to_dict(self):
        return {'transform_values': self.transform_values,
                'difference_values': self.difference_values,
                'per_j': self.per_j, 'partial_sums': self.partial_sums,
                'unitarity_defects': list(self.unitarity_defects),
                'holds': self.holds}


def fan_hoffman_check(a, b, tol=None):
    """Compare C(A) - C(B) with 2(A - B) for Hermitian A and B.

    Raises
    ------
    NotHermitian
    """
    tol = resolve(tol)[0]
    ma = ComplexMatrix(a)
    mb = ComplexMatrix(b)
    for name, m in (('A', ma), ('B', mb)):
        if not m.is_hermitian():
            raise NotHermitian("%s must be Hermitian for the Fan-Hoffman "
                               "comparison." % name)
    ca = cayley(ma)
    cb = cayley(mb)
    sc = singular_values(ca - cb)
    sd = 2 * singular_values(ma - mb)
    per_j = [bool(leq(x, y, tol)) for x, y in zip(sc, sd)]
    sums_c = np.cumsum(sc)
    sums_d = np.cumsum(sd)
    partial = [bool(leq(x, y, tol)) for x, y in zip(sums_c, sums_d)]
    defects = (unitarity_defect(ca), unitarity_defect(cb))
    holds = all(per_j) and all(partial) and max(defects) <= FACTOR_TOL
    return FanHoffmanReport([float(x) for x in sc], [float(x) for x in sd],
                            per_j, partial, defects, bool(holds))
