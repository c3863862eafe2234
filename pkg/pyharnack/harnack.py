# -*- coding: utf-8 -*-
"""The Harnack quotient H(A) = (I - A*)^-1 (I - A*A) (I - A)^-1 and its bounds.

Every index in this module is 1-based to match the usual statement of the
inequalities: ``r[j - 1]`` is r_j, the j-th largest singular value, and
r_{n-j+1} is ``r[n - j]``.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .context import geq, leq, resolve
from .errors import DomainViolation, NotContractive, NotUnitary
from .indexset import IndexSet
from .linalg import (determinant, frobenius_norm, hermitian_eigenvalues, hermitize,
                     inverse, real_part,
                     singular_values, sqrtm_psd, unitarity_defect)
from .matrix import ComplexMatrix, as_array

logger = logging.getLogger(__name__)

IDENTITY_TOL = 1e-10
EQUALITY_TOL = 1e-9
UNITARY_TOL = 1e-9
UPPER_BOUNDS = ('R1', 'R2', 'R3', 'R4', 'R5')
LOWER_BOUNDS = ('Jb', 'Jb_swapped', 'JbX', 'JbY', 'fan_lower')

# (smaller, larger) pairs that hold for every strict contraction
LATTICE = (('R1', 'R2'), ('R1', 'R3'), ('R2', 'R4'), ('R3', 'R5'), ('R4', 'R5'),
           ('fan_lower', 'Jb'), ('fan_lower', 'Jb_swapped'))


def require_contraction(a, margin=None, name='A'):
    """Singular values of A (descending) after checking 1 - sigma_1 >= margin.

    Raises
    ------
    NotContractive
    """
    margin = resolve(margin=margin)[1]
    r = singular_values(a)
    if 1 - r[0] < margin:
        raise NotContractive("%s is not a strict contraction: sigma_1 = %.12g "
                             "(margin %g)." % (name, r[0], margin))
    return r


def harnack_quotient(a):
    """H(A) = (I - A*)^-1 (I - A*A) (I - A)^-1, symmetrized to (H + H*)/2.

    Raises
    ------
    SingularMatrix
        When I - A fails the LU pivot test (1 is an eigenvalue of A).
    """
    arr = as_array(a)
    eye = np.eye(arr.shape[0])
    res = inverse(eye - arr).asarray()
    h = res.conj().T @ (eye - arr.conj().T @ arr) @ res
    return ComplexMatrix(hermitize(h))


@dataclass
class IdentityResiduals(object):
    """Frobenius residuals of H(A) against its four closed forms.

    ``exp3`` is None (and ``note`` says why) when A is not a strict
    contraction; the other three forms need only 1 not in the spectrum.
    """
    expz: float
    exp2: float
    fan: float
    exp3: float
    scale: float
    note: str = ''

    def as_dict(self):
        return {'expz': self.expz, 'exp2': self.exp2, 'fan': self.fan,
                'exp3': self.exp3}

    def within(self, tol=IDENTITY_TOL):
        """True when every computed residual is <= tol * scale.
        """
        return all(v <= tol * self.scale for v in self.as_dict().values()
                   if v is not None)


def identity_residuals(a, margin=None):
    """Residuals of H(A) against 2Re((I-A)^-1) - I, 2Re((I-A)^-1 - I/2),
    Re((I+A)(I-A)^-1) and S*S with S = (I - A*A)^(1/2) (I-A)^-1.
    """
    margin = resolve(margin=margin)[1]
    arr = as_array(a)
    eye = np.eye(arr.shape[0])
    h = harnack_quotient(arr).asarray()
    res = inverse(eye - arr).asarray()

    expz = 2 * real_part(res).asarray() - eye
    exp2 = 2 * real_part(res - 0.5 * eye).asarray()
    fan = real_part((eye + arr) @ res).asarray()

    exp3 = None
    note = ''
    if 1 - singular_values(arr)[0] >= margin:
        s = sqrtm_psd(hermitize(eye - arr.conj().T @ arr)).asarray() @ res
        exp3 = frobenius_norm(h - s.conj().T @ s)
    else:
        note = 'NotContractive: exp3 requires 1 - sigma_1(A) >= %g' % margin

    return IdentityResiduals(expz=frobenius_norm(h - expz),
                             exp2=frobenius_norm(h - exp2),
                             fan=frobenius_norm(h - fan), exp3=exp3,
                             scale=1 + frobenius_norm(h), note=note)


# ------------------------------------------------------------ Tung -------

@dataclass
class TungReport(object):
    lower: float
    middle: float
    upper: float
    equality_side: str

    @property
    def holds(self):
        return leq(self.lower, self.middle) and leq(self.middle, self.upper)

    def to_dict(self):
        return {'lower': self.lower, 'middle': self.middle, 'upper': self.upper,
                'equality_side': self.equality_side, 'holds': self.holds}


def tung_check(z, u, margin=None):
    """Tung's determinant chain for a strict contraction Z and a unitary U:

        prod (1 - r_k)/(1 + r_k) <= det(I - Z*Z) / |det(I - UZ)|^2
                                 <= prod (1 + r_k)/(1 - r_k)

    ``equality_side`` is 'left', 'right', 'both' or 'none', detected at a
    relative tolerance of 1e-9.
    """
    zarr = as_array(z)
    uarr = as_array(u)
    r = require_contraction(zarr, margin, name='Z')
    defect = unitarity_defect(uarr)
    if defect > UNITARY_TOL:
        raise NotUnitary("U is not unitary: ||U*U - I|| = %.3g." % defect)
    eye = np.eye(zarr.shape[0])
    lower = float(np.prod((1 - r) / (1 + r)))
    upper = float(np.prod((1 + r) / (1 - r)))
    num = determinant(eye - zarr.conj().T @ zarr).real
    middle = float(num / abs(determinant(eye - uarr @ zarr)) ** 2)
    left = abs(middle - lower) <= EQUALITY_TOL * lower
    right = abs(middle - upper) <= EQUALITY_TOL * upper
    side = {(False, False): 'none', (True, False): 'left',
            (False, True): 'right', (True, True): 'both'}[(left, right)]
    return TungReport(lower, middle, upper, side)


# ------------------------------------------------------ bound families ---

def _prod(values, one):
    out = one
    for v in values:
        out = out * v
    return out


def _one_like(r):
    return Fraction(1) if any(isinstance(x, Fraction) for x in r) else 1.0


def upper_bound_family(r, indices):
    """R1..R5 for the singular values *r* (descending) and 1-based *indices*.

    Works on floats and on Fractions; with Fractions the result is exact.
    """
    r = list(r)
    n = len(r)
    idx = list(indices)
    one = _one_like(r)
    pairs = list(enumerate(idx, 1))
    return {
        'R1': _prod(((one + r[i - 1]) / (one - r[i - 1]) for i in idx), one),
        'R2': _prod(((one + r[j - 1]) / (one - r[j - 1]) for j, _ in pairs), one),
        'R3': _prod(((one - r[n - j] ** 2) / (one - r[i - 1]) ** 2
                     for j, i in pairs), one),
        'R4': _prod(((one - r[n - i] ** 2) / (one - r[j - 1]) ** 2
                     for j, i in pairs), one),
        'R5': _prod(((one - r[n - j] ** 2) / (one - r[j - 1]) ** 2
                     for j, _ in pairs), one),
    }


def lower_bound_family(r, indices):
    """Jb, its swap, the two per-index forms JbX / JbY and fan_lower.

    JbX = prod (1 - r_{i_j}^2)/(1 + r_1)^2 and JbY = prod (1 - r_1^2)/(1 + r_{i_j})^2
    are the products of the per-eigenvalue bounds
    lambda_{n-i+1}(H) >= (1 - r_i^2)/(1 + r_1)^2 and (1 - r_1^2)/(1 + r_i)^2.
    """
    r = list(r)
    idx = list(indices)
    one = _one_like(r)
    pairs = list(enumerate(idx, 1))
    r1 = r[0]
    return {
        'Jb': _prod(((one - r[i - 1] ** 2) / (one + r[j - 1]) ** 2
                     for j, i in pairs), one),
        'Jb_swapped': _prod(((one - r[j - 1] ** 2) / (one + r[i - 1]) ** 2
                             for j, i in pairs), one),
        'JbX': _prod(((one - r[i - 1] ** 2) / (one + r1) ** 2 for i in idx), one),
        'JbY': _prod(((one - r1 ** 2) / (one + r[i - 1]) ** 2 for i in idx), one),
        'fan_lower': _prod(((one - r[j - 1]) / (one + r[j - 1])
                            for j, _ in pairs), one),
    }


def lattice_checks(upper, lower, tol=None):
    """Evaluate the fixed order relations among the bounds of one index set.
    """
    values = dict(upper)
    values.update(lower)
    return {'%s<=%s' % (a, b): bool(leq(values[a], values[b], tol))
            for a, b in LATTICE}


@dataclass
class BoundReport(object):
    """Every bound on one partial eigenvalue product of H(A).

    ``lhs`` is prod lambda_{i_j}(H) (compared with the R bounds) and
    ``lhs_lower`` is prod lambda_{n-i_j+1}(H) (compared with the lower
    bounds). Slacks are signed so that a value >= -tol means satisfied.
    """
    matrix_id: str
    index_set: IndexSet
    lhs: float
    lhs_lower: float
    upper_bounds: dict
    lower_bounds: dict
    slacks: dict
    verdict: dict
    lattice: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.verdict.values()) and all(self.lattice.values())

    def to_dict(self):
        return {
            'matrix_id': self.matrix_id,
            'index_set': self.index_set.to_dict(),
            'lhs': self.lhs,
            'lhs_lower': self.lhs_lower,
            'upper_bounds': self.upper_bounds,
            'lower_bounds': self.lower_bounds,
            'slacks': self.slacks,
            'verdict': self.verdict,
            'lattice': self.lattice,
        }


def _report_from_spectra(lam, r, s, tol, matrix_id):
    n = len(r)
    idx = list(s)
    lhs = float(np.prod([lam[i - 1] for i in idx]))
    lhs_lower = float(np.prod([lam[n - i] for i in idx]))
    upper = {k: float(v) for k, v in upper_bound_family(r, idx).items()}
    lower = {k: float(v) for k, v in lower_bound_family(r, idx).items()}
    slacks = {}
    verdict = {}
    for name, bound in upper.items():
        slacks[name] = bound - lhs
        verdict[name] = bool(leq(lhs, bound, tol))
    for name, bound in lower.items():
        slacks[name] = lhs_lower - bound
        verdict[name] = bool(geq(lhs_lower, bound, tol))
    return BoundReport(matrix_id, s, lhs, lhs_lower, upper, lower, slacks,
                       verdict, lattice_checks(upper, lower, tol))


def bound_report(a, s, tol=None, margin=None, matrix_id=''):
    """The R1-R5 upper bounds and the Jb lower-bound family for one index set.

    Parameters
    ----------
    a : ComplexMatrix
        A strict contraction (1 - sigma_1 >= margin).
    s : IndexSet or sequence of int
        1-based, strictly increasing indices.

    Raises
    ------
    NotContractive, InvalidIndexSet
    """
    return bound_reports(a, [s], tol, margin, matrix_id)[0]


def bound_reports(a, sets, tol=None, margin=None, matrix_id=''):
    """bound_report for many index sets, sharing one spectral computation.
    """
    tol, margin = resolve(tol, margin)
    arr = as_array(a)
    n = arr.shape[0]
    sets = [IndexSet.coerce(s, n) for s in sets]
    r = require_contraction(arr, margin)
    lam = hermitian_eigenvalues(harnack_quotient(arr))
    return [_report_from_spectra(lam, r, s, tol, matrix_id) for s in sets]


# ---------------------------------------------------- per-eigenvalue -----

@dataclass
class EigenBound(object):
    j: int
    eigenvalue: float
    bound: float
    holds: bool


def eigen_bound_J0(a, tol=None, margin=None):
    """Pairs (lambda_j(H), (1 + r_j)/(1 - r_j)) with lambda_j(H) <= bound.
    """
    tol, margin = resolve(tol, margin)
    r = require_contraction(a, margin)
    lam = hermitian_eigenvalues(harnack_quotient(a))
    out = []
    for j in range(1, len(r) + 1):
        bound = float((1 + r[j - 1]) / (1 - r[j - 1]))
        out.append(EigenBound(j, float(lam[j - 1]), bound,
                              bool(leq(lam[j - 1], bound, tol))))
    return out


@dataclass
class NaiveLowerBound(object):
    """The reversed bound (1 - r_j)/(1 + r_j) next to the two valid ones.

    ``violated`` flags that the naive reversal fails; ``valid_holds``
    asserts lambda_j(H) >= (1 - r_{n-j+1}^2)/(1 + r_1)^2 and
    lambda_j(H) >= (1 - r_1^2)/(1 + r_{n-j+1})^2.
    """
    j: int
    eigenvalue: float
    naive_bound: float
    violated: bool
    jbx_bound: float
    jby_bound: float
    valid_holds: bool


def naive_lower_bound_check(a, tol=None, margin=None):
    tol, margin = resolve(tol, margin)
    r = require_contraction(a, margin)
    lam = hermitian_eigenvalues(harnack_quotient(a))
    n = len(r)
    r1 = r[0]
    rows = []
    for j in range(1, n + 1):
        lj = float(lam[j - 1])
        naive = float((1 - r[j - 1]) / (1 + r[j - 1]))
        jbx = float((1 - r[n - j] ** 2) / (1 + r1) ** 2)
        jby = float((1 - r1 ** 2) / (1 + r[n - j]) ** 2)
        rows.append(NaiveLowerBound(
            j, lj, naive, violated=bool(not geq(lj, naive, tol)),
            jbx_bound=jbx, jby_bound=jby,
            valid_holds=bool(geq(lj, jbx, tol) and geq(lj, jby, tol))))
    return rows


@dataclass
class FanOperatorReport(object):
    """Loewner sandwich c (I-A*)(I-A) <= I - A*A <= C (I-A*)(I-A).

    ``min_eig_lower`` / ``min_eig_upper`` are the smallest eigenvalues of the
    two differences; both are >= -tol * scale when the sandwich holds.
    """
    c_lower: float
    c_upper: float
    min_eig_lower: float
    min_eig_upper: float
    eig_min: float
    eig_max: float
    holds: bool


def fan_operator_check(a, tol=None, margin=None):
    """Fan's operator bounds with c = (1 - r_1)/(1 + r_1) and C = 1/c.
    """
    tol, margin = resolve(tol, margin)
    arr = as_array(a)
    r1 = float(require_contraction(arr, margin)[0])
    eye = np.eye(arr.shape[0])
    gram = eye - arr.conj().T @ arr
    m = (eye - arr.conj().T) @ (eye - arr)
    c_lo = (1 - r1) / (1 + r1)
    c_hi = (1 + r1) / (1 - r1)
    lo = hermitian_eigenvalues(hermitize(gram - c_lo * m))[-1]
    hi = hermitian_eigenvalues(hermitize(c_hi * m - gram))[-1]
    lam = hermitian_eigenvalues(harnack_quotient(arr))
    scale = 1 + c_hi * frobenius_norm(m)
    holds = (lo >= -tol * scale and hi >= -tol * scale and
             geq(lam[-1], c_lo, tol) and leq(lam[0], c_hi, tol))
    return FanOperatorReport(c_lo, c_hi, float(lo), float(hi), float(lam[-1]),
                             float(lam[0]), bool(holds))


@dataclass
class DeterminantConsistency(object):
    eigen_product: float
    determinant_ratio: float
    relative_error: float

    @property
    def holds(self):
        return self.relative_error <= EQUALITY_TOL


def determinant_consistency(a):
    """prod lambda(H(A)) against det(I - A*A) / |det(I - A)|^2.
    """
    arr = as_array(a)
    eye = np.eye(arr.shape[0])
    prod = float(np.prod(hermitian_eigenvalues(harnack_quotient(arr))))
    ratio = float(determinant(eye - arr.conj().T @ arr).real /
                  abs(determinant(eye - arr)) ** 2)
    err = abs(prod - ratio) / max(abs(ratio), np.finfo(float).tiny)
    return DeterminantConsistency(prod, ratio, err)


# ------------------------------------------------------- two matrices ----

@dataclass
class MultiMatrixReport(object):
    """(A* - B*)^-1 (A*A - B*B) (A - B)^-1 against 2Re((I - BA^-1)^-1) - I.

    ``rhs`` is inf when some sigma_j(B) >= sigma_n(A).
    """
    index_set: IndexSet
    residual: float
    scale: float
    lhs: float
    rhs: float
    holds: bool

    def to_dict(self):
        return {'index_set': self.index_set.to_dict(), 'residual': self.residual,
                'scale': self.scale, 'lhs': self.lhs, 'rhs': self.rhs,
                'holds': self.holds}


def multi_matrix_bound(a, b, s, tol=None, margin=None):
    """Partial products of the two-matrix Harnack quotient.

    Raises
    ------
    SingularMatrix
        When A or A - B is singular.
    DomainViolation
        When 1 - sigma_1(BA^-1) < margin.
    """
    tol, margin = resolve(tol, margin)
    aarr = as_array(a)
    barr = as_array(b)
    n = aarr.shape[0]
    s = IndexSet.coerce(s, n)
    eye = np.eye(n)
    c = barr @ inverse(aarr).asarray()
    sc = singular_values(c)[0]
    if 1 - sc < margin:
        raise DomainViolation("sigma_1(BA^-1) = %.12g is not below 1 (margin %g)."
                              % (sc, margin))
    d_inv = inverse(aarr - barr).asarray()
    m = hermitize(d_inv.conj().T @ (aarr.conj().T @ aarr - barr.conj().T @ barr)
                   @ d_inv)
    closed = 2 * real_part(inverse(eye - c)).asarray() - eye
    residual = frobenius_norm(m - closed)
    lam = hermitian_eigenvalues(m)
    lhs = float(np.prod([lam[i - 1] for i in s]))

    sa_n = singular_values(aarr)[-1]
    sb = singular_values(barr)
    rhs = 1.0
    for j in range(1, s.k + 1):
        if sb[j - 1] >= sa_n:
            rhs = float('inf')
            break
        rhs *= (sa_n + sb[j - 1]) / (sa_n - sb[j - 1])
    holds = bool(np.isinf(rhs) or leq(lhs, rhs, tol))
    logger.debug("multi_matrix_bound %s: lhs=%.6g rhs=%.6g residual=%.3g",
                 s, lhs, rhs, residual)
    return MultiMatrixReport(s, residual, 1 + frobenius_norm(m), lhs, float(rhs),
                             holds)
