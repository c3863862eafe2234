# -*- coding: utf-8 -*-
"""Dense complex linear algebra for small matrices (n up to a few dozen).

Everything the inequality checks need is implemented here on top of numpy
array arithmetic:

* partial-pivoting LU (solve, inverse, determinant),
* cyclic Jacobi for Hermitian eigenvalues (optionally eigenvectors, used by
  the Hermitian square root),
* one-sided Jacobi for singular values,
* Householder reduction to Hessenberg form followed by Wilkinson-shifted QR
  for the eigenvalues of a general matrix,
* Cartesian decomposition and the polar factor |A| = (A*A)^(1/2).

When the active `Context` selects the ``'numpy'`` backend, the three
eigen/singular value routines dispatch to `numpy.linalg` instead; the
ordering contracts below are the same for both backends.

Ordering contracts
------------------
* Real spectra (Hermitian eigenvalues, singular values) are returned in
  non-increasing order.
* Complex spectra are ordered by descending modulus, ties broken by
  descending real part and then descending imaginary part.
"""
from collections import namedtuple

import numpy as np

from .context import Context
from .errors import SingularMatrix, NotHermitian, ConvergenceFailure
from .matrix import ComplexMatrix, as_array


PIVOT_TOL = 1e-12
HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-14
DEFLATION_TOL = 1e-13
MAX_SWEEPS = 100
_EPS = np.finfo(float).eps


SpectralData = namedtuple('SpectralData', ['singular_values', 'eigenvalues'])
SpectralData.__doc__ = """Sorted singular values and eigenvalues of a matrix.

singular_values : ndarray of float, descending
eigenvalues : ndarray of complex, in the complex ordering contract
"""


def _backend():
    return Context.active_context().backend


def adjoint(a):
    """Conjugate transpose A*.
    """
    return ComplexMatrix(as_array(a).conj().T)


def frobenius_norm(arr):
    """Frobenius norm of an array as a float.
    """
    return float(np.sqrt(np.sum(np.abs(arr) ** 2)))


def hermitize(arr):
    return 0.5 * (arr + arr.conj().T)


# ---------------------------------------------------------------- LU ------

class LUDecomposition(object):
    """Partial-pivoting LU factorization PA = LU.

    L (unit lower) and U are packed into one array; *perm* maps rows of the
    factorization to rows of A, and *sign* is the permutation parity.
    """
    def __init__(self, lu, perm, sign):
        self.lu = lu
        self.perm = perm
        self.sign = sign

    @property
    def n(self):
        return self.lu.shape[0]

    def determinant(self):
        return complex(self.sign * np.prod(np.diag(self.lu)))

    def solve(self, b):
        """Solve A X = B for a square right-hand side B.
        """
        b = as_array(b)
        if b.shape[0] != self.n:
            raise ValueError("Right-hand side has %d rows; expected %d." %
                             (b.shape[0], self.n))
        x = b[self.perm].copy()
        n = self.n
        lu = self.lu
        # forward substitution with unit lower factor
        for i in range(1, n):
            x[i] -= lu[i, :i] @ x[:i]
        # back substitution
        for i in range(n - 1, -1, -1):
            x[i] -= lu[i, i + 1:] @ x[i + 1:]
            x[i] /= lu[i, i]
        return x


def _lu(arr, check=True):
    """Factor *arr*; returns (LUDecomposition, exact_zero_pivot).

    With check=True a pivot below PIVOT_TOL times the largest column norm
    raises SingularMatrix.
    """
    lu = np.array(arr, dtype=complex)
    n = lu.shape[0]
    perm = np.arange(n)
    sign = 1
    scale = float(np.max(np.sqrt(np.sum(np.abs(lu) ** 2, axis=0))))
    threshold = PIVOT_TOL * scale
    for k in range(n):
        p = k + int(np.argmax(np.abs(lu[k:, k])))
        pivot = abs(lu[p, k])
        if check and (scale == 0 or pivot < threshold):
            raise SingularMatrix("Matrix is singular to working precision "
                                 "(pivot %.3g at column %d, scale %.3g)."
                                 % (pivot, k, scale))
        if pivot == 0:
            return LUDecomposition(lu, perm, sign), True
        if p != k:
            lu[[k, p]] = lu[[p, k]]
            perm[[k, p]] = perm[[p, k]]
            sign = -sign
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return LUDecomposition(lu, perm, sign), False


def lu_factor(a):
    """LU-factor A with partial pivoting.

    Raises
    ------
    SingularMatrix
        If the smallest pivot magnitude is below 1e-12 times the largest
        column norm of A.
    """
    return _lu(as_array(a))[0]


def lu_solve(a, b):
    """Solve A X = B; A must pass the LU nonsingularity test.
    """
    return ComplexMatrix(lu_factor(a).solve(b))


def inverse(a):
    """Inverse of A via LU; raises SingularMatrix when A fails the pivot test.
    """
    arr = as_array(a)
    return ComplexMatrix(_lu(arr)[0].solve(np.eye(arr.shape[0], dtype=complex)))


def determinant(a):
    """Determinant of A as a complex number (0 for exactly singular input).
    """
    lu, zero_pivot = _lu(as_array(a), check=False)
    if zero_pivot:
        return 0j
    return lu.determinant()


# ---------------------------------------------------- Jacobi rotations ----

def _rotation(app, aqq, apq):
    """2x2 unitary J such that J* [[app, apq], [conj(apq), aqq]] J is diagonal.

    app, aqq are real; apq is complex and nonzero.
    """
    b = abs(apq)
    phase = apq / b
    tau = (aqq - app) / (2.0 * b)
    if abs(tau) > 1e150:
        t = 0.5 / tau
    else:
        t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    cp = np.conj(phase)
    return np.array([[c, s], [-s * cp, c * cp]], dtype=complex)


def _check_hermitian(arr):
    skew = frobenius_norm(arr - arr.conj().T)
    if skew > HERMITIAN_TOL * (1 + frobenius_norm(arr)):
        raise NotHermitian("Matrix is not Hermitian (||H - H*|| = %.3g)." % skew)


def _jacobi(arr, vectors=False):
    """Cyclic Jacobi on a Hermitian array; returns (eigenvalues, V or None).

    Eigenvalues are unsorted; columns of V are the matching eigenvectors.
    """
    a = 0.5 * (arr + arr.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=complex) if vectors else None
    norm = frobenius_norm(a)
    if norm == 0 or n == 1:
        return a.diagonal().real.copy(), v
    target = JACOBI_TOL * norm
    for sweep in range(MAX_SWEEPS):
        off = frobenius_norm(a - np.diag(a.diagonal()))
        if off <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0:
                    continue
                j = _rotation(a[p, p].real, a[q, q].real, apq)
                cols = [p, q]
                a[:, cols] = a[:, cols] @ j
                a[cols, :] = j.conj().T @ a[cols, :]
                a[p, q] = a[q, p] = 0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                if vectors:
                    v[:, cols] = v[:, cols] @ j
    else:
        raise ConvergenceFailure("Jacobi did not converge in %d sweeps."
                                 % MAX_SWEEPS)
    return a.diagonal().real.copy(), v


def hermitian_eigenvalues(h):
    """Eigenvalues of a Hermitian matrix, descending.

    Parameters
    ----------
    h : ComplexMatrix or array_like
        Must satisfy ||H - H*|| <= 1e-10 * (1 + ||H||) (Frobenius).

    Raises
    ------
    NotHermitian
    ConvergenceFailure
    """
    arr = as_array(h)
    _check_hermitian(arr)
    if _backend() == 'numpy':
        w = np.linalg.eigvalsh(0.5 * (arr + arr.conj().T))
    else:
        w, _ = _jacobi(arr)
    return np.sort(w)[::-1]


def hermitian_eigh(h):
    """Eigenvalues (descending) and orthonormal eigenvectors of a Hermitian matrix.
    """
    arr = as_array(h)
    _check_hermitian(arr)
    if _backend() == 'numpy':
        w, v = np.linalg.eigh(0.5 * (arr + arr.conj().T))
    else:
        w, v = _jacobi(arr, vectors=True)
    order = np.argsort(w)[::-1]
    return w[order], v[:, order]


def hermitian_function(h, func):
    """Apply a scalar function to a Hermitian matrix through its eigendecomposition.
    """
    w, v = hermitian_eigh(h)
    return ComplexMatrix((v * func(w)) @ v.conj().T)


def sqrtm_psd(h):
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues are clamped at 0 before the square root.
    """
    return hermitian_function(h, lambda w: np.sqrt(np.clip(w, 0, None)))


# ------------------------------------------------------ singular values ---

def _one_sided_jacobi(arr):
    u = np.array(arr, dtype=complex)
    n = u.shape[1]
    tol = max(1e-15, n * _EPS)
    # columns this small are numerically zero; rotating them never converges
    floor = (n * tol * frobenius_norm(u)) ** 2
    for sweep in range(MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = np.vdot(u[:, p], u[:, p]).real
                beta = np.vdot(u[:, q], u[:, q]).real
                gamma = np.vdot(u[:, p], u[:, q])
                if (gamma == 0 or min(alpha, beta) <= floor
                        or abs(gamma) <= tol * np.sqrt(alpha * beta)):
                    continue
                rotated = True
                cols = [p, q]
                u[:, cols] = u[:, cols] @ _rotation(alpha, beta, gamma)
        if not rotated:
            break
    else:
        raise ConvergenceFailure("One-sided Jacobi did not converge in %d "
                                 "sweeps." % MAX_SWEEPS)
    return np.sqrt(np.sum(np.abs(u) ** 2, axis=0))


def singular_values(a, method='jacobi'):
    """Singular values of A, descending.

    Parameters
    ----------
    a : ComplexMatrix or array_like
    method : 'jacobi' or 'gram'
        'jacobi' (default) orthogonalizes the columns of A by one-sided
        Jacobi rotations; small singular values keep full absolute accuracy.
        'gram' takes square roots of the Hermitian eigenvalues of A*A
        (clamped at 0); singular values below ~1e-8 lose their digits.
    """
    arr = as_array(a)
    if _backend() == 'numpy':
        s = np.linalg.svd(arr, compute_uv=False)
    elif method == 'jacobi':
        s = _one_sided_jacobi(arr)
    elif method == 'gram':
        s = np.sqrt(np.clip(hermitian_eigenvalues(arr.conj().T @ arr), 0, None))
    else:
        raise ValueError("Unknown singular value method %r." % method)
    return np.sort(s)[::-1]


def spectral_norm(a):
    return float(singular_values(a)[0])


# -------------------------------------------------- general eigenvalues ---

def hessenberg(a):
    """Upper Hessenberg matrix unitarily similar to A (Householder reflections).
    """
    h = np.array(as_array(a), dtype=complex)
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k]
        alpha = np.sqrt(np.sum(np.abs(x) ** 2))
        if alpha == 0:
            continue
        x0 = x[0]
        phase = x0 / abs(x0) if x0 != 0 else 1.0
        v = x.copy()
        v[0] += phase * alpha
        v /= np.sqrt(np.sum(np.abs(v) ** 2))
        h[k + 1:, :] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, :])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0
    return h


def _givens(x, y):
    r = np.sqrt(abs(x) ** 2 + abs(y) ** 2)
    if r == 0:
        return np.eye(2, dtype=complex)
    return np.array([[np.conj(x), np.conj(y)], [-y, x]], dtype=complex) / r


def _wilkinson_shift(a11, a12, a21, a22):
    # eigenvalue of the trailing 2x2 block closer to a22
    half = 0.5 * (a11 - a22)
    disc = np.sqrt(half * half + a12 * a21)
    mu1 = a22 - a12 * a21 / (half + disc) if (half + disc) != 0 else a22
    mu2 = a22 - a12 * a21 / (half - disc) if (half - disc) != 0 else a22
    return mu1 if abs(mu1 - a22) <= abs(mu2 - a22) else mu2


def _qr_step(block, mu):
    """One shifted QR step RQ + mu*I on a Hessenberg block, in place."""
    m = block.shape[0]
    idx = np.arange(m)
    block[idx, idx] -= mu
    rots = []
    for k in range(m - 1):
        g = _givens(block[k, k], block[k + 1, k])
        block[k:k + 2, k:] = g @ block[k:k + 2, k:]
        block[k + 1, k] = 0
        rots.append(g)
    for k, g in enumerate(rots):
        hi = min(k + 3, m)
        block[:hi, k:k + 2] = block[:hi, k:k + 2] @ g.conj().T
    block[idx, idx] += mu


def order_eigenvalues(values):
    """Sort complex values by descending modulus, then real, then imaginary part.

    Moduli and real parts are compared after rounding to 12 significant
    digits so that conjugate pairs order reproducibly.
    """
    values = np.asarray(values, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(values)))) if len(values) else 1.0

    def key(z):
        return (-round(abs(z) / scale, 12), -round(z.real / scale, 12), -z.imag)
    return np.array(sorted(values, key=key), dtype=complex)


def general_eigenvalues(a):
    """Eigenvalues of a general complex matrix.

    Hessenberg reduction followed by Wilkinson-shifted QR with deflation when
    a subdiagonal entry drops below 1e-13 times its local scale.

    Returns
    -------
    ndarray of complex, in the complex ordering contract.

    Raises
    ------
    ConvergenceFailure
        After 100 * n**2 QR steps without a deflation.
    """
    arr = as_array(a)
    n = arr.shape[0]
    if _backend() == 'numpy':
        return order_eigenvalues(np.linalg.eigvals(arr))
    h = hessenberg(arr)
    norm = frobenius_norm(h)
    max_iter = 100 * n * n
    eigs = []
    hi = n - 1
    iters = 0
    while hi >= 0:
        if hi == 0:
            eigs.append(h[0, 0])
            break
        # look for a negligible subdiagonal entry in the active window
        lo = hi
        while lo > 0:
            local = abs(h[lo - 1, lo - 1]) + abs(h[lo, lo])
            if local == 0:
                local = norm
            if abs(h[lo, lo - 1]) <= DEFLATION_TOL * local:
                h[lo, lo - 1] = 0
                break
            lo -= 1
        if lo == hi:
            eigs.append(h[hi, hi])
            hi -= 1
            iters = 0
            continue
        iters += 1
        if iters > max_iter:
            raise ConvergenceFailure("Shifted QR made no progress after %d "
                                     "iterations." % max_iter)
        if iters % 11 == 10:
            # exceptional shift to break cycles
            mu = h[hi, hi] + 0.75 * abs(h[hi, hi - 1])
        else:
            mu = _wilkinson_shift(h[hi - 1, hi - 1], h[hi - 1, hi],
                                  h[hi, hi - 1], h[hi, hi])
        block = h[lo:hi + 1, lo:hi + 1]
        _qr_step(block, mu)
        h[lo:hi + 1, lo:hi + 1] = block
    return order_eigenvalues(eigs)


def spectral_data(a):
    """Singular values and eigenvalues of A under the ordering contracts.
    """
    return SpectralData(singular_values(a), general_eigenvalues(a))


# ------------------------------------------------ Cartesian / polar -------

def real_part(x):
    """Re(X) = (X + X*) / 2.
    """
    arr = as_array(x)
    return ComplexMatrix(0.5 * (arr + arr.conj().T))


def imag_part(x):
    """Im(X) = (X - X*) / (2i).
    """
    arr = as_array(x)
    return ComplexMatrix((arr - arr.conj().T) / 2j)


def polar_abs(a):
    """|A| = (A*A)^(1/2) through the Jacobi eigendecomposition of A*A.
    """
    arr = as_array(a)
    return sqrtm_psd(arr.conj().T @ arr)


def is_normal(a, tol=1e-9):
    """True when ||A*A - AA*|| <= tol * (1 + ||A||^2) (Frobenius).
    """
    arr = as_array(a)
    comm = arr.conj().T @ arr - arr @ arr.conj().T
    return frobenius_norm(comm) <= tol * (1 + frobenius_norm(arr) ** 2)


def unitarity_defect(u):
    """||U*U - I|| in Frobenius norm.
    """
    arr = as_array(u)
    return frobenius_norm(arr.conj().T @ arr - np.eye(arr.shape[0]))


def identity(n):
    return ComplexMatrix.identity(n)
