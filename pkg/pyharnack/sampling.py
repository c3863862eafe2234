# -*- coding: utf-8 -*-
"""Seeded generation of test matrices.

All randomness flows from one integer seed through
`numpy.random.SeedSequence`, so a matrix is a deterministic function of its
`RandomSpec`. Independent streams (per search trial, per descent run) are
derived with `derive_seed`.
"""
import enum
from dataclasses import dataclass, field

import numpy as np

from .base_object import BaseObject
from .errors import InvalidSpec
from .linalg import singular_values
from .matrix import ComplexMatrix


class Mode(str, enum.Enum):
    """Generation strategies for random contractions."""
    GAUSSIAN = 'gaussian-scaled'
    PRESCRIBED = 'prescribed-singular-values'
    HERMITIAN = 'hermitian'
    NORMAL = 'normal'
    SINGULAR = 'singular-contraction'

    @classmethod
    def parse(cls, text):
        """Accept a mode value or one of its short aliases.
        """
        if isinstance(text, cls):
            return text
        key = str(text).strip().lower()
        for mode in cls:
            if key == mode.value:
                return mode
        if key in _ALIASES:
            return _ALIASES[key]
        raise InvalidSpec("Unknown generation mode %r (expected one of %s)." %
                          (text, ', '.join(m.value for m in cls)))


_ALIASES = {
    'gaussian': Mode.GAUSSIAN,
    'prescribed': Mode.PRESCRIBED,
    'singular': Mode.SINGULAR,
}


def derive_seed(seed, *keys):
    """Derive an independent 64-bit seed from *seed* and integer *keys*.
    """
    ss = np.random.SeedSequence([int(seed)] + [int(k) for k in keys])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def rng_for(seed, *keys):
    """A numpy Generator for the stream (seed, *keys).
    """
    return np.random.default_rng(np.random.SeedSequence([int(seed)] +
                                                        [int(k) for k in keys]))


def complex_gaussian(rng, n):
    """n x n matrix of independent standard complex Gaussians (E|z|^2 = 1).
    """
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def gram_schmidt(arr):
    """Orthonormalize the columns of *arr* (modified Gram-Schmidt).

    For a complex Gaussian input the result is Haar-distributed, since the
    implied triangular factor has a positive diagonal.
    """
    q = np.array(arr, dtype=complex)
    n = q.shape[1]
    for j in range(n):
        for i in range(j):
            q[:, j] -= np.vdot(q[:, i], q[:, j]) * q[:, i]
        norm = np.sqrt(np.sum(np.abs(q[:, j]) ** 2))
        if norm == 0:
            raise InvalidSpec("Gram-Schmidt input has dependent columns.")
        q[:, j] /= norm
    return q


def random_unitary(n, rng):
    """Haar-random n x n unitary from Gram-Schmidt on a Gaussian matrix.
    """
    return ComplexMatrix(gram_schmidt(complex_gaussian(rng, n)))


@dataclass(frozen=True)
class RandomSpec(BaseObject):
    """Recipe for one random matrix.

    Parameters
    ----------
    n : int
        Dimension (>= 1).
    mode : Mode or str
        'gaussian-scaled', 'prescribed-singular-values', 'hermitian',
        'normal' or 'singular-contraction'.
    max_norm : float
        Target spectral norm, in (0, 1).
    prescribed : sequence of float, optional
        Singular values (descending, each in [0, 1)) for the prescribed and
        singular modes. When omitted those modes draw a spread spectrum with
        sigma_1 = max_norm.
    seed : int
        Unsigned seed; the matrix is a deterministic function of the spec.
    """
    n: int
    mode: Mode = Mode.GAUSSIAN
    max_norm: float = 0.9
    prescribed: tuple = None
    seed: int = 0

    _bounds_error = InvalidSpec

    def __post_init__(self):
        try:
            self._check_args(n=int, max_norm=float, seed=int,
                             prescribed=(tuple, list, np.ndarray, type(None)))
        except TypeError as exc:
            raise InvalidSpec(str(exc))
        object.__setattr__(self, 'mode', Mode.parse(self.mode))
        self._check_bounds(n=">= 1", max_norm=("> 0", "< 1"), seed=">= 0")
        if self.prescribed is not None:
            values = tuple(float(x) for x in self.prescribed)
            if len(values) != self.n:
                raise InvalidSpec("prescribed must have %d values (got %d)." %
                                  (self.n, len(values)))
            if any(v < 0 or v >= 1 for v in values):
                raise InvalidSpec("prescribed values must lie in [0, 1).")
            if any(a < b for a, b in zip(values, values[1:])):
                raise InvalidSpec("prescribed values must be sorted descending.")
            object.__setattr__(self, 'prescribed', values)

    def to_dict(self):
        return {
            'n': self.n,
            'mode': self.mode.value,
            'max_norm': self.max_norm,
            'prescribed': list(self.prescribed) if self.prescribed is not None else None,
            'seed': self.seed,
        }


def spread_spectrum(rng, n, max_norm):
    """Descending singular values with sigma_1 = max_norm and a small sigma_n.
    """
    values = np.sort(rng.uniform(0, max_norm, n))[::-1]
    values[0] = max_norm
    if n > 1:
        # bias the smallest value toward 0
        values[-1] *= rng.uniform() ** 3
    return values


def _scale_to(arr, max_norm):
    s1 = singular_values(arr)[0]
    if s1 == 0:
        return arr
    return arr * (max_norm / s1)


def random_matrix(spec, rng=None):
    """Generate the matrix described by *spec*.

    Parameters
    ----------
    spec : RandomSpec
    rng : numpy.random.Generator, optional
        Overrides the generator seeded from ``spec.seed`` (used by the search,
        which owns per-trial streams).

    Returns
    -------
    ComplexMatrix
    """
    if not isinstance(spec, RandomSpec):
        raise InvalidSpec("random_matrix requires a RandomSpec (got %s)." %
                          type(spec).__name__)
    if rng is None:
        rng = rng_for(spec.seed)
    n = spec.n
    mode = spec.mode

    if mode is Mode.GAUSSIAN:
        arr = _scale_to(complex_gaussian(rng, n), spec.max_norm)
    elif mode in (Mode.PRESCRIBED, Mode.SINGULAR):
        if spec.prescribed is not None:
            sigma = np.array(spec.prescribed, dtype=float)
        else:
            sigma = spread_spectrum(rng, n, spec.max_norm)
        if mode is Mode.SINGULAR:
            sigma = sigma.copy()
            sigma[-1] = 0.0
        u = gram_schmidt(complex_gaussian(rng, n))
        v = gram_schmidt(complex_gaussian(rng, n))
        arr = (u * sigma) @ v.conj().T
    elif mode is Mode.HERMITIAN:
        g = complex_gaussian(rng, n)
        arr = _scale_to(0.5 * (g + g.conj().T), spec.max_norm)
    elif mode is Mode.NORMAL:
        radius = rng.uniform(0, 1, n)
        radius *= spec.max_norm / radius.max()
        angle = rng.uniform(0, 2 * np.pi, n)
        u = gram_schmidt(complex_gaussian(rng, n))
        arr = (u * (radius * np.exp(1j * angle))) @ u.conj().T
    else:
        raise InvalidSpec("Unsupported mode %r." % mode)
    return ComplexMatrix(arr)
