# -*- coding: utf-8 -*-
import json
import numbers

import numpy as np

from .base_object import BaseObject
from .errors import ParseError


class ComplexMatrix(BaseObject):
    """Square dense complex matrix; the operand of every check in pyharnack.

    The entries are held in a read-only ``complex128`` array. Arithmetic
    (``+``, ``-``, ``@``, scalar ``*``) returns new matrices; nothing mutates
    in place, so instances can be shared freely between threads and worker
    processes.

    Parameters
    ----------
    data : array_like or ComplexMatrix
        An n x n array of numbers. Non-square, empty or non-finite input is
        rejected.

    Examples
    --------

        a = ComplexMatrix([[0, 0.1], [0, 0]])
        h = a.H @ a            # A*A
        ComplexMatrix.from_json('{"n": 1, "re": [[0.5]]}')

    """
    # numpy defers binary operators to the methods below
    __array_ufunc__ = None

    def __init__(self, data):
        if isinstance(data, ComplexMatrix):
            arr = data._data
        else:
            try:
                arr = np.array(data, dtype=complex)
            except (TypeError, ValueError):
                raise TypeError("ComplexMatrix requires numeric input (got %s)."
                                % type(data).__name__)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError("ComplexMatrix must be square and non-empty (got "
                             "shape %s)." % (arr.shape,))
        if not np.all(np.isfinite(arr)):
            raise ValueError("ComplexMatrix entries must be finite.")
        arr = arr.copy()
        arr.flags.writeable = False
        self._data = arr

    @classmethod
    def identity(cls, n):
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def zeros(cls, n):
        return cls(np.zeros((n, n), dtype=complex))

    @classmethod
    def diag(cls, values):
        return cls(np.diag(np.asarray(values, dtype=complex)))

    @property
    def n(self):
        """The dimension of the matrix.
        """
        return self._data.shape[0]

    @property
    def H(self):
        """The adjoint (conjugate transpose).
        """
        return ComplexMatrix(self._data.conj().T)

    @property
    def real(self):
        """Entry-wise real part (not the Hermitian part; see linalg.real_part).
        """
        return self._data.real.copy()

    @property
    def imag(self):
        return self._data.imag.copy()

    def asarray(self):
        """Return a writable copy of the entries as a complex ndarray.
        """
        return self._data.copy()

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.asarray()
        return self._data.astype(dtype)

    def __getitem__(self, idx):
        return self._data[idx]

    def __len__(self):
        return self.n

    def _coerce(self, other):
        if isinstance(other, ComplexMatrix):
            other = other._data
        else:
            other = np.asarray(other, dtype=complex)
        if other.shape != self._data.shape:
            raise ValueError("Dimension mismatch: %s vs %s." %
                             (self._data.shape, other.shape))
        return other

    def __add__(self, other):
        return ComplexMatrix(self._data + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ComplexMatrix(self._data - self._coerce(other))

    def __rsub__(self, other):
        return ComplexMatrix(self._coerce(other) - self._data)

    def __neg__(self):
        return ComplexMatrix(-self._data)

    def __mul__(self, scalar):
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return ComplexMatrix(self._data * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, numbers.Number):
            return NotImplemented
        return ComplexMatrix(self._data / scalar)

    def __matmul__(self, other):
        return ComplexMatrix(self._data @ self._coerce(other))

    def __rmatmul__(self, other):
        return ComplexMatrix(self._coerce(other) @ self._data)

    def __eq__(self, other):
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return np.array_equal(self._data, other._data)

    def __hash__(self):
        return hash(self._data.tobytes())

    def allclose(self, other, atol=1e-12, rtol=0.0):
        """Entry-wise comparison with absolute tolerance *atol*.
        """
        return bool(np.allclose(self._data, self._coerce(other),
                                atol=atol, rtol=rtol))

    def norm(self, kind='fro'):
        """Frobenius norm (default) or max-abs entry ('max').

        The spectral norm is linalg.singular_values(A)[0].
        """
        if kind == 'fro':
            return float(np.sqrt(np.sum(np.abs(self._data) ** 2)))
        if kind == 'max':
            return float(np.max(np.abs(self._data)))
        raise ValueError("Unknown norm kind %r." % kind)

    def is_hermitian(self, tol=1e-10):
        """True when ||A - A*|| <= tol * (1 + ||A||) in Frobenius norm.
        """
        skew = np.sqrt(np.sum(np.abs(self._data - self._data.conj().T) ** 2))
        return bool(skew <= tol * (1 + self.norm()))

    def to_dict(self):
        """Matrix JSON form: {"n": n, "re": [[...]], "im": [[...]]}.

        "im" is omitted when every imaginary part is zero.
        """
        out = {'n': self.n, 're': self._data.real.tolist()}
        if np.any(self._data.imag != 0):
            out['im'] = self._data.imag.tolist()
        return out

    def to_json(self, **kwds):
        return json.dumps(self.to_dict(), **kwds)

    @classmethod
    def from_dict(cls, obj):
        """Build a matrix from its JSON form; raises ParseError if malformed.
        """
        if not isinstance(obj, dict) or 're' not in obj:
            raise ParseError('Matrix JSON must be an object with an "re" field.')
        try:
            re = np.array(obj['re'], dtype=float)
            im = np.array(obj['im'], dtype=float) if 'im' in obj else np.zeros_like(re)
        except (TypeError, ValueError) as exc:
            raise ParseError('Matrix JSON entries must be numbers: %s' % exc)
        if re.ndim != 2 or re.shape[0] != re.shape[1] or re.shape[0] == 0:
            raise ParseError('Matrix JSON "re" must be a non-empty square array '
                             '(got shape %s).' % (re.shape,))
        if im.shape != re.shape:
            raise ParseError('Matrix JSON "im" must have the shape of "re".')
        n = obj.get('n', re.shape[0])
        if not isinstance(n, int) or n != re.shape[0]:
            raise ParseError('Matrix JSON "n" (%r) does not match the array '
                             'dimension %d.' % (n, re.shape[0]))
        try:
            return cls(re + 1j * im)
        except ValueError as exc:
            raise ParseError(str(exc))

    @classmethod
    def from_json(cls, text):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError('Invalid matrix JSON: %s' % exc)
        return cls.from_dict(obj)

    @classmethod
    def load(cls, path):
        """Read a matrix JSON file.
        """
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError('Cannot read matrix file %s: %s' % (path, exc))
        return cls.from_json(text)

    def save(self, path):
        with open(path, 'w') as fh:
            fh.write(self.to_json(indent=2))
            fh.write('\n')

    def __repr__(self):
        return 'ComplexMatrix(n=%d, %s)' % (self.n, np.array2string(
            self._data, precision=4, separator=', '))


def as_array(a):
    """Return the entries of a ComplexMatrix or array-like as a complex ndarray.
    """
    if isinstance(a, ComplexMatrix):
        return a.asarray()
    arr = np.array(a, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("Expected a square matrix (got shape %s)." % (arr.shape,))
    return arr
