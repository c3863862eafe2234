# -*- coding: utf-8 -*-
from .base_object import BaseObject


BACKENDS = ('native', 'numpy')


class Context(BaseObject):
    """Numerical settings shared by every check in pyharnack.

    A Context holds the inequality tolerance, the strict-contraction margin,
    the eigensolver backend and the threshold below which a conjecture slack
    counts as a violation. Operations that accept ``tol=None`` or
    ``margin=None`` take the missing value from the active context.

    If no Context has been entered, a default one (tol=1e-9, margin=1e-6,
    native solvers) is used. Contexts nest; leaving a `with` block restores
    the previously active context.

    Examples
    --------

    Loosening the tolerance for a single block of checks::

        from pyharnack import Context, bound_report

        with Context(tol=1e-7, margin=1e-4):
            report = bound_report(a, s)

    Running a long search on the LAPACK-backed solvers::

        with Context(backend='numpy'):
            best, summary = search(config)

    """
    _stack = []
    _default = None

    @classmethod
    def active_context(cls):
        """Return the innermost active context (or the default context).
        """
        if cls._stack:
            return cls._stack[-1]
        if cls._default is None:
            cls._default = cls()
        return cls._default

    def __init__(self, tol=1e-9, margin=1e-6, backend='native',
                 violation_threshold=-1e-8):
        self.tol = tol
        self.margin = margin
        self.backend = backend
        self.violation_threshold = violation_threshold

    @property
    def tol(self):
        """Relative tolerance for inequality checks.

        A check ``x <= y`` passes iff ``x <= y + tol * (1 + |y|)``.
        """
        return self._tol

    @tol.setter
    def tol(self, tol):
        self._check_args(tol=float)
        tol = float(tol)
        self._check_bounds(tol="> 0")
        self._tol = tol

    @property
    def margin(self):
        """Strict-contraction margin: a matrix qualifies when 1 - σ₁ >= margin.
        """
        return self._margin

    @margin.setter
    def margin(self, margin):
        self._check_args(margin=float)
        margin = float(margin)
        self._check_bounds(margin=("> 0", "< 1"))
        self._margin = margin

    @property
    def backend(self):
        """Eigensolver backend: 'native' (Jacobi / shifted QR) or 'numpy'.
        """
        return self._backend

    @backend.setter
    def backend(self, backend):
        self._check_args(backend=str)
        if backend not in BACKENDS:
            raise ValueError("Argument backend must be one of %s (got %r)." %
                             (', '.join(BACKENDS), backend))
        self._backend = backend

    @property
    def violation_threshold(self):
        """Conjecture slacks below this value are reported as violations.
        """
        return self._violation_threshold

    @violation_threshold.setter
    def violation_threshold(self, violation_threshold):
        self._check_args(violation_threshold=float)
        violation_threshold = float(violation_threshold)
        self._check_bounds(violation_threshold="<= 0")
        self._violation_threshold = violation_threshold

    @property
    def active(self):
        """Boolean indicating whether this is the currently active context.
        """
        return Context.active_context() is self

    def resolve(self, tol=None, margin=None):
        """Return (tol, margin) with missing values taken from this context.
        """
        return (self.tol if tol is None else float(tol),
                self.margin if margin is None else float(margin))

    def to_dict(self):
        return {
            'tol': self.tol,
            'margin': self.margin,
            'backend': self.backend,
            'violation_threshold': self.violation_threshold,
        }

    def __enter__(self):
        Context._stack.append(self)
        return self

    def __exit__(self, *args):
        if self in Context._stack:
            # remove the innermost occurrence
            idx = len(Context._stack) - 1 - Context._stack[::-1].index(self)
            del Context._stack[idx]

    def __repr__(self):
        return ('Context(tol=%g, margin=%g, backend=%r, violation_threshold=%g)'
                % (self.tol, self.margin, self.backend, self.violation_threshold))


def active_context():
    return Context.active_context()


def resolve(tol=None, margin=None):
    """Resolve missing tolerance / margin from the active context.
    """
    return Context.active_context().resolve(tol, margin)


def leq(x, y, tol=None):
    """Tolerant ``x <= y``: passes iff x <= y + tol*(1 + |y|).
    """
    tol = resolve(tol)[0]
    return x <= y + tol * (1 + abs(y))


def geq(x, y, tol=None):
    """Tolerant ``x >= y``: passes iff x >= y - tol*(1 + |y|).
    """
    tol = resolve(tol)[0]
    return x >= y - tol * (1 + abs(y))
