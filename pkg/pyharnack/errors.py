# -*- coding: utf-8 -*-
"""Exceptions raised by pyharnack.

Every exception derives from `HarnackError` and from the builtin exception
class that describes the failure, so ``except ValueError`` keeps working for
callers that do not care about the distinction.
"""


class HarnackError(Exception):
    """Base class for all pyharnack errors."""


class SingularMatrix(HarnackError, ValueError):
    """LU factorization found a pivot below the nonsingularity threshold.

    For inputs of the form I - A this means 1 is (numerically) an eigenvalue
    of A.
    """


class NotHermitian(HarnackError, ValueError):
    """A Hermitian matrix was required."""


class ConvergenceFailure(HarnackError, RuntimeError):
    """An iterative eigensolver exhausted its iteration budget."""


class InvalidSpec(HarnackError, ValueError):
    """Invalid random-generation or search configuration."""


class NotContractive(HarnackError, ValueError):
    """The operand is not a strict contraction with the required margin."""


class NotUnitary(HarnackError, ValueError):
    """A unitary matrix was required."""


class DomainViolation(HarnackError, ValueError):
    """The two-matrix bound requires the spectral norm of B A^-1 below 1."""


class InvalidIndexSet(HarnackError, ValueError):
    """Index set is not strictly increasing within [1, n]."""


class ParseError(HarnackError, ValueError):
    """Input text (matrix JSON, index lists) could not be parsed."""
