"""
Numerical checks of Harnack-type matrix inequalities.

pyharnack evaluates the Harnack quotient

    H(A) = (I - A*)^-1 (I - A*A) (I - A)^-1

of a square complex matrix A, checks its closed forms and every known bound on
partial products of its eigenvalues, bounds the singular values of Cayley
transforms, and searches for counterexamples to the open j-conjecture.

Features:

* Self-contained dense linear algebra for small matrices (LU, Jacobi,
  one-sided Jacobi SVD, Hessenberg QR), numpy as the array layer
* Exact rational evaluation of the bound formulas
* Seeded, reproducible random contractions and searches
* A command-line front end (``pyharnack`` / ``python -m pyharnack``)

"""
__version__ = "1.0"

from .context import Context
from .errors import *
from .matrix import ComplexMatrix
from .linalg import (adjoint, determinant, general_eigenvalues, hermitian_eigenvalues,
                     inverse, lu_solve, singular_values, spectral_data)
from .sampling import Mode, RandomSpec, random_matrix, random_unitary
from .indexset import IndexSet
from .harnack import (bound_report, determinant_consistency, eigen_bound_J0,
                      fan_operator_check, harnack_quotient, identity_residuals,
                      lower_bound_family, multi_matrix_bound, naive_lower_bound_check,
                      tung_check, upper_bound_family)
from .cayley import (cayley, cayley_bounds, cayley_corollary, cayley_difference_bounds,
                     fan_hoffman_check)
from .conjectures import (SearchConfig, j_conjecture_slack, loewner_counterexample_check,
                          remark33_check, search, special_case_check, weak_bounds_check)
