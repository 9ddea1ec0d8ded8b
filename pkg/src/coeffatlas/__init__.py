"""coeffatlas: numerical and algebraic verification of sharp coefficient
bounds for the class of univalent functions f with 1 + z f''/f'
subordinate to e^z.

The package reproduces each published sharp bound three ways: closed
formulas, truncated-series pipelines, and global search over the
admissible parameter polydisk, and exposes the extremal functions that
attain them.
"""

from .cara import CaratheodoryCoeffs, TauTriple, coeffs_from_tau, schwarz_from_p
from .ceclass import (
    CoeffVector,
    a_from_c,
    f_from_schwarz,
    named_extremal,
    verify_membership,
)
from .functionals import (
    FeketeParams,
    GAMMA_DIFF_MAX,
    GAMMA_DIFF_MIN_ATTAINED,
    GAMMA_DIFF_MIN_REPORTED,
    HANKEL21_BOUND,
    fekete_lower,
    fekete_upper,
    fekete_value,
    gamma_bound,
    gamma_diff,
    hankel21_from_c,
    hankel21_from_gamma,
    hankel21_from_tau,
)
from .invlog import GammaVector, gamma_from_a, gamma_from_reversion, gamma_from_tau
from .lemmas import PhiParams, YParams, mm_bound, phi_lower, phi_upper, y_closed, y_oracle
from .optimizer import BoundReport, SearchSpec, envelope_scan, search
from .series import TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "CaratheodoryCoeffs",
    "TauTriple",
    "coeffs_from_tau",
    "schwarz_from_p",
    "CoeffVector",
    "a_from_c",
    "f_from_schwarz",
    "named_extremal",
    "verify_membership",
    "FeketeParams",
    "GAMMA_DIFF_MAX",
    "GAMMA_DIFF_MIN_ATTAINED",
    "GAMMA_DIFF_MIN_REPORTED",
    "HANKEL21_BOUND",
    "fekete_lower",
    "fekete_upper",
    "fekete_value",
    "gamma_bound",
    "gamma_diff",
    "hankel21_from_c",
    "hankel21_from_gamma",
    "hankel21_from_tau",
    "GammaVector",
    "gamma_from_a",
    "gamma_from_reversion",
    "gamma_from_tau",
    "PhiParams",
    "YParams",
    "mm_bound",
    "phi_lower",
    "phi_upper",
    "y_closed",
    "y_oracle",
    "BoundReport",
    "SearchSpec",
    "envelope_scan",
    "search",
    "TruncatedSeries",
    "__version__",
]
