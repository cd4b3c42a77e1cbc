"""Lower bounds for quasiconformal homogeneity constants of closed hyperbolic surfaces.

Special functions (elliptic integrals, the Grötzsch modulus, Teichmüller's
distortion), the bounds built from them, and an audit of the printed
constants.
"""

__version__ = "0.1.0"

from .errors import ConvergenceError, DomainError, NoSignChangeError, TargetOutOfRangeError
from .special import (
    dilatation_from_lambda,
    elliptic_k,
    grotzsch_mu,
    grotzsch_mu_inv,
    quasisymmetry_lambda,
    teichmuller_psi,
)
from .solvers import Bracket, RootResult, find_root, invert_monotone
from .bounds import BoundResult, D2Convention, TwistSpec
from .audit import AuditReport, run_audit
from .records import ClaimRecord, Status

__all__ = [
    "AuditReport",
    "BoundResult",
    "Bracket",
    "ClaimRecord",
    "ConvergenceError",
    "D2Convention",
    "DomainError",
    "NoSignChangeError",
    "RootResult",
    "Status",
    "TargetOutOfRangeError",
    "TwistSpec",
    "dilatation_from_lambda",
    "elliptic_k",
    "find_root",
    "grotzsch_mu",
    "grotzsch_mu_inv",
    "invert_monotone",
    "quasisymmetry_lambda",
    "run_audit",
    "teichmuller_psi",
]
