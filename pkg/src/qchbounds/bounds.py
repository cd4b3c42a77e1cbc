"""Lower bounds on quasiconformal homogeneity constants.

Each function instantiates one bound for surfaces that are homogeneous with
respect to a restricted family of mapping classes (finite, periodic,
pseudo-Anosov, multi-twist, torsion-free, ...). Values are dilatations
``K >= 1`` unless the function says it returns a log-dilatation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import DomainError
from .geometry import arccosh1p, min_diameter_from_count, _check_genus
from .records import ClaimRecord, inequality_claim, value_claim
from .solvers import DEFAULT_TOL, find_root
from .special import grotzsch_mu, teichmuller_psi

LOG2 = math.log(2.0)
LOG4 = math.log(4.0)

FLM_LOG_BOUND = 0.197
IDENTITY_CLASS_BOUND = 1.626

# printed reference figures the audit compares against
REF_ELL0 = 1.8
REF_PSI_ELL0 = 1.12
REF_L = 1.33994
REF_K_D = 1.09297


class TheoremId(str, Enum):
    COUNTING = "counting"
    FINITE = "finite-subgroup"
    PERIODIC = "periodic"
    PSEUDO_ANOSOV = "pseudo-anosov"
    PENNER = "penner"
    MULTI_TWIST = "multi-twist"
    EMBEDDED_DISK = "embedded-disk"
    MULTI_TWIST_CONSTANT = "multi-twist-constant"
    TORSION_FREE = "torsion-free"
    TORELLI_THRESHOLD = "torelli-threshold"
    FLM = "flm"
    HYPOTHETICAL_COUNTING = "hypothetical-counting"
    MU_G = "mu-g"


class Unit(str, Enum):
    DILATATION = "K"
    LOG_DILATATION = "log K"
    GENUS = "genus"
    SCALAR = "scalar"


@dataclass(frozen=True)
class BoundResult:
    """A computed bound, tagged with what it bounds and the inputs used.

    ``unit`` keeps dilatations and log-dilatations apart; SCALAR is for
    auxiliary ratios such as ``phi`` that may drop below 1.
    """

    value: float
    theorem_id: TheoremId
    inputs: dict = field(default_factory=dict)
    unit: Unit = Unit.DILATATION

    def __post_init__(self):
        if self.unit is Unit.DILATATION and not self.value >= 1.0 - 1e-12:
            raise ValueError(f"dilatation must be >= 1, got {self.value!r}")
        if self.unit is Unit.LOG_DILATATION and not self.value >= 0.0:
            raise ValueError(f"log-dilatation must be >= 0, got {self.value!r}")

    @property
    def log_scale(self) -> bool:
        return self.unit is Unit.LOG_DILATATION


@dataclass(frozen=True)
class TwistSpec:
    """Twist power ``m`` and length ``ell`` of the curve maximising ``|m_i| ell_i``."""

    m: int
    ell: float

    def __post_init__(self):
        if isinstance(self.m, bool) or int(self.m) != self.m or self.m < 1:
            raise DomainError(f"twist power must be an integer >= 1, got {self.m!r}")
        if not (self.ell > 0.0 and math.isfinite(self.ell)):
            raise DomainError(f"curve length must be positive, got {self.ell!r}")


class D2Convention(str, Enum):
    """How the embedded-disk constant ``2 log(1 + sqrt 2)`` enters the systole bound.

    DIAMETER uses it as printed; RADIUS treats it as a radius, doubling it.
    """

    DIAMETER = "diameter"
    RADIUS = "radius"

    @property
    def d2(self) -> float:
        base = 2.0 * math.log1p(math.sqrt(2.0))
        return base if self is D2Convention.DIAMETER else 2.0 * base


@dataclass(frozen=True)
class NamedConstants:
    flm_log_bound: float = FLM_LOG_BOUND
    identity_class_bound: float = IDENTITY_CLASS_BOUND

    @staticmethod
    def hurwitz(g: int) -> int:
        """Maximal order of a finite group of surface automorphisms."""
        return 84 * (_check_genus(g) - 1)

    @staticmethod
    def wiman(g: int) -> int:
        """Maximal order of a single periodic automorphism."""
        return 4 * _check_genus(g) + 2


CONSTANTS = NamedConstants()


def _sqrt_psi(d: float) -> float:
    return math.sqrt(teichmuller_psi(d))


# -- counting arguments -----------------------------------------------------


def counting_bound(g: int, n: float) -> float:
    """Dilatation forced when at most ``n`` mapping classes have ``K(f) < K``."""
    return _sqrt_psi(min_diameter_from_count(g, n))


def finite_subgroup_bound(g: int) -> BoundResult:
    n = CONSTANTS.hurwitz(g)
    return BoundResult(counting_bound(g, n), TheoremId.FINITE, {"g": g, "n": n})


def periodic_bound(g: int) -> BoundResult:
    # smallest at g = 2, where n = 10
    n = CONSTANTS.wiman(g)
    return BoundResult(counting_bound(g, n), TheoremId.PERIODIC, {"g": g, "n": n})


def hypothetical_counting_bound(C: float) -> float:
    """Limit bound if orbit counts in a fixed Teichmüller ball grow at most like ``C g``."""
    if not C > 0.0:
        raise DomainError(f"counting constant must be > 0, got {C!r}")
    return _sqrt_psi(2.0 * arccosh1p(2.0 / C))


# -- pseudo-Anosov ------------------------------------------------------------


def mu_g(g: int, K: float) -> float:
    """Counting bound once ``n <= 2m + 1`` powers are forced below ``K``.

    ``m`` is the number of powers allowed by Penner's minimal translation
    length ``log 2 / (12 (g - 1))``.
    """
    g = _check_genus(g)
    if not K >= 1.0:
        raise DomainError(f"dilatation must be >= 1, got {K!r}")
    t = 2.0 * LOG2 * (g - 1) / (12.0 * (g - 1) * math.log(K) + LOG2)
    return _sqrt_psi(2.0 * arccosh1p(t))


def pseudo_anosov_constant(g: int = 2) -> BoundResult:
    """Unique fixed point of ``K = mu_g(K)``; genus 2 gives the uniform constant."""
    g = _check_genus(g)
    f = lambda K: K - mu_g(g, K)  # noqa: E731
    res = find_root(f, (1.0 + 1e-6, 10.0), tol=DEFAULT_TOL)
    return BoundResult(
        res.root,
        TheoremId.PSEUDO_ANOSOV,
        {"g": g, "mu_g_at_root": mu_g(g, res.root), "residual": res.residual},
    )


def penner_bound(chi: int) -> float:
    """Minimal log-dilatation ``log 2 / |chi|`` of a pseudo-Anosov map."""
    if isinstance(chi, bool) or int(chi) != chi or chi > -1:
        raise DomainError(f"Euler characteristic must be a negative integer, got {chi!r}")
    return LOG2 / abs(chi)


# -- multi-twists -------------------------------------------------------------


def _logsumexp(*xs: float) -> float:
    top = max(xs)
    return top + math.log(sum(math.exp(x - top) for x in xs))


_LOG_R_MIN = math.log(1e-300)


def _dilatation_at_log_radius_sq(log_r2: float) -> float:
    log_r = 0.5 * log_r2
    if log_r < _LOG_R_MIN:
        # mu(r) = log(4/r) to double precision this far out
        mu = LOG4 - log_r
    else:
        mu = grotzsch_mu(math.exp(log_r))
    return mu / (0.5 * math.pi)


def multi_twist_bound(t: TwistSpec) -> float:
    """Dilatation bound for a map homotopic to a multi-twist (left-twist branch)."""
    m, ell = t.m, t.ell
    # r^2 = 2 / (2 + e^((m-1) ell) + e^((m-1/2) ell))
    log_r2 = LOG2 - _logsumexp(LOG2, (m - 1) * ell, (m - 0.5) * ell)
    return _dilatation_at_log_radius_sq(log_r2)


def multi_twist_right_branch(t: TwistSpec) -> float:
    """The companion right-twist estimate; never smaller than the left branch."""
    m, ell = t.m, t.ell
    # r^2 = a / (a + 2 e^(m ell)) with a = 1 + e^(ell/2)
    log_a = math.log1p(math.exp(0.5 * ell)) if ell < 1400 else 0.5 * ell
    log_r2 = log_a - _logsumexp(log_a, LOG2 + m * ell)
    return _dilatation_at_log_radius_sq(log_r2)


def psi_mt(ell: float) -> float:
    """Single Dehn twist bound as a function of the systole."""
    return multi_twist_bound(TwistSpec(1, ell))


def phi(ell: float, conv: D2Convention = D2Convention.DIAMETER) -> float:
    """Dilatation forced by a systole of length ``ell`` through the embedded-disk bound."""
    if not (ell > 0.0 and math.isfinite(ell)):
        raise DomainError(f"systole must be positive, got {ell!r}")
    conv = D2Convention(conv)
    c = 2.0 * LOG2 + 1.0  # log(2e) plus the log 2 from the factor 1/2

    def g(x: float) -> float:
        return math.log(math.tanh(0.5 * x)) - c

    return g(ell) / g(conv.d2)


def multi_twist_constant(
    conv: D2Convention = D2Convention.DIAMETER,
) -> tuple[float, BoundResult]:
    """Crossing ``L`` of the decreasing ``phi`` and increasing ``psi_mt``."""
    conv = D2Convention(conv)
    d2 = conv.d2
    f = lambda x: phi(x, conv) - psi_mt(x)  # noqa: E731
    res = find_root(f, (1e-6, d2), tol=DEFAULT_TOL)
    L = res.root
    kd = phi(L, conv)
    return L, BoundResult(
        kd,
        TheoremId.MULTI_TWIST_CONSTANT,
        {"L": L, "psi_at_L": psi_mt(L), "d2": d2, "residual": res.residual},
    )


# -- torsion-free ------------------------------------------------------------


def torsion_free_bound(g: int) -> float:
    """Log-dilatation bound ``1 / (7000 g^2)``."""
    g = _check_genus(g)
    return 1.0 / (7000.0 * g * g)


def _both_conventions(fn) -> str:
    parts = []
    for c in D2Convention:
        parts.append(f"{c.value}: {fn(c):.12g}")
    return "; ".join(parts)


def torsion_free_audit(
    g: int,
    ell0: float = REF_ELL0,
    conv: D2Convention = D2Convention.DIAMETER,
) -> list[ClaimRecord]:
    """Check each numeric link of the torsion-free argument at genus ``g``.

    The two links that go through ``phi`` depend on how the embedded-disk
    constant is read and are reported SENSITIVE with both readings attached.
    """
    g = _check_genus(g)
    conv = D2Convention(conv)
    target = torsion_free_bound(g)
    log_phi = math.log(phi(ell0, conv))
    prefix = f"torsion_free.g{g}"

    rec_a = inequality_claim(
        f"{prefix}.log_phi",
        f"log phi({ell0:g}) > 1",
        log_phi,
        ">",
        1.0,
        sensitive=True,
        notes="log phi(ell0) by convention: "
        + _both_conventions(lambda c: math.log(phi(ell0, c))),
    )
    rec_b = value_claim(
        f"{prefix}.psi",
        f"psi_mt({ell0:g}) = 1.12",
        REF_PSI_ELL0,
        psi_mt(ell0),
        0.02,
    )
    chi_abs = 2 * g - 2
    rec_c = inequality_claim(
        f"{prefix}.penner_link",
        "log 4 / (2 |chi|) > 1/(7000 g^2)",
        LOG4 / (2.0 * chi_abs),
        ">",
        target,
        notes=f"undivided log 4/|chi| = {LOG4 / chi_abs:.12g}",
    )
    rec_d = inequality_claim(
        f"{prefix}.multitwist_link",
        "log phi(ell0) / (800 g^2) > 1/(7000 g^2)",
        log_phi / (800.0 * g * g),
        ">",
        target,
        sensitive=True,
        notes="lhs by convention: "
        + _both_conventions(lambda c: math.log(phi(ell0, c)) / (800.0 * g * g)),
    )
    return [rec_a, rec_b, rec_c, rec_d]


# -- Torelli / congruence subgroups ----------------------------------------


def flm_bound() -> float:
    """Log-dilatation floor for Torelli or congruence classes moving a shortest curve."""
    return FLM_LOG_BOUND


def torelli_threshold(A: float, C0: float) -> int:
    """Least genus ``g0 >= 2`` with ``4 pi (g0 - 1) / (A log g0) > 2 sinh C0``.

    ``A`` is the constant in the logarithmic systole bound and ``C0`` the
    quasi-geodesic stability distance; neither has a closed form, so both are
    supplied by the caller.
    """
    if not (A > 0.0 and math.isfinite(A)):
        raise DomainError(f"A must be positive, got {A!r}")
    if not (C0 >= 0.0 and math.isfinite(C0)):
        raise DomainError(f"C0 must be >= 0, got {C0!r}")
    try:
        rhs = 2.0 * math.sinh(C0)
    except OverflowError:
        raise DomainError(f"sinh({C0!r}) overflows") from None

    def ok(g: int) -> bool:
        return 4.0 * math.pi * (g - 1) / (A * math.log(g)) > rhs

    # (g - 1)/log g is increasing for g >= 2, so gallop then bisect
    if ok(2):
        return 2
    lo, hi = 2, 4
    while not ok(hi):
        lo, hi = hi, 2 * hi
        if hi > 1 << 62:
            raise DomainError(f"threshold genus too large for C0={C0!r}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi
