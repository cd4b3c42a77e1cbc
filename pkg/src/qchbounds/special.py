"""Elliptic integrals, the Grötzsch ring modulus and Teichmüller's distortion.

Everything is built on the arithmetic-geometric mean. With ``k' = sqrt(1-k^2)``
formed as ``sqrt((1-k)(1+k))`` the complete integral of the first kind is
``K(k) = pi / (2 agm(1, k'))`` and the Grötzsch modulus is

    mu(r) = (pi/2) K(r') / K(r) = pi agm(1, r') / (2 agm(1, r)),

so neither the near-singular ``K(k -> 1)`` nor a cancelling ``1 - r^2`` is ever
evaluated directly.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .solvers import Bracket, find_root

PI = math.pi
HALF_PI = 0.5 * math.pi
QUARTER_PI_SQ = 0.25 * math.pi * math.pi
LOG4 = math.log(4.0)
SQRT_HALF = math.sqrt(0.5)

AGM_RTOL = 1e-15
AGM_MAXITER = 64

# mu(r) for r < 1e-300 is log(4/r) to double precision; beyond this
# underflow makes the radius meaningless.
_R_MIN = 1e-300
_R_MAX = math.nextafter(1.0, 0.0)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers."""
    if not (a > 0.0 and b > 0.0):
        raise DomainError(f"agm needs positive arguments, got {a!r}, {b!r}")
    for _ in range(AGM_MAXITER):
        if abs(a - b) <= AGM_RTOL * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return 0.5 * (a + b)


def _complement(r: float) -> float:
    return math.sqrt((1.0 - r) * (1.0 + r))


def elliptic_k(k: float) -> float:
    """Complete elliptic integral of the first kind, modulus ``k`` in [0, 1)."""
    if not 0.0 <= k < 1.0:
        raise DomainError(f"elliptic_k needs 0 <= k < 1, got {k!r}")
    if k == 0.0:
        return HALF_PI
    return PI / (2.0 * agm(1.0, _complement(k)))


def _mu_core(r: float, rc: float) -> float:
    # r and its complement must both be accurate; valid for any 0 < r < 1
    return PI * agm(1.0, rc) / (2.0 * agm(1.0, r))


def grotzsch_mu(r: float) -> float:
    """Modulus of the Grötzsch ring, the unit disk cut from the ray [1/r, inf]."""
    if not 0.0 < r < 1.0:
        raise DomainError(f"grotzsch_mu needs 0 < r < 1, got {r!r}")
    rc = _complement(r)
    if r > SQRT_HALF:
        return QUARTER_PI_SQ / _mu_core(rc, r)
    return _mu_core(r, rc)


def grotzsch_mu_of_complement(rc: float) -> float:
    """``mu(sqrt(1 - rc^2))`` computed from the complementary radius ``rc``.

    Useful when ``sqrt(1 - rc^2)`` itself rounds to 1 in double precision.
    """
    if not 0.0 < rc < 1.0:
        raise DomainError(f"complementary radius must lie in (0, 1), got {rc!r}")
    r = _complement(rc)
    if r > SQRT_HALF:
        return QUARTER_PI_SQ / _mu_core(rc, r)
    return _mu_core(r, rc)


def _mu_inv_small(y: float) -> float:
    # y >= pi/2, so the radius lies in (0, 1/sqrt(2)] and mu is well conditioned
    seed = 4.0 * math.exp(-y)
    lo = max(_R_MIN, 0.5 * seed)
    hi = min(SQRT_HALF, 2.0 * seed)

    def f(r: float) -> float:
        return grotzsch_mu(r) - y

    f_lo, f_hi = f(lo), f(hi)
    while f_lo < 0.0 and lo > _R_MIN:
        lo = max(_R_MIN, 0.5 * lo)
        f_lo = f(lo)
    while f_hi > 0.0 and hi < SQRT_HALF:
        hi = min(SQRT_HALF, 2.0 * hi)
        f_hi = f(hi)
    if f_lo < 0.0:
        raise DomainError(f"mu^-1({y!r}) underflows double precision")
    if f_hi > 0.0:
        # only reachable through rounding right at y = pi/2
        return SQRT_HALF
    # well inside the 1e-12 contract while staying above the AGM rounding noise
    tol = min(1e-12, 2e-14 * y)
    return find_root(f, Bracket(lo, hi, f_lo, f_hi), tol=tol).root


def grotzsch_mu_inv(y: float) -> float:
    """Radius ``r`` with ``grotzsch_mu(r) == y``.

    For ``y < pi/2`` the reflection ``mu(r) mu(r') = pi^2/4`` turns the problem
    into one for the complementary radius, which keeps the solve well
    conditioned. Raises :class:`DomainError` when the answer is not
    representable as a double strictly inside (0, 1).
    """
    if not (y > 0.0 and math.isfinite(y)):
        raise DomainError(f"grotzsch_mu_inv needs finite y > 0, got {y!r}")
    if y == HALF_PI:
        return SQRT_HALF
    if y > HALF_PI:
        return _mu_inv_small(y)
    s = _mu_inv_small(QUARTER_PI_SQ / y)
    r = _complement(s)
    if r >= 1.0:
        raise DomainError(f"mu^-1({y!r}) rounds to 1 in double precision")
    return r


def _coth_sq(x: float) -> float:
    t = math.tanh(x)
    return 1.0 / (t * t)


def teichmuller_psi(d: float) -> float:
    """Teichmüller's distortion ``coth^2(pi^2 / (4 mu(e^-d)))``.

    The minimal dilatation of a self-map of the hyperbolic plane that is the
    identity on the boundary and moves some point a distance ``d``.
    """
    if not d >= 0.0:
        raise DomainError(f"teichmuller_psi needs d >= 0, got {d!r}")
    if d == 0.0:
        return 1.0
    r = math.exp(-d)
    if r >= 1.0:
        # psi(d) = 1 + d/2 + ..., already 1 in double precision
        return 1.0
    if r < _R_MIN:
        m = d + LOG4
    else:
        m = grotzsch_mu(r)
    return _coth_sq(QUARTER_PI_SQ / m)


def teichmuller_psi_alt(d: float) -> float:
    """The same distortion in its second form, ``coth^2(mu(sqrt(1 - e^-2d)))``."""
    if not d >= 0.0:
        raise DomainError(f"teichmuller_psi_alt needs d >= 0, got {d!r}")
    if d == 0.0:
        return 1.0
    rc = math.exp(-d)
    if rc >= 1.0:
        return 1.0
    if rc < _R_MIN:
        return _coth_sq(QUARTER_PI_SQ / (d + LOG4))
    return _coth_sq(grotzsch_mu_of_complement(rc))


def quasisymmetry_lambda(K: float) -> float:
    """Sharp boundary quasisymmetry modulus ``1/mu^-1(pi K/2)^2 - 1``."""
    if not K >= 1.0:
        raise DomainError(f"quasisymmetry_lambda needs K >= 1, got {K!r}")
    if K == 1.0:
        return 1.0
    r = grotzsch_mu_inv(HALF_PI * K)
    # 1/r^2 - 1 == (r'/r)^2
    ratio = _complement(r) / r
    try:
        # lambda >= 1 for K >= 1; rounding just above K = 1 can dip under it
        return max(1.0, ratio * ratio)
    except OverflowError:
        raise DomainError(f"lambda({K!r}) overflows double precision") from None


def dilatation_from_lambda(lam: float) -> float:
    """Invert :func:`quasisymmetry_lambda`: ``(2/pi) mu(sqrt(1/(lam+1)))``."""
    if not lam >= 1.0:
        raise DomainError(f"dilatation_from_lambda needs lam >= 1, got {lam!r}")
    if lam == 1.0:
        return 1.0
    r = math.sqrt(1.0 / (lam + 1.0))
    return grotzsch_mu(r) / HALF_PI
