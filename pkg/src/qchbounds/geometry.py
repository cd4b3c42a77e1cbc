"""Elementary hyperbolic-surface quantities: areas, diameters, length bounds."""

from __future__ import annotations

import math

from .errors import DomainError

LOG4 = math.log(4.0)


def _check_genus(g: int) -> int:
    if isinstance(g, bool) or int(g) != g or g < 2:
        raise DomainError(f"genus must be an integer >= 2, got {g!r}")
    return int(g)


def _check_dilatation(K: float) -> None:
    if not K >= 1.0:
        raise DomainError(f"dilatation must be >= 1, got {K!r}")


def _check_length(ell: float) -> None:
    if not (ell > 0.0 and math.isfinite(ell)):
        raise DomainError(f"length must be positive and finite, got {ell!r}")


def arccosh1p(t: float) -> float:
    """``arccosh(1 + t)`` for ``t >= 0``, accurate as ``t -> 0``.

    Written as ``log(x + sqrt(x^2 - 1))`` with ``x = 1 + t`` and the
    cancellation in ``x^2 - 1`` removed. Small negative ``t`` from rounding
    is clamped to 0.
    """
    t = max(t, 0.0)
    return math.log1p(t + math.sqrt(t * (t + 2.0)))


def disk_area(d: float) -> float:
    """Area of a hyperbolic disk of diameter ``d``."""
    if not d >= 0.0:
        raise DomainError(f"diameter must be >= 0, got {d!r}")
    # 2 pi (cosh(d/2) - 1) == 4 pi sinh^2(d/4), no cancellation at small d
    s = math.sinh(0.25 * d)
    return 4.0 * math.pi * s * s


def surface_area(g: int) -> float:
    """Gauss-Bonnet area ``4 pi (g - 1)`` of a closed genus-``g`` surface."""
    g = _check_genus(g)
    return 4.0 * math.pi * (g - 1)


def neighborhood_area(ell: float, c: float) -> float:
    """Area of the ``c``-neighbourhood of a geodesic segment of length ``ell``."""
    _check_length(ell)
    if not c >= 0.0:
        raise DomainError(f"neighbourhood radius must be >= 0, got {c!r}")
    return 2.0 * ell * math.sinh(c)


def min_diameter_from_count(g: int, n: float) -> float:
    """Smallest diameter a set must have if ``n`` copies cover a genus-``g`` surface.

    Solves ``disk_area(d) = surface_area(g) / n`` for ``d``, giving
    ``2 arccosh(2 (g - 1) / n + 1)``. ``n`` may be ``math.inf``.
    """
    g = _check_genus(g)
    if not n >= 1:
        raise DomainError(f"count must be >= 1, got {n!r}")
    return 2.0 * arccosh1p(2.0 * (g - 1) / n)


def diameter_upper_bound(K: float, ell: float) -> float:
    """Largest embedded-ball diameter of a K-qc homogeneous surface with systole ``ell``."""
    _check_dilatation(K)
    _check_length(ell)
    return K * ell + 2.0 * K * LOG4


def quasi_isometry_params(K: float) -> tuple[float, float]:
    """Multiplicative and additive constants of the quasi-isometry a K-qc map induces."""
    _check_dilatation(K)
    return K, K * LOG4


def wolpert_interval(ell: float, K: float) -> tuple[float, float]:
    """Range of lengths a curve of length ``ell`` can have after a K-qc map."""
    _check_length(ell)
    _check_dilatation(K)
    return ell / K, K * ell
