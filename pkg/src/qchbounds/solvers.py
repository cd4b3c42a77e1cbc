"""Bracketed scalar root finding and monotone inversion.

Every constant in the package comes out of a one-dimensional root of a
monotone function, so a single safeguarded bracketing method covers all of
them: regula falsi steps (Illinois variant) with a fall back to bisection
whenever a step fails to halve the bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .errors import ConvergenceError, NoSignChangeError, TargetOutOfRangeError

DEFAULT_TOL = 1e-12
MAX_ITER = 200

ScalarFn = Callable[[float], float]


def _opposite(u: float, v: float) -> bool:
    # sign test without forming the product (which may underflow)
    return (u < 0.0 < v) or (v < 0.0 < u)


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"bracket needs lo < hi, got [{self.lo}, {self.hi}]")
        if not (self.f_lo == 0.0 or self.f_hi == 0.0 or _opposite(self.f_lo, self.f_hi)):
            raise NoSignChangeError(
                f"no sign change on [{self.lo}, {self.hi}]: "
                f"f(lo)={self.f_lo!r}, f(hi)={self.f_hi!r}"
            )

    @classmethod
    def of(cls, f: ScalarFn, lo: float, hi: float) -> "Bracket":
        """Evaluate ``f`` at both ends and build the bracket."""
        return cls(lo, hi, f(lo), f(hi))


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int


def find_root(
    f: ScalarFn,
    bracket: Union[Bracket, tuple],
    tol: float = DEFAULT_TOL,
    xtol: float = 0.0,
    maxiter: int = MAX_ITER,
) -> RootResult:
    """Find a zero of ``f`` inside a sign-changing bracket.

    Stops as soon as ``|f(x)| <= tol``, or once the bracket is narrower than
    ``xtol`` (disabled by default), in which case the midpoint is returned. If the bracket shrinks to adjacent floats
    without meeting ``tol`` a :class:`ConvergenceError` is raised, so a returned
    residual always honours ``tol`` unless ``xtol`` stopped the iteration.
    """
    if not isinstance(bracket, Bracket):
        lo, hi = bracket
        bracket = Bracket.of(f, float(lo), float(hi))

    a, b = bracket.lo, bracket.hi
    fa, fb = bracket.f_lo, bracket.f_hi
    # Illinois weights act on these copies; fa/fb keep the true values
    wa, wb = fa, fb

    if abs(fa) <= abs(fb):
        best, fbest = a, fa
    else:
        best, fbest = b, fb
    if abs(fbest) <= tol:
        return RootResult(best, fbest, 0)

    bisect = False
    last_side = 0
    for it in range(1, maxiter + 1):
        width = b - a
        if bisect:
            x = a + 0.5 * width
        else:
            x = b - wb * (b - a) / (wb - wa)
            if not a < x < b:
                x = a + 0.5 * width
        if not a < x < b:
            # nothing representable strictly inside
            if abs(fbest) <= tol:
                return RootResult(best, fbest, it)
            raise ConvergenceError(
                f"bracket collapsed at {best!r} with residual {fbest!r} > tol {tol!r}"
            )

        fx = f(x)
        if math.isnan(fx):
            raise ConvergenceError(f"function returned NaN at x={x!r}")
        if abs(fx) < abs(fbest):
            best, fbest = x, fx
        if abs(fx) <= tol:
            return RootResult(x, fx, it)

        if _opposite(fx, fa):
            b, fb, wb = x, fx, fx
            if last_side == 1:
                wa *= 0.5
            last_side = 1
        else:
            a, fa, wa = x, fx, fx
            if last_side == -1:
                wb *= 0.5
            last_side = -1

        bisect = (b - a) > 0.5 * width
        if xtol > 0.0 and b - a <= xtol:
            mid = a + 0.5 * (b - a)
            return RootResult(mid, f(mid), it)

    raise ConvergenceError(
        f"no convergence after {maxiter} iterations (best {best!r}, residual {fbest!r})"
    )


def invert_monotone(
    f: ScalarFn,
    target: float,
    lo: float,
    hi: float,
    tol: float = DEFAULT_TOL,
) -> float:
    """Solve ``f(x) = target`` for ``f`` strictly monotone on ``[lo, hi]``."""
    f_lo = f(lo) - target
    f_hi = f(hi) - target
    if not (f_lo == 0.0 or f_hi == 0.0 or _opposite(f_lo, f_hi)):
        raise TargetOutOfRangeError(
            f"target {target!r} outside [{f(lo)!r}, {f(hi)!r}] on [{lo}, {hi}]"
        )
    g = lambda x: f(x) - target  # noqa: E731
    return find_root(g, Bracket(lo, hi, f_lo, f_hi), tol=tol).root
