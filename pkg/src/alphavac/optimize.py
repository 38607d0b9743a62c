"""Derivative-free 1-D refinement used by the discord minimizer."""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class GoldenResult(NamedTuple):
    x: float
    fun: float
    nfev: int


def golden_section(
    func: Callable[[float], float],
    lo: float,
    hi: float,
    ftol: float = 1e-10,
    xtol: float = 1e-12,
    max_iter: int = 200,
) -> GoldenResult:
    """Minimize a unimodal ``func`` on ``[lo, hi]``.

    Stops once the four bracketing function values agree to ``ftol``, the
    bracket is narrower than ``xtol``, or ``max_iter`` is reached.  The best
    point evaluated (endpoints included) is returned, so the result is never
    worse than ``min(func(lo), func(hi))``.
    """
    f_lo, f_hi = func(lo), func(hi)
    x1 = hi - INV_PHI * (hi - lo)
    x2 = lo + INV_PHI * (hi - lo)
    f1, f2 = func(x1), func(x2)
    nfev = 4
    best = min((f_lo, lo), (f1, x1), (f2, x2), (f_hi, hi))

    for _ in range(max_iter):
        spread = max(f_lo, f1, f2, f_hi) - min(f_lo, f1, f2, f_hi)
        if spread < ftol or hi - lo < xtol:
            break
        if f1 <= f2:
            hi, f_hi = x2, f2
            x2, f2 = x1, f1
            x1 = hi - INV_PHI * (hi - lo)
            f1 = func(x1)
            best = min(best, (f1, x1))
        else:
            lo, f_lo = x1, f1
            x1, f1 = x2, f2
            x2 = lo + INV_PHI * (hi - lo)
            f2 = func(x2)
            best = min(best, (f2, x2))
        nfev += 1

    return GoldenResult(best[1], best[0], nfev)
