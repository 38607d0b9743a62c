"""Mode parameters of de Sitter alpha-vacua.

Every state used downstream depends on the physical inputs ``(alpha, k, H)``
only through the thermal parameter ``q = tanh r = exp(-pi k / H)`` and the
vacuum deformation ``f``.  Their product ``T = q f`` is the single number that
fixes the joint Alice/Rob-I density matrix.

The Euclidean (Bunch-Davies) vacuum is represented by ``alpha = EUCLIDEAN``
(negative infinity), for which ``f == 1`` exactly.
"""

from __future__ import annotations

import bisect
import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidMode, InvalidParameter, TruncationWarning

EUCLIDEAN = -math.inf

DEFAULT_TAIL_TOL = 1e-12
DEFAULT_N_CAP = 4096


@dataclass(frozen=True)
class ModeSpec:
    """Physical inputs for one field mode.

    Build it either from a wavenumber and Hubble scale (same units), or with
    :meth:`from_q` when the thermal parameter is known directly.
    """

    alpha: float
    wavenumber_k: float | None = None
    hubble_H: float | None = None
    q_direct: float | None = None

    def __post_init__(self):
        alpha = float(self.alpha)
        if math.isnan(alpha) or alpha >= 0.0:
            raise InvalidMode(f"alpha must be < 0 or EUCLIDEAN, got {self.alpha!r}")
        if self.q_direct is None:
            if self.wavenumber_k is None or self.hubble_H is None:
                raise InvalidMode("need either (wavenumber_k, hubble_H) or q_direct")
            if not self.wavenumber_k > 0:
                raise InvalidMode(f"wavenumber_k must be positive, got {self.wavenumber_k!r}")
            if not self.hubble_H > 0:
                raise InvalidMode(f"hubble_H must be positive, got {self.hubble_H!r}")
        else:
            if self.wavenumber_k is not None or self.hubble_H is not None:
                raise InvalidMode("q_direct excludes wavenumber_k/hubble_H")
            if not 0.0 <= self.q_direct < 1.0:
                raise InvalidMode(f"q must lie in [0, 1), got {self.q_direct!r}")

    @classmethod
    def from_q(cls, alpha: float, q: float) -> "ModeSpec":
        return cls(alpha=alpha, q_direct=q)

    @property
    def q(self) -> float:
        if self.q_direct is not None:
            return float(self.q_direct)
        return math.exp(-math.pi * self.wavenumber_k / self.hubble_H)


@dataclass(frozen=True)
class EffectiveParams:
    q: float
    r: float
    f: float
    T: float
    a: float

    @classmethod
    def from_T(cls, T: float) -> "EffectiveParams":
        """Euclidean representative (``f = 1``) of a given effective parameter."""
        if not 0.0 <= T < 1.0:
            raise InvalidParameter(f"T must lie in [0, 1), got {T!r}")
        return cls(q=float(T), r=math.atanh(T), f=1.0, T=float(T), a=0.0)


def effective_parameters(mode: ModeSpec) -> EffectiveParams:
    """Squeezing and deformation quantities of a mode.

    ``T`` is evaluated in the Moebius form ``(q + a) / (1 + a q)`` with
    ``a = exp(alpha)``, which stays accurate as either ``q`` or ``a`` goes to
    zero.  ``f`` is infinite when ``q == 0`` and ``a > 0``.
    """
    q = mode.q
    if not 0.0 <= q < 1.0:
        raise InvalidMode(f"derived q={q!r} outside [0, 1)")
    alpha = float(mode.alpha)
    if alpha >= 0.0:
        raise InvalidMode("alpha = 0 gives T = 1; approach it from below instead")
    a = 0.0 if alpha == EUCLIDEAN else math.exp(alpha)
    T = (q + a) / (1.0 + a * q)
    if a == 0.0:
        f = 1.0
    elif q == 0.0:
        f = math.inf
    else:
        f = (1.0 + a / q) / (1.0 + a * q)
    return EffectiveParams(q=q, r=math.atanh(q), f=f, T=T, a=a)


def alpha_for_T(T: float, q: float) -> float:
    """Invert the Moebius form: the ``alpha`` giving effective parameter ``T`` at ``q``."""
    if not 0.0 <= q <= T < 1.0:
        raise InvalidParameter(f"need 0 <= q <= T < 1, got q={q!r}, T={T!r}")
    a = (T - q) / (1.0 - T * q)
    return EUCLIDEAN if a == 0.0 else math.log(a)


def tail_mass(T: float, n_max: int) -> float:
    """Probability mass of the joint state above pair level ``n_max``.

    Closed form of sum_{m > n_max} (1/2) T^2m (1 - T^2) [1 + (m + 1)(1 - T^2)],
    i.e. (1/2) x^(N+1) [N + 3 - (N + 1) x] with x = T^2.
    """
    x = T * T
    return 0.5 * x ** (n_max + 1) * (n_max + 3 - (n_max + 1) * x)


class Truncation(NamedTuple):
    n_max: int
    tail_mass: float
    clamped: bool


def truncation_level(
    T: float, tail_tol: float = DEFAULT_TAIL_TOL, n_cap: int = DEFAULT_N_CAP
) -> Truncation:
    """Smallest ``n_max`` whose neglected mass is below ``tail_tol``.

    Clamps at ``n_cap`` (with ``clamped=True`` and a :class:`TruncationWarning`)
    when the tolerance cannot be met.
    """
    if not 0.0 <= T < 1.0:
        raise InvalidParameter(f"T must lie in [0, 1), got {T!r}")
    if not tail_tol > 0:
        raise InvalidParameter("tail_tol must be positive")
    if n_cap < 8:
        raise InvalidParameter("n_cap must be at least 8")
    # tail_mass is strictly decreasing in n_max for T < 1
    n = bisect.bisect_left(range(n_cap + 1), True, key=lambda m: tail_mass(T, m) < tail_tol)
    if n > n_cap:
        warnings.warn(
            f"T={T!r}: tail mass {tail_mass(T, n_cap):.3e} at n_cap={n_cap} exceeds {tail_tol:.1e}",
            TruncationWarning,
            stacklevel=2,
        )
        return Truncation(n_cap, tail_mass(T, n_cap), True)
    return Truncation(n, tail_mass(T, n), False)
