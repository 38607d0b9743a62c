"""Truncated Fock-space states for Alice's qubit and Rob's region-I mode.

Joint matrices use the flat index ``a * n_dim + n`` with Alice's excitation
``a`` in {0, 1} and Rob's region-I occupation ``n`` in ``range(n_dim)``, where
``n_dim = n_max + 2`` so the ``|1, n_max + 1>`` entries fit.

Truncated objects are never renormalized; the neglected probability mass is
carried along as ``tail_mass`` / ``trace_deficit``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import BasisMismatch, InvalidParameter
from .vacuum import tail_mass


class Basis(enum.Enum):
    JOINT = "joint"
    ALICE = "alice"
    ROB = "rob"


@dataclass(frozen=True, eq=False)
class TruncatedState:
    """Two-mode pair state ``sum_n c_n |n + excitation>_I |n>_II``.

    ``amplitudes[n]`` is the coefficient of pair level ``n``.
    """

    amplitudes: np.ndarray
    excitation: int
    T: float
    tail_mass: float

    @property
    def n_max(self) -> int:
        return len(self.amplitudes) - 1

    @property
    def norm_squared(self) -> float:
        return float(self.amplitudes @ self.amplitudes)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    entries: np.ndarray
    basis: Basis
    trace_deficit: float = 0.0

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @property
    def n_dim(self) -> int:
        """Rob's Fock dimension (JOINT and ROB bases only)."""
        if self.basis is Basis.JOINT:
            return self.dim // 2
        if self.basis is Basis.ROB:
            return self.dim
        raise BasisMismatch("ALICE basis carries no Fock index")

    def trace(self) -> float:
        return float(np.trace(self.entries).real)


def _check(T, n_max):
    if not 0.0 <= T < 1.0:
        raise InvalidParameter(f"T must lie in [0, 1), got {T!r}")
    if int(n_max) != n_max or n_max < 0:
        raise InvalidParameter(f"n_max must be a nonnegative integer, got {n_max!r}")


def _require_joint(rho: DensityMatrix):
    if rho.basis is not Basis.JOINT:
        raise BasisMismatch(f"expected a JOINT density matrix, got {rho.basis.name}")
    if rho.dim % 2:
        raise BasisMismatch(f"JOINT matrix must have even dimension, got {rho.dim}")


def alpha_vacuum_state(T: float, n_max: int) -> TruncatedState:
    """Squeezed alpha-vacuum: amplitude sqrt(1 - T^2) T^n on pair level n."""
    _check(T, n_max)
    n = np.arange(n_max + 1)
    amps = np.sqrt(1.0 - T * T) * float(T) ** n
    return TruncatedState(amps, 0, float(T), float(T) ** (2 * (n_max + 1)))


def one_particle_state(T: float, n_max: int) -> TruncatedState:
    """One-particle excitation: amplitude (1 - T^2) T^n sqrt(n + 1) on ``|n+1>_I |n>_II``."""
    _check(T, n_max)
    n = np.arange(n_max + 1)
    x = T * T
    amps = (1.0 - x) * float(T) ** n * np.sqrt(n + 1.0)
    tail = x ** (n_max + 1) * ((n_max + 2) - (n_max + 1) * x)
    return TruncatedState(amps, 1, float(T), tail)


def joint_density_matrix(T: float, n_max: int) -> DensityMatrix:
    """Mixed Alice/Rob-I state left after tracing out region II.

    Each pair level n contributes the rank-1 block
    ``w_n [1, s_n; s_n, s_n^2]`` on ``{|0, n>, |1, n + 1>}`` with
    ``w_n = T^2n (1 - T^2) / 2`` and ``s_n = sqrt((n + 1)(1 - T^2))``.
    """
    _check(T, n_max)
    n_dim = n_max + 2
    n = np.arange(n_max + 1)
    x = T * T
    w = 0.5 * (1.0 - x) * x**n
    s = np.sqrt((n + 1) * (1.0 - x))
    zero = n
    one = n_dim + n + 1
    rho = np.zeros((2 * n_dim, 2 * n_dim))
    rho[zero, zero] = w
    rho[zero, one] = w * s
    rho[one, zero] = w * s
    rho[one, one] = w * s * s
    return DensityMatrix(rho, Basis.JOINT, tail_mass(T, n_max))


def reduce_alice(rho: DensityMatrix) -> DensityMatrix:
    _require_joint(rho)
    d = rho.n_dim
    block = rho.entries.reshape(2, d, 2, d)
    return DensityMatrix(np.einsum("anbn->ab", block), Basis.ALICE, rho.trace_deficit)


def reduce_rob(rho: DensityMatrix) -> DensityMatrix:
    _require_joint(rho)
    d = rho.n_dim
    block = rho.entries.reshape(2, d, 2, d)
    return DensityMatrix(np.einsum("anam->nm", block), Basis.ROB, rho.trace_deficit)


def partial_transpose_alice(rho: DensityMatrix) -> DensityMatrix:
    """Transpose Alice's index: ``out[(a,n),(b,m)] = in[(b,n),(a,m)]``.

    The result is generally not positive semidefinite.
    """
    _require_joint(rho)
    d = rho.n_dim
    out = rho.entries.reshape(2, d, 2, d).transpose(2, 1, 0, 3).reshape(2 * d, 2 * d)
    return DensityMatrix(np.ascontiguousarray(out), Basis.JOINT, rho.trace_deficit)
