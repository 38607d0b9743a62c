"""Entanglement, mutual information and discord of the Alice/Rob-I state.

Every quantity is computed from the spectrum of an explicitly built
truncated matrix.  The series printed for the negativity and the mutual
information are also implemented (:func:`negativity_closed`,
:func:`mutual_information_closed`) and compared against the spectral values
in :class:`CorrelationReport`.  All entropies are in bits.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import spectra
from .errors import (
    DegenerateMeasurement,
    InvalidParameter,
    InvalidSpectrum,
    MinimizerFailure,
    NumericalError,
)
from .fock import (
    Basis,
    DensityMatrix,
    _require_joint,
    joint_density_matrix,
    partial_transpose_alice,
    reduce_alice,
    reduce_rob,
)
from .optimize import golden_section
from .vacuum import (
    DEFAULT_N_CAP,
    DEFAULT_TAIL_TOL,
    EffectiveParams,
    ModeSpec,
    effective_parameters,
    truncation_level,
)

# clip window for eigenvalues of PSD-expected matrices
CLIP_TOL = 1e-9
# closed-form series are cheap, so they are summed far past the matrix cap
CLOSED_TAIL_TOL = 1e-15
CLOSED_N_CAP = 50_000_000
# entropy differences below this are treated as ties by the discord minimizer
TIE_TOL = 1e-12


@dataclass(frozen=True)
class MeasurementDirection:
    theta: float
    phi: float = 0.0

    @property
    def bloch(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


@dataclass(frozen=True)
class MinimizerConfig:
    theta_points: int = 64
    phi_points: int = 32
    entropy_tol: float = 1e-10
    max_iter: int = 200

    def __post_init__(self):
        if self.theta_points < 3 or self.phi_points < 1:
            raise InvalidParameter("need at least 3 theta and 1 phi grid points")
        if not self.entropy_tol > 0:
            raise InvalidParameter("entropy_tol must be positive")


class NegativityVariant(enum.Enum):
    AS_PRINTED = "as_printed"
    VARIANT_B = "variant_b"


# ---------------------------------------------------------------------------
# entropies


def _clean_spectrum(spectrum) -> np.ndarray:
    lam = np.asarray(spectrum, dtype=float).ravel()
    if lam.size and lam.min() < -CLIP_TOL:
        raise InvalidSpectrum(f"eigenvalue {lam.min():.3e} below -{CLIP_TOL:g}")
    if lam.sum() > 1.0 + 1e-6:
        raise InvalidSpectrum(f"spectrum sums to {lam.sum():.9f} > 1")
    return np.clip(lam, 0.0, None)


def von_neumann_entropy(rho) -> float:
    """``-sum lambda log2 lambda`` of a density matrix or of a spectrum."""
    if isinstance(rho, DensityMatrix):
        rho = spectra.eigvalsh(rho.entries)
    lam = _clean_spectrum(rho)
    lam = lam[lam > 0.0]
    return float(-np.sum(lam * np.log2(lam))) + 0.0  # no -0.0


def _psd_entropy(rho: DensityMatrix) -> float:
    try:
        return von_neumann_entropy(rho)
    except InvalidSpectrum as exc:
        raise NumericalError(str(exc)) from exc


@dataclass(frozen=True)
class Entropies:
    alice: float
    rob: float
    joint: float

    @property
    def mutual_info_I(self) -> float:
        return self.alice + self.rob - self.joint

    @property
    def mutual_info_II(self) -> float:
        # purity of the tripartite state: S(RII) = S(A,RI) and S(A,RII) = S(RI)
        return self.alice + self.joint - self.rob


def entropies(rho: DensityMatrix) -> Entropies:
    _require_joint(rho)
    return Entropies(
        alice=_psd_entropy(reduce_alice(rho)),
        rob=_psd_entropy(reduce_rob(rho)),
        joint=_psd_entropy(rho),
    )


# ---------------------------------------------------------------------------
# negativity and mutual information


def negativity_spectral(rho: DensityMatrix) -> float:
    """Sum of the magnitudes of the negative eigenvalues of the partial transpose."""
    lam = spectra.eigvalsh(partial_transpose_alice(rho).entries)
    return float(-np.sum(lam[lam < 0.0]))


def _closed_n_max(T, n_max):
    if n_max is None:
        return truncation_level(T, CLOSED_TAIL_TOL, CLOSED_N_CAP).n_max
    if n_max < 0:
        raise InvalidParameter("n_max must be nonnegative")
    return int(n_max)


def _index_chunks(n_max, size=1 << 20):
    for start in range(0, n_max + 1, size):
        yield np.arange(start, min(start + size, n_max + 1), dtype=float)


def _check_T(T):
    if not 0.0 <= T < 1.0:
        raise InvalidParameter(f"T must lie in [0, 1), got {T!r}")


def negativity_closed(
    T: float,
    variant: NegativityVariant = NegativityVariant.VARIANT_B,
    n_max: int | None = None,
    *,
    q: float | None = None,
) -> float:
    """Partial sum of the printed negativity series.

    ``VARIANT_B`` reads the last term as ``n (1 - coth^2 r / f^2) = n (1 - 1/T^2)``;
    ``AS_PRINTED`` keeps ``n (1 - coth^2 r) / f^2``, which needs ``q = tanh r``
    separately (``f = T / q``).  With ``n_max=None`` the series is summed until
    the neglected mass is below 1e-15.
    """
    _check_T(T)
    if variant is NegativityVariant.AS_PRINTED:
        if q is None:
            raise InvalidParameter("AS_PRINTED needs q")
        if not 0.0 <= q <= T:
            raise InvalidParameter(f"need 0 <= q <= T, got q={q!r}")
    x = T * T
    if x == 0.0:
        return 0.5
    c = 4.0 * (1.0 - x)
    total = 0.0
    for n in _index_chunks(_closed_n_max(T, n_max)):
        X = x + n * (1.0 / x - 1.0)
        root = np.sqrt(X * X + c)
        if variant is NegativityVariant.VARIANT_B:
            bracket = c / (root + X)  # root - X without cancellation
        else:
            # (1 - coth^2 r) / f^2 = (q^2 - 1) / T^2
            bracket = np.abs(root - x - n * (1.0 - q * q) / x)
        total += float(np.sum(0.25 * (1.0 - x) * x**n * bracket))
    return total


def mutual_information_spectral(T: float, n_max: int) -> tuple[float, float]:
    """``(I(A:RI), I(A:RII))`` in bits from the truncated joint matrix."""
    s = entropies(joint_density_matrix(T, n_max))
    return s.mutual_info_I, s.mutual_info_II


def _xlog2x(v):
    out = np.zeros_like(v)
    pos = v > 0
    out[pos] = v[pos] * np.log2(v[pos])
    return out


def mutual_information_closed(T: float, n_max: int | None = None) -> float:
    """Partial sum of the printed Alice/Rob-I mutual information series.

    ``coth^2 r / f^2`` is evaluated as ``1 / T^2``; ``T = 0`` returns the limit 2.
    """
    _check_T(T)
    x = T * T
    if x == 0.0:
        return 2.0
    series = 0.0
    for n in _index_chunks(_closed_n_max(T, n_max)):
        g_rob = 1.0 - n + n / x
        g_joint = n + 2.0 - (n + 1.0) * x
        series += float(np.sum(x**n * (_xlog2x(g_rob) - _xlog2x(g_joint))))
    return float(1.0 - 0.5 * math.log2(x) - 0.5 * (1.0 - x) * series)


# ---------------------------------------------------------------------------
# measurements and discord


def measurement_projectors(direction: MeasurementDirection) -> tuple[np.ndarray, np.ndarray]:
    """``(Pi_+, Pi_-)`` with ``Pi_pm = (1 pm x.sigma) / 2``.

    Assembled from the cos(phi) and sin(phi) parts separately; the result is
    complex only when ``sin(theta) sin(phi) != 0``.
    """
    c = math.cos(direction.theta)
    s = math.sin(direction.theta)
    sx, sy = s * math.cos(direction.phi), s * math.sin(direction.phi)
    real = np.array([[c, sx], [sx, -c]])
    if sy == 0.0:
        ident, xs = np.eye(2), real
    else:
        ident, xs = np.eye(2, dtype=complex), real + 1j * np.array([[0.0, -sy], [sy, 0.0]])
    return 0.5 * (ident + xs), 0.5 * (ident - xs)


class _AliceMeasurement:
    """Precomputed Rob-side blocks of a JOINT matrix for repeated measurements.

    For a measurement along ``(theta, phi)`` the unnormalized conditional
    state is ``Tr_A[(Pi (x) 1) rho] = sum_ab Pi_ab rho_ba``.
    """

    def __init__(self, rho: DensityMatrix):
        _require_joint(rho)
        d = rho.n_dim
        e = rho.entries
        self.blocks = (e[:d, :d], e[d:, d:], e[:d, d:], e[d:, :d])
        self.traces = tuple(float(np.trace(b)) for b in self.blocks)
        u = max(spectra.bandwidth(b) for b in self.blocks)
        self.banded = d > spectra.DENSE_LIMIT or 4 * u < d
        if self.banded:
            self.bands = tuple(spectra.upper_band(b, u) for b in self.blocks)

    def _combine(self, mats, direction, sign):
        b00, b11, b01, b10 = mats
        c = sign * math.cos(direction.theta)
        s = sign * math.sin(direction.theta)
        real = 0.5 * ((1 + c) * b00 + (1 - c) * b11 + s * math.cos(direction.phi) * (b01 + b10))
        sin_phi = math.sin(direction.phi)
        if s * sin_phi == 0.0:
            return real
        return real + 0.5j * s * sin_phi * (b01 - b10)

    def probability(self, direction, sign):
        return float(self._combine(self.traces, direction, sign).real)

    def conditional(self, direction, sign) -> tuple[float, np.ndarray]:
        p = self.probability(direction, sign)
        if p < 1e-12:
            raise DegenerateMeasurement(f"outcome probability {p:.3e} too small")
        return p, self._combine(self.blocks, direction, sign) / p

    def entropy(self, direction: MeasurementDirection) -> float:
        total = 0.0
        for sign in (1, -1):
            p = self.probability(direction, sign)
            if p < 1e-12:
                raise DegenerateMeasurement(f"outcome probability {p:.3e} too small")
            if self.banded:
                lam = spectra.banded_eigvalsh(self._combine(self.bands, direction, sign) / p)
            else:
                lam = spectra.eigvalsh(self._combine(self.blocks, direction, sign) / p)
            try:
                total += p * von_neumann_entropy(lam)
            except InvalidSpectrum as exc:
                raise NumericalError(str(exc)) from exc
        return total


def conditional_states(
    rho: DensityMatrix, direction: MeasurementDirection
) -> list[tuple[float, DensityMatrix]]:
    """Outcome probabilities and Rob-I states after measuring Alice's qubit.

    Returned in the order ``(+, -)``.  States are unit-trace (renormalized by
    ``p``) and complex Hermitian when the measurement direction has a
    ``sigma_y`` component.
    """
    m = _AliceMeasurement(rho)
    out = []
    for sign in (1, -1):
        p, state = m.conditional(direction, sign)
        out.append((p, DensityMatrix(state, Basis.ROB, 0.0)))
    return out


def conditional_entropy(rho: DensityMatrix, direction: MeasurementDirection) -> float:
    """``sum_j p_j S(rho_RI|j)`` in bits."""
    return _AliceMeasurement(rho).entropy(direction)


def _grid_orbit(i, j, n_theta, n_phi, real):
    """Grid points sharing the conditional entropy of ``(i, j)``.

    ``(theta, phi) -> (pi - theta, phi + pi)`` swaps the two outcomes; for a
    real ``rho``, ``phi -> -phi`` is complex conjugation of both states.
    """
    orbit = {(i, j)}
    if n_phi % 2 == 0:
        orbit.add((n_theta - 1 - i, (j + n_phi // 2) % n_phi))
    if real:
        orbit |= {(a, (-b) % n_phi) for a, b in orbit}
    return orbit


def _minimize_conditional_entropy(rho: DensityMatrix, config: MinimizerConfig):
    m = _AliceMeasurement(rho)
    thetas = np.linspace(0.0, math.pi, config.theta_points)
    phis = np.linspace(0.0, 2.0 * math.pi, config.phi_points, endpoint=False)
    real = not np.iscomplexobj(rho.entries)
    grid = np.full((len(thetas), len(phis)), np.nan)
    for i in range(len(thetas)):
        for j in range(len(phis)):
            if np.isnan(grid[i, j]):
                value = m.entropy(MeasurementDirection(thetas[i], phis[j]))
                for a, b in _grid_orbit(i, j, len(thetas), len(phis), real):
                    grid[a, b] = value
    # first grid point within TIE_TOL of the minimum: smallest theta, then phi
    i, j = np.argwhere(grid <= grid.min() + TIE_TOL)[0]
    grid_best = float(grid[i, j])
    theta, phi, best = float(thetas[i]), float(phis[j]), grid_best

    lo, hi = thetas[max(i - 1, 0)], thetas[min(i + 1, len(thetas) - 1)]
    res = golden_section(
        lambda t: m.entropy(MeasurementDirection(t, phi)),
        lo, hi, ftol=config.entropy_tol, max_iter=config.max_iter,
    )
    if res.fun < best - TIE_TOL:
        theta, best = res.x, res.fun
    if config.phi_points > 1:
        step = 2.0 * math.pi / config.phi_points
        res = golden_section(
            lambda p: m.entropy(MeasurementDirection(theta, p)),
            phi - step, phi + step, ftol=config.entropy_tol, max_iter=config.max_iter,
        )
        if res.fun < best - TIE_TOL:
            phi, best = res.x % (2.0 * math.pi), res.fun
    if best > grid_best + 1e-9:
        raise MinimizerFailure(
            f"refined conditional entropy {best!r} exceeds grid minimum {grid_best!r}"
        )
    return best, MeasurementDirection(float(theta), float(phi))


def discord_from_matrix(
    rho: DensityMatrix,
    minimizer: MinimizerConfig | None = None,
    s: Entropies | None = None,
) -> tuple[float, MeasurementDirection]:
    """Alice-side discord ``S(A) - S(A,RI) + min_dir S(RI | A)`` of a JOINT matrix."""
    minimizer = minimizer or MinimizerConfig()
    if s is None:
        s = entropies(rho)
    cond, direction = _minimize_conditional_entropy(rho, minimizer)
    return s.alice - s.joint + cond, direction


def discord(
    T: float,
    n_max: int | None = None,
    minimizer: MinimizerConfig | None = None,
) -> tuple[float, MeasurementDirection]:
    """Discord (bits) and minimizing measurement direction at effective parameter ``T``.

    ``n_max=None`` picks the cutoff from the default tail tolerance and cap.
    """
    _check_T(T)
    if n_max is None:
        n_max = truncation_level(T).n_max
    return discord_from_matrix(joint_density_matrix(T, n_max), minimizer)


# ---------------------------------------------------------------------------
# full report


@dataclass(frozen=True)
class CorrelationReport:
    params: EffectiveParams
    negativity_spectral: float
    negativity_closed_as_printed: float
    negativity_closed_variantB: float
    entropy_A: float
    entropy_RI: float
    entropy_joint: float
    mutual_info_I: float
    mutual_info_II: float
    mutual_info_closed: float
    discord: float
    discord_argmin: MeasurementDirection
    n_max_used: int
    tail_mass: float
    clamped: bool
    closed_vs_oracle_deltas: dict = field(default_factory=dict)

    @property
    def T(self) -> float:
        return self.params.T

    def bound_violations(self) -> list[str]:
        """Names of the report invariants that do not hold."""
        bad = []
        if not -1e-12 <= self.negativity_spectral <= 0.5 + 1e-9:
            bad.append("negativity_spectral")
        for name in ("entropy_A", "entropy_RI", "entropy_joint"):
            if not getattr(self, name) >= -1e-12:
                bad.append(name)
        if not 0.0 - 1e-9 <= self.mutual_info_I <= 2.0 + 1e-9:
            bad.append("mutual_info_I")
        if not -1e-9 <= self.discord <= self.mutual_info_I + 1e-9:
            bad.append("discord")
        return bad


def correlation_report(
    mode: ModeSpec | EffectiveParams,
    tail_tol: float = DEFAULT_TAIL_TOL,
    n_cap: int = DEFAULT_N_CAP,
    minimizer: MinimizerConfig | None = None,
) -> CorrelationReport:
    """Every correlation measure for one mode, with closed-form cross-checks."""
    params = effective_parameters(mode) if isinstance(mode, ModeSpec) else mode
    T = params.T
    trunc = truncation_level(T, tail_tol, n_cap)
    rho = joint_density_matrix(T, trunc.n_max)
    s = entropies(rho)
    neg = negativity_spectral(rho)
    d, direction = discord_from_matrix(rho, minimizer, s)

    neg_b = negativity_closed(T, NegativityVariant.VARIANT_B)
    neg_printed = negativity_closed(T, NegativityVariant.AS_PRINTED, q=min(params.q, T))
    mi_closed = mutual_information_closed(T)
    deltas = {
        "negativity_as_printed": abs(neg_printed - neg),
        "negativity_variantB": abs(neg_b - neg),
        "mutual_info": abs(mi_closed - s.mutual_info_I),
    }
    return CorrelationReport(
        params=params,
        negativity_spectral=neg,
        negativity_closed_as_printed=neg_printed,
        negativity_closed_variantB=neg_b,
        entropy_A=s.alice,
        entropy_RI=s.rob,
        entropy_joint=s.joint,
        mutual_info_I=s.mutual_info_I,
        mutual_info_II=s.mutual_info_II,
        mutual_info_closed=mi_closed,
        discord=d,
        discord_argmin=direction,
        n_max_used=trunc.n_max,
        tail_mass=trunc.tail_mass,
        clamped=trunc.clamped,
        closed_vs_oracle_deltas=deltas,
    )
