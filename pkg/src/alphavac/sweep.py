"""Parameter sweeps producing plot-ready tables of correlation measures.

A sweep walks ``alpha_values`` (outer) times one mode axis (inner): Hubble
scale at fixed wavenumber, ``q`` directly, or the effective parameter ``T``
directly.  Each grid point yields one row of :data:`COLUMNS`.
"""

from __future__ import annotations

import csv
import enum
import hashlib
import io
import json
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .correlations import (
    MeasurementDirection,
    MinimizerConfig,
    conditional_entropy,
    correlation_report,
    entropies,
)
from .errors import AlphaVacError, ConfigError, TruncationWarning
from .fock import joint_density_matrix
from .vacuum import (
    DEFAULT_N_CAP,
    DEFAULT_TAIL_TOL,
    EUCLIDEAN,
    EffectiveParams,
    ModeSpec,
    effective_parameters,
    truncation_level,
)

COLUMNS = (
    "alpha", "k", "hubble_H", "q", "f", "T", "n_max", "tail_mass",
    "negativity_spectral", "negativity_closed_printed", "negativity_closed_variantB",
    "entropy_A", "entropy_RI", "entropy_joint",
    "mutual_info_I", "mutual_info_II", "mutual_info_closed",
    "discord", "discord_theta", "discord_phi",
    "error",
)
_INT_COLUMNS = {"n_max"}


class FigureTag(enum.Enum):
    FIG2_NEGATIVITY_SURFACE = "FIG2_NEGATIVITY_SURFACE"
    FIG3_NEGATIVITY_VS_ALPHA = "FIG3_NEGATIVITY_VS_ALPHA"
    FIG4_MUTUAL_INFO = "FIG4_MUTUAL_INFO"
    FIG5_DISCORD_SURFACE = "FIG5_DISCORD_SURFACE"
    FIG6_DISCORD_CURVES = "FIG6_DISCORD_CURVES"
    DISCREPANCY_REPORT = "DISCREPANCY_REPORT"

    @classmethod
    def parse(cls, name: str) -> "FigureTag":
        key = name.strip().upper()
        for tag in cls:
            # short aliases such as FIG6 or DISCREPANCY
            if tag.value == key or tag.value.split("_")[0] == key:
                return tag
        raise ConfigError(f"unknown figure tag {name!r}")


class Axis(enum.Enum):
    HUBBLE = "hubble"
    Q = "q"
    T = "T"


@dataclass(frozen=True)
class OutputSpec:
    figure: FigureTag
    format: str
    path: str

    def __post_init__(self):
        if self.format not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.format!r}")


@dataclass(frozen=True)
class SweepConfig:
    alpha_values: tuple[float, ...]
    axis: Axis
    axis_values: tuple[float, ...]
    wavenumber_k: float = 1.0
    tail_tol: float = DEFAULT_TAIL_TOL
    n_cap: int = DEFAULT_N_CAP
    minimizer: MinimizerConfig = field(default_factory=MinimizerConfig)
    figures: tuple[FigureTag, ...] = (FigureTag.DISCREPANCY_REPORT,)
    theta_values: tuple[float, ...] = tuple(np.linspace(0.0, math.pi, 33))
    outputs: tuple[OutputSpec, ...] = ()

    def __post_init__(self):
        for name in ("alpha_values", "axis_values", "theta_values"):
            values = getattr(self, name)
            if len(values) == 0:
                raise ConfigError(f"{name} is empty")
            if any(b <= a for a, b in zip(values, values[1:])):
                raise ConfigError(f"{name} must be strictly increasing")
        if any(math.isnan(a) or a >= 0 for a in self.alpha_values):
            raise ConfigError("alpha values must be < 0 or -inf")
        if self.axis is Axis.T and tuple(self.alpha_values) != (EUCLIDEAN,):
            raise ConfigError("a T axis takes no alpha values (use [-inf])")
        if self.axis is Axis.HUBBLE and not (self.wavenumber_k > 0 and self.axis_values[0] > 0):
            raise ConfigError("wavenumber_k and Hubble values must be positive")
        if self.axis is not Axis.HUBBLE and not (0 <= self.axis_values[0] and self.axis_values[-1] < 1):
            raise ConfigError(f"{self.axis.value} values must lie in [0, 1)")
        if not self.tail_tol > 0 or self.n_cap < 8:
            raise ConfigError("need tail_tol > 0 and n_cap >= 8")
        if not self.figures:
            raise ConfigError("no figures requested")

    def points(self) -> list[tuple[float, float]]:
        return [(a, v) for a in self.alpha_values for v in self.axis_values]

    def digest(self) -> str:
        """Hash of everything that affects computed values."""
        payload = {
            "alpha_values": [_encode(a) for a in self.alpha_values],
            "axis": self.axis.value,
            "axis_values": list(self.axis_values),
            "wavenumber_k": self.wavenumber_k,
            "tail_tol": self.tail_tol,
            "n_cap": self.n_cap,
            "minimizer": asdict(self.minimizer),
            "theta_values": list(self.theta_values),
        }
        text = json.dumps(payload, sort_keys=True)
        return hashlib.sha256(text.encode()).hexdigest()[:16]


@dataclass
class FigureDataset:
    figure_tag: FigureTag | None
    rows: list[dict]
    metadata: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# evaluation


def _mode_row(config: SweepConfig, alpha: float, value: float):
    row = dict.fromkeys(COLUMNS)
    row["alpha"] = alpha
    row["error"] = ""
    if config.axis is Axis.HUBBLE:
        row["k"] = config.wavenumber_k
        row["hubble_H"] = value
        params = effective_parameters(ModeSpec(alpha, config.wavenumber_k, value))
    elif config.axis is Axis.Q:
        params = effective_parameters(ModeSpec.from_q(alpha, value))
    else:
        params = EffectiveParams.from_T(value)
    row.update(q=params.q, f=params.f, T=params.T)
    return row, params


def report_row(config: SweepConfig, alpha: float, value: float) -> dict:
    """One table row; failures become an annotated row instead of raising."""
    try:
        row, params = _mode_row(config, alpha, value)
    except AlphaVacError as exc:
        row = dict.fromkeys(COLUMNS)
        row.update(alpha=alpha, error=f"{type(exc).__name__}: {exc}")
        return row
    try:
        rep = correlation_report(params, config.tail_tol, config.n_cap, config.minimizer)
    except AlphaVacError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    row.update(
        n_max=rep.n_max_used,
        tail_mass=rep.tail_mass,
        negativity_spectral=rep.negativity_spectral,
        negativity_closed_printed=rep.negativity_closed_as_printed,
        negativity_closed_variantB=rep.negativity_closed_variantB,
        entropy_A=rep.entropy_A,
        entropy_RI=rep.entropy_RI,
        entropy_joint=rep.entropy_joint,
        mutual_info_I=rep.mutual_info_I,
        mutual_info_II=rep.mutual_info_II,
        mutual_info_closed=rep.mutual_info_closed,
        discord=rep.discord,
        discord_theta=rep.discord_argmin.theta,
        discord_phi=rep.discord_argmin.phi,
    )
    bad = rep.bound_violations()
    if bad:
        row["error"] = "bounds violated: " + ",".join(bad)
    return row


def theta_rows(config: SweepConfig, alpha: float, value: float) -> list[dict]:
    """Discord evaluated at fixed measurement angle (phi = 0) along ``theta_values``.

    ``discord_theta`` holds the angle of each row rather than a minimizer.
    """
    try:
        base, params = _mode_row(config, alpha, value)
        trunc = truncation_level(params.T, config.tail_tol, config.n_cap)
        rho = joint_density_matrix(params.T, trunc.n_max)
        s = entropies(rho)
    except AlphaVacError as exc:
        row = dict.fromkeys(COLUMNS)
        row.update(alpha=alpha, error=f"{type(exc).__name__}: {exc}")
        return [row]
    base.update(
        n_max=trunc.n_max, tail_mass=trunc.tail_mass, entropy_A=s.alice,
        entropy_RI=s.rob, entropy_joint=s.joint,
        mutual_info_I=s.mutual_info_I, mutual_info_II=s.mutual_info_II,
    )
    rows = []
    for theta in config.theta_values:
        row = dict(base, discord_theta=float(theta), discord_phi=0.0)
        try:
            cond = conditional_entropy(rho, MeasurementDirection(float(theta), 0.0))
            row["discord"] = s.alice - s.joint + cond
        except AlphaVacError as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


def run_sweep(config: SweepConfig, threads: int = 1) -> list[FigureDataset]:
    """Evaluate the grid and return one dataset per requested figure.

    Grid points may be computed concurrently; rows always come back in grid
    order, so the output does not depend on ``threads``.
    """
    if threads < 1:
        raise ConfigError("threads must be >= 1")
    points = config.points()
    need_theta = FigureTag.FIG5_DISCORD_SURFACE in config.figures
    need_reports = any(t is not FigureTag.FIG5_DISCORD_SURFACE for t in config.figures)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", TruncationWarning)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            reports = list(pool.map(lambda p: report_row(config, *p), points)) if need_reports else []
            surfaces = list(pool.map(lambda p: theta_rows(config, *p), points)) if need_theta else []

    datasets = []
    for tag in config.figures:
        if tag is FigureTag.FIG5_DISCORD_SURFACE:
            rows = [row for group in surfaces for row in group]
        else:
            rows = [dict(r) for r in reports]
        datasets.append(FigureDataset(tag, rows, _metadata(config, tag, rows)))
    return datasets


def _metadata(config, tag, rows):
    seen = set()
    clamped = []
    for r in rows:
        key = (r["alpha"], r["T"])
        if r.get("tail_mass") is not None and r["tail_mass"] >= config.tail_tol and key not in seen:
            seen.add(key)
            clamped.append({"alpha": _encode(r["alpha"]), "T": r["T"], "n_max": r["n_max"],
                            "tail_mass": r["tail_mass"]})
    return {
        "tool": "alphavac",
        "version": __version__,
        "figure_tag": tag.value if tag else None,
        "config_hash": config.digest(),
        "truncation_warnings": clamped,
    }


# ---------------------------------------------------------------------------
# serialization


def _encode(value):
    """JSON-safe scalar: infinities as strings, NaN as null."""
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return None
        if math.isinf(value):
            return "-inf" if value < 0 else "inf"
    elif isinstance(value, np.integer):
        return int(value)
    return value


def _csv_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    value = float(value)
    if math.isnan(value):
        return ""
    if math.isinf(value):
        return "-inf" if value < 0 else "inf"
    return f"{value:.12g}"


def to_csv(dataset: FigureDataset) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in dataset.rows:
        writer.writerow([_csv_field(row.get(c)) for c in COLUMNS])
    return buf.getvalue()


def to_json(dataset: FigureDataset) -> str:
    doc = {
        "figure_tag": dataset.figure_tag.value if dataset.figure_tag else None,
        "metadata": dataset.metadata,
        "rows": [{c: _encode(row.get(c)) for c in COLUMNS} for row in dataset.rows],
    }
    return json.dumps(doc, indent=1, allow_nan=False) + "\n"


def emit(dataset: FigureDataset, format: str, path) -> None:
    """Write ``dataset`` as CSV or JSON (UTF-8, LF line endings)."""
    if format == "csv":
        text = to_csv(dataset)
    elif format == "json":
        text = to_json(dataset)
    else:
        raise ConfigError(f"format must be csv or json, got {format!r}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _decode(column, value):
    if value in ("inf", "-inf"):
        return float(value)
    if column in _INT_COLUMNS or column == "error" or value is None:
        return value
    return float(value) if isinstance(value, (int, float)) else value


def read_json(path) -> FigureDataset:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    tag = FigureTag(doc["figure_tag"]) if doc.get("figure_tag") else None
    rows = [{c: _decode(c, r.get(c)) for c in COLUMNS} for r in doc["rows"]]
    return FigureDataset(tag, rows, doc.get("metadata", {}))


# ---------------------------------------------------------------------------
# config files and presets


def _alpha(value):
    if isinstance(value, str):
        if value.strip().lower() in ("-inf", "euclidean"):
            return EUCLIDEAN
        try:
            return float(value)
        except ValueError:
            raise ConfigError(f"bad alpha value {value!r}") from None
    return float(value)


_CONFIG_KEYS = {
    "alpha_values", "hubble_values", "wavenumber_k", "q_values", "t_values",
    "tail_tol", "n_cap", "theta_points", "phi_points", "entropy_tol",
    "theta_values", "figures", "outputs",
}


def config_from_dict(raw: dict) -> SweepConfig:
    """Build a :class:`SweepConfig` from the flat key/value layout of a config file."""
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    axes = [k for k in ("hubble_values", "q_values", "t_values") if k in raw]
    if len(axes) != 1:
        raise ConfigError("exactly one of hubble_values, q_values, t_values is required")
    axis = {"hubble_values": Axis.HUBBLE, "q_values": Axis.Q, "t_values": Axis.T}[axes[0]]
    try:
        alphas = raw.get("alpha_values", ["-inf"] if axis is Axis.T else None)
        if alphas is None:
            raise ConfigError("alpha_values is required")
        minimizer = MinimizerConfig(
            theta_points=int(raw.get("theta_points", 64)),
            phi_points=int(raw.get("phi_points", 32)),
            entropy_tol=float(raw.get("entropy_tol", 1e-10)),
        )
        outputs = tuple(
            OutputSpec(FigureTag.parse(o["figure"]), o.get("format", "csv"), o["path"])
            for o in raw.get("outputs", ())
        )
        figures = tuple(FigureTag.parse(f) for f in raw.get("figures", ()))
        figures = figures or tuple(dict.fromkeys(o.figure for o in outputs))
        kwargs = {}
        if "theta_values" in raw:
            kwargs["theta_values"] = tuple(float(t) for t in raw["theta_values"])
        return SweepConfig(
            alpha_values=tuple(_alpha(a) for a in alphas),
            axis=axis,
            axis_values=tuple(float(v) for v in raw[axes[0]]),
            wavenumber_k=float(raw.get("wavenumber_k", 1.0)),
            tail_tol=float(raw.get("tail_tol", DEFAULT_TAIL_TOL)),
            n_cap=int(raw.get("n_cap", DEFAULT_N_CAP)),
            minimizer=minimizer,
            figures=figures or (FigureTag.DISCREPANCY_REPORT,),
            outputs=outputs,
            **kwargs,
        )
    except (TypeError, KeyError, ValueError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"bad config: {exc}") from exc


def load_config(path) -> SweepConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: top level must be an object")
    return config_from_dict(raw)


# Hubble scales for the presets, with k = 1 (q = exp(-pi / H) runs from ~0 to 0.855)
PRESET_HUBBLE = (0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 10.0, 12.5, 15.0, 17.5, 20.0)

_PRESETS = {
    FigureTag.FIG2_NEGATIVITY_SURFACE: dict(
        alpha_values=("-inf", -20, -5, -2, -1, -0.5, -0.2), hubble_values=PRESET_HUBBLE),
    FigureTag.FIG3_NEGATIVITY_VS_ALPHA: dict(
        alpha_values=("-inf", -20, -10, -5, -3, -2, -1.5, -1, -0.7, -0.5, -0.3, -0.2, -0.1),
        hubble_values=(0.5, 1.0, 2.0, 5.0)),
    FigureTag.FIG4_MUTUAL_INFO: dict(
        alpha_values=("-inf", -20, -2, -1, -0.5, -0.2), hubble_values=PRESET_HUBBLE),
    FigureTag.FIG5_DISCORD_SURFACE: dict(
        alpha_values=(-20, -1, -0.5), hubble_values=(0.5, 1.0, 2.0, 5.0, 10.0, 20.0)),
    FigureTag.FIG6_DISCORD_CURVES: dict(
        alpha_values=("-inf", -20, -1, -0.5), hubble_values=PRESET_HUBBLE),
    FigureTag.DISCREPANCY_REPORT: dict(
        alpha_values=("-inf", -20, -3, -1, -0.5),
        q_values=(0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9)),
}


def preset(tag: FigureTag | str, **overrides) -> SweepConfig:
    """Built-in configuration for one figure; ``overrides`` use config-file keys."""
    if isinstance(tag, str):
        tag = FigureTag.parse(tag)
    raw = dict(_PRESETS[tag], figures=[tag.value])
    raw.update({k: v for k, v in overrides.items() if v is not None})
    return config_from_dict(raw)
