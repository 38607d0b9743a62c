"""Command-line driver: ``alphavac {point,sweep,figure}``.

Exit codes: 0 success, 1 configuration error, 2 I/O error, 3 numerical
failure while evaluating a single point.
"""

from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
import warnings

from .correlations import MinimizerConfig
from .errors import (
    AlphaVacError,
    ConfigError,
    DegenerateMeasurement,
    InvalidMode,
    InvalidParameter,
    MinimizerFailure,
    NumericalError,
    TruncationWarning,
)
from .sweep import (
    Axis,
    FigureDataset,
    FigureTag,
    SweepConfig,
    _alpha,
    emit,
    load_config,
    preset,
    report_row,
    run_sweep,
    to_csv,
    to_json,
)
from .vacuum import EUCLIDEAN

EXIT_OK, EXIT_CONFIG, EXIT_IO, EXIT_NUMERICAL = 0, 1, 2, 3

log = logging.getLogger("alphavac")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _common(p, with_threads=True):
    p.add_argument("--tail-tol", type=float, help="neglected probability mass (default 1e-12)")
    p.add_argument("--n-cap", type=int, help="largest Fock cutoff (default 4096)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    if with_threads:
        p.add_argument("--threads", type=int, default=1, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alphavac", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("point", help="evaluate one mode")
    p.add_argument("--alpha", default="-inf",
                   help="vacuum label < 0, or -inf for the Euclidean vacuum (write --alpha=-inf)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--q", type=float, help="thermal parameter tanh r in [0, 1)")
    mode.add_argument("--hubble", type=float, help="Hubble scale H (with --k)")
    mode.add_argument("--t-direct", type=float, metavar="T", help="effective parameter T directly")
    p.add_argument("--k", type=float, default=1.0, help="wavenumber (default 1)")
    _common(p, with_threads=False)

    p = sub.add_parser("sweep", help="run a sweep described by a JSON config file")
    p.add_argument("config")
    _common(p)

    p = sub.add_parser("figure", help="run a built-in figure preset")
    p.add_argument("tag", help=", ".join(t.value for t in FigureTag) + " (or FIG2..FIG6)")
    _common(p)
    return parser


def _write(dataset: FigureDataset, fmt: str, path: str | None):
    if path is None:
        sys.stdout.write(to_csv(dataset) if fmt == "csv" else to_json(dataset))
    else:
        emit(dataset, fmt, path)


def _point(args) -> int:
    if args.t_direct is not None:
        alpha, axis, value = EUCLIDEAN, Axis.T, args.t_direct
    elif args.q is not None:
        alpha, axis, value = _alpha(args.alpha), Axis.Q, args.q
    else:
        alpha, axis, value = _alpha(args.alpha), Axis.HUBBLE, args.hubble
    overrides = {k: v for k, v in (("tail_tol", args.tail_tol), ("n_cap", args.n_cap)) if v is not None}
    config = SweepConfig(alpha_values=(alpha,), axis=axis, axis_values=(value,),
                         wavenumber_k=args.k, minimizer=MinimizerConfig(), **overrides)
    row = report_row(config, alpha, value)
    if row["error"]:
        kind = row["error"].split(":", 1)[0]
        if kind in (InvalidMode.__name__, InvalidParameter.__name__):
            raise ConfigError(row["error"])
        _write(FigureDataset(None, [row]), args.format, args.out)
        log.error("%s", row["error"])
        return EXIT_NUMERICAL
    _write(FigureDataset(None, [row]), args.format, args.out)
    return EXIT_OK


def _sweep(config: SweepConfig, args) -> int:
    if args.out is not None and len(config.figures) > 1:
        raise ConfigError("--out takes a single figure; list several under 'outputs' instead")
    datasets = run_sweep(config, threads=args.threads)
    if config.outputs and args.out is None:
        by_tag = {d.figure_tag: d for d in datasets}
        for out in config.outputs:
            emit(by_tag[out.figure], out.format, out.path)
    else:
        for d in datasets:
            _write(d, args.format, args.out)
    for d in datasets:
        for w in d.metadata.get("truncation_warnings", []):
            log.warning("%s: truncated at n_max=%s (tail %.3g) for T=%s",
                        d.figure_tag.value, w["n_max"], w["tail_mass"], w["T"])
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    warnings.simplefilter("ignore", TruncationWarning)
    try:
        if getattr(args, "threads", 1) < 1:
            raise ConfigError("--threads must be >= 1")
        if args.command == "point":
            return _point(args)
        overrides = {"tail_tol": args.tail_tol, "n_cap": args.n_cap}
        if args.command == "sweep":
            config = load_config(args.config)
            if any(v is not None for v in overrides.values()):
                config = dataclasses.replace(
                    config, **{k: v for k, v in overrides.items() if v is not None}
                )
        else:
            config = preset(args.tag, **overrides)
        return _sweep(config, args)
    except ConfigError as exc:
        log.error("%s", exc)
        return EXIT_CONFIG
    except (InvalidMode, InvalidParameter) as exc:
        log.error("%s", exc)
        return EXIT_CONFIG
    except OSError as exc:
        log.error("I/O error: %s", exc)
        return EXIT_IO
    except (NumericalError, MinimizerFailure, DegenerateMeasurement, AlphaVacError) as exc:
        log.error("%s", exc)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
