"""Command-line entry point.

Exit status: 0 on success, 2 on usage errors, 1 on domain or I/O errors.
Diagnostics go to stderr; CSV goes to stdout or ``--output``.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .config import ENV_CONFIG, RunConfig, parse_config, parse_sweep_spec
from .crossover import (
    CrossoverQuery,
    bandwidth_star,
    bits_star,
    crossover_asymptotic,
)
from .csvio import emit_csv
from .errors import ConfigError, DomainError, UnitError
from .figures import FigureId, figure_dataset, with_adc_profiles
from .power_model import Architecture, ReceiverDesign, total_power
from .quantization import db, effective_snr, from_db, min_adequate_bits
from .sweep import Dataset, pareto_front, points_dataset, run_sweep
from .units import format_si, parse_quantity


def _bandwidth_arg(text: str) -> float:
    try:
        return parse_quantity(text, "frequency", field="--bandwidth", require_unit=False)
    except UnitError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH",
                        help=f"configuration file (default: ${ENV_CONFIG} if set)")
    common.add_argument("--output", "-o", metavar="PATH",
                        help="output target for CSV ('-' for stdout)")
    common.add_argument("--exact", action="store_true",
                        help="print numbers at full precision")

    parser = argparse.ArgumentParser(
        prog="bfpower",
        description="Power consumption of analog, hybrid and digital beamforming receivers.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("power", parents=[common], help="total receiver power")
    p.add_argument("--arch", required=True, choices=[a.value for a in Architecture])
    p.add_argument("--n-ant", type=int, required=True)
    p.add_argument("--n-rf", type=int)
    p.add_argument("--bits", type=int)
    p.add_argument("--bandwidth", type=_bandwidth_arg, help="e.g. 100MHz, 1 GHz, 1e9")
    p.add_argument("--adc", metavar="NAME")
    p.add_argument("--breakdown", action="store_true", help="show per-component power")

    p = sub.add_parser("crossover", parents=[common], help="DBF vs HBF break-even point")
    p.add_argument("kind", choices=["bits", "bandwidth"])
    p.add_argument("--n-ant", type=int)
    p.add_argument("--n-rf", type=int)
    p.add_argument("--bandwidth", type=_bandwidth_arg)
    p.add_argument("--bits", type=int)
    p.add_argument("--adc", metavar="NAME")
    p.add_argument("--asymptotic", action="store_true", help="limit of infinitely many antennas")

    p = sub.add_parser("snr-eff", parents=[common], help="effective SNR after quantization")
    p.add_argument("--gamma-db", type=float, required=True)
    p.add_argument("--bits", type=int, required=True)

    p = sub.add_parser("bmin", parents=[common], help="minimum adequate ADC resolution")
    p.add_argument("--gamma-db", type=float, required=True)
    p.add_argument("--epsilon-db", type=float, help="tolerated SNR loss in dB (default 0.3)")

    p = sub.add_parser("sweep", parents=[common], help="evaluate a design grid to CSV")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--pareto", action="store_true",
                   help="emit only the power/effective-SNR Pareto front")

    p = sub.add_parser("figure", parents=[common], help="dataset behind a standard figure")
    p.add_argument("figure_id", choices=[f.value for f in FigureId], metavar="FIGURE_ID",
                   help="one of: " + ", ".join(f.value for f in FigureId))

    for name, subparser in sub.choices.items():
        subparser.set_defaults(_handler=_COMMANDS[name], _parser=subparser)
    return parser


def load_config(path: str | None) -> RunConfig:
    path = path or os.environ.get(ENV_CONFIG)
    if not path:
        return RunConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path!r}: {exc.strerror or exc}") from None
    try:
        return parse_config(text)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc}") from None


class _Printer:
    def __init__(self, precision: int, exact: bool):
        self.precision = precision
        self.exact = exact

    def num(self, x: float) -> str:
        return repr(x) if self.exact else f"{x:.{self.precision}g}"

    def hertz(self, x: float) -> str:
        return f"{x!r} Hz" if self.exact else format_si(x, "Hz", self.precision)

    def decibel(self, x: float) -> str:
        if self.exact:
            return repr(x)
        return f"{round(x, self.precision - 1) + 0.0:.{self.precision - 1}f}"


def _require(parser, args, *names):
    for name in names:
        if getattr(args, name.replace("-", "_")) is None:
            parser.error(f"--{name} is required")


def _cmd_power(args, cfg, out, parser):
    bits = args.bits if args.bits is not None else cfg.defaults.bits
    bandwidth = args.bandwidth if args.bandwidth is not None else cfg.defaults.bandwidth
    if bits is None:
        parser.error("--bits is required")
    if bandwidth is None:
        parser.error("--bandwidth is required")
    arch = Architecture.parse(args.arch)
    n_rf = args.n_rf if args.n_rf is not None else cfg.defaults.n_rf
    if arch is Architecture.HBF and n_rf is None:
        parser.error("--n-rf is required for hbf")
    design = ReceiverDesign(arch, args.n_ant, bits, bandwidth, n_rf or 1)
    bd = total_power(design, cfg.table, cfg.adc(args.adc or cfg.defaults.adc))
    print(f"P_tot = {out.num(bd.total)} W")
    if args.breakdown:
        for label, watts in bd.per_component:
            print(f"  {label:<15} {out.num(watts)} W")


def _cmd_crossover(args, cfg, out, parser):
    adc = cfg.adc(args.adc or cfg.defaults.adc)
    n_rf = args.n_rf if args.n_rf is not None else cfg.defaults.n_rf
    if n_rf is None:
        parser.error("--n-rf is required")
    if args.kind == "bits":
        bw = args.bandwidth if args.bandwidth is not None else cfg.defaults.bandwidth
        if bw is None:
            parser.error("--bandwidth is required for a bits query")
        fixed = dict(bandwidth=bw)
    else:
        bits = args.bits if args.bits is not None else cfg.defaults.bits
        if bits is None:
            parser.error("--bits is required for a bandwidth query")
        fixed = dict(bits=bits)

    if args.asymptotic:
        result = crossover_asymptotic(n_rf, cfg.table, adc, **fixed)
    else:
        _require(parser, args, "n-ant")
        query = CrossoverQuery(args.n_ant, n_rf, cfg.table, adc, **fixed)
        result = bits_star(query) if args.kind == "bits" else bandwidth_star(query)

    if args.kind == "bits":
        print(f"b* = {result.value}" if result.exists else "b* = none (DBF exceeds HBF even at 1 bit)")
        print(f"R = {out.num(result.raw_r)}")
    elif result.exists:
        print(f"B* = {out.hertz(result.value)}")
    else:
        print("B* = none (DBF never cheaper than HBF)")


def _cmd_snr_eff(args, cfg, out, parser):
    g_ef = effective_snr(from_db(args.gamma_db), args.bits)
    if g_ef == 0:
        raise DomainError("effective SNR is zero; no dB value")
    g_ef_db = db(g_ef)
    print(f"gamma_ef = {out.decibel(g_ef_db)} dB")
    print(f"loss = {out.decibel(args.gamma_db - g_ef_db)} dB")


def _cmd_bmin(args, cfg, out, parser):
    eps = args.epsilon_db if args.epsilon_db is not None else cfg.defaults.epsilon_db
    print(f"b_m = {min_adequate_bits(from_db(args.gamma_db), eps)}")


def _target(args, cfg):
    return args.output if args.output is not None else cfg.defaults.output


def _cmd_sweep(args, cfg, out, parser):
    try:
        text = Path(args.spec).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read sweep spec {args.spec!r}: {exc.strerror or exc}") from None
    spec = parse_sweep_spec(text, cfg)
    result = run_sweep(spec, cfg.table, workers=max(1, args.workers))
    points = result.points
    if args.pareto:
        points = list(pareto_front(points).points)
    target = _target(args, cfg)
    emit_csv(points_dataset(points), target)

    report = [("skipped", s.arch.name, s.n_ant, None, None, None, None, s.reason)
              for s in result.skipped]
    report += [("error", e.arch.name, e.n_ant, e.n_rf, e.bits, e.bandwidth, e.adc_label, e.message)
               for e in result.errors]
    if report:
        print(f"sweep: {len(result.skipped)} skipped, {len(result.errors)} invalid point(s)",
              file=sys.stderr)
        ds = Dataset(("kind", "architecture", "n_ant", "n_rf", "bits", "bandwidth_hz", "adc",
                      "reason"), tuple(report))
        if target in (None, "-"):
            emit_csv(ds, sys.stderr)
        else:
            sidecar = f"{target}.skipped.csv"
            emit_csv(ds, sidecar)
            print(f"sweep: details in {sidecar}", file=sys.stderr)


def _cmd_figure(args, cfg, out, parser):
    fig = FigureId.parse(args.figure_id)
    overrides = with_adc_profiles(fig, cfg.adc("lpadc"), cfg.adc("hpadc"))
    emit_csv(figure_dataset(fig, cfg.table, overrides), _target(args, cfg))


_COMMANDS = {
    "power": _cmd_power,
    "crossover": _cmd_crossover,
    "snr-eff": _cmd_snr_eff,
    "bmin": _cmd_bmin,
    "sweep": _cmd_sweep,
    "figure": _cmd_figure,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = load_config(args.config)
        out = _Printer(cfg.defaults.precision, args.exact)
        args._handler(args, cfg, out, args._parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (DomainError, ConfigError, OSError) as exc:
        print(f"bfpower: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
