"""Design-space sweeps and power/SNR Pareto frontiers."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import DomainError
from .power_model import (
    AdcModel,
    Architecture,
    ComponentPowerTable,
    ReceiverDesign,
    total_power,
)
from .quantization import db, effective_snr, from_db


@dataclass(frozen=True)
class Dataset:
    """A plain table: column names and row tuples."""

    columns: tuple[str, ...]
    rows: tuple[tuple, ...]

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]

    def records(self) -> list[dict]:
        return [dict(zip(self.columns, r)) for r in self.rows]


@dataclass(frozen=True)
class SweepSpec:
    """Cartesian grid of receiver designs.

    Give either ``n_rf_values`` (explicit list) or ``n_rf_ratio`` (k such
    that n_rf = n_ant / k). Both only affect HBF designs.
    """

    architectures: tuple[Architecture, ...]
    n_ant_values: tuple[int, ...]
    bits_range: tuple[int, int]
    bandwidth_values: tuple[float, ...]
    adc_models: tuple[AdcModel, ...]
    n_rf_values: Optional[tuple[int, ...]] = None
    n_rf_ratio: Optional[int] = None
    gamma_db: Optional[float] = None

    def __post_init__(self):
        for name in ("architectures", "n_ant_values", "bandwidth_values", "adc_models"):
            if not getattr(self, name):
                raise DomainError(f"sweep {name} must be non-empty")
        for name in ("architectures", "n_ant_values", "bandwidth_values", "adc_models",
                     "n_rf_values"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, tuple(v))
        if self.n_rf_values is not None and self.n_rf_ratio is not None:
            raise DomainError("give only one of n_rf_values or n_rf_ratio")
        if Architecture.HBF in self.architectures and \
                self.n_rf_values is None and self.n_rf_ratio is None:
            raise DomainError("HBF sweeps need n_rf_values or n_rf_ratio")
        if self.n_rf_values is not None and not self.n_rf_values:
            raise DomainError("sweep n_rf_values must be non-empty")
        if self.n_rf_ratio is not None and self.n_rf_ratio < 1:
            raise DomainError(f"n_rf_ratio must be a positive integer, got {self.n_rf_ratio}")
        lo, hi = self.bits_range
        if lo > hi:
            raise DomainError(f"empty bits range {lo}..{hi}")

    @property
    def bits_values(self) -> range:
        return range(self.bits_range[0], self.bits_range[1] + 1)


@dataclass(frozen=True)
class TradeoffPoint:
    design: ReceiverDesign
    adc: AdcModel
    total_power: float
    gamma_ef_db: Optional[float] = None

    def sort_key(self) -> tuple:
        d = self.design
        return (d.arch.name, self.adc.label, d.n_ant, d.n_rf, d.bandwidth, d.bits)


@dataclass(frozen=True)
class SkippedPoint:
    arch: Architecture
    n_ant: int
    reason: str


@dataclass(frozen=True)
class PointError:
    arch: Architecture
    n_ant: int
    n_rf: int
    bits: int
    bandwidth: float
    adc_label: str
    message: str


@dataclass
class SweepResult:
    points: list[TradeoffPoint] = field(default_factory=list)
    skipped: list[SkippedPoint] = field(default_factory=list)
    errors: list[PointError] = field(default_factory=list)


def _n_rf_choices(spec: SweepSpec, arch: Architecture, n_ant: int,
                  skipped: list[SkippedPoint]) -> Sequence[int]:
    if arch is not Architecture.HBF:
        return (1,)
    if spec.n_rf_values is not None:
        return spec.n_rf_values
    k = spec.n_rf_ratio
    if n_ant % k:
        skipped.append(SkippedPoint(arch, n_ant, f"n_ant={n_ant} not divisible by ratio {k}"))
        return ()
    return (n_ant // k,)


def _evaluate(task) -> TradeoffPoint | PointError:
    arch, n_ant, n_rf, bits, bandwidth, adc, table, gamma = task
    try:
        design = ReceiverDesign(arch, n_ant, bits, bandwidth, n_rf)
        p = total_power(design, table, adc).total
        g = None if gamma is None else db(effective_snr(gamma, bits))
    except DomainError as exc:
        return PointError(arch, n_ant, n_rf, bits, bandwidth, adc.label, str(exc))
    return TradeoffPoint(design, adc, p, g)


def run_sweep(spec: SweepSpec, table: ComponentPowerTable, workers: int = 1) -> SweepResult:
    """Evaluate every design in the grid.

    Output order is (architecture, ADC label, n_ant, n_rf, bandwidth, bits)
    regardless of ``workers``. Invalid points are collected in
    ``result.errors``; indivisible ratio-rule points in ``result.skipped``.
    """
    result = SweepResult()
    gamma = None if spec.gamma_db is None else from_db(spec.gamma_db)
    tasks = []
    seen = set()
    for arch, n_ant in itertools.product(spec.architectures, spec.n_ant_values):
        n_rfs = _n_rf_choices(spec, arch, n_ant, result.skipped)
        for n_rf, adc, bw, bits in itertools.product(
                n_rfs, spec.adc_models, spec.bandwidth_values, spec.bits_values):
            key = (arch, n_ant, n_rf, adc, bw, bits)
            if key in seen:
                continue
            seen.add(key)
            tasks.append((arch, n_ant, n_rf, bits, bw, adc, table, gamma))

    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_evaluate, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        outcomes = [_evaluate(t) for t in tasks]

    for out in outcomes:
        if isinstance(out, PointError):
            result.errors.append(out)
        else:
            result.points.append(out)
    result.points.sort(key=TradeoffPoint.sort_key)
    result.errors.sort(key=lambda e: (e.arch.name, e.adc_label, e.n_ant, e.n_rf, e.bandwidth, e.bits))
    return result


SWEEP_COLUMNS = ("architecture", "adc", "n_ant", "n_rf", "bandwidth_hz", "bits",
                 "total_power_w", "gamma_ef_db")


def points_dataset(points: Sequence[TradeoffPoint]) -> Dataset:
    rows = tuple(
        (p.design.arch.name, p.adc.label, p.design.n_ant, p.design.n_rf,
         p.design.bandwidth, p.design.bits, p.total_power, p.gamma_ef_db)
        for p in points)
    return Dataset(SWEEP_COLUMNS, rows)


@dataclass(frozen=True)
class ParetoSet:
    """Non-dominated points, ascending in power and strictly ascending in SNR."""

    points: tuple[TradeoffPoint, ...]


def _pareto_order(p: TradeoffPoint) -> tuple:
    d = p.design
    return (p.total_power, -p.gamma_ef_db, d.bits, d.arch.name, p.adc.label,
            d.n_ant, d.n_rf, d.bandwidth)


def pareto_front(points: Sequence[TradeoffPoint]) -> ParetoSet:
    """Minimise power, maximise effective SNR.

    A point survives if no other point has <= power and >= SNR with one
    strict. Exact (power, SNR) ties keep one representative: lowest bits,
    then architecture name.
    """
    for p in points:
        if p.gamma_ef_db is None:
            raise DomainError(f"point {p.design} has no effective SNR; sweep with gamma_db")
    front = []
    best = float("-inf")
    for p in sorted(points, key=_pareto_order):
        if p.gamma_ef_db > best:
            front.append(p)
            best = p.gamma_ef_db
    return ParetoSet(tuple(front))
