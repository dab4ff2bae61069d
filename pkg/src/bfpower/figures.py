"""Plot-ready datasets for the standard comparison figures.

Each generator uses a published parameterization by default; any of its
parameters can be replaced through ``overrides``.
"""

from __future__ import annotations

import enum
from typing import Any, Mapping, Optional

from .crossover import CrossoverQuery, bandwidth_star, bits_star
from .errors import DomainError
from .power_model import HPADC, LPADC, AdcModel, Architecture, ComponentPowerTable
from .quantization import db, effective_snr, eta, from_db
from .sweep import Dataset, SweepSpec, points_dataset, run_sweep


class FigureId(enum.Enum):
    PTOT_VS_BITS_100MHZ = "ptot-vs-bits-100MHz"
    PTOT_VS_BITS_1GHZ = "ptot-vs-bits-1GHz"
    BSTAR_VS_BANDWIDTH = "bstar-vs-bandwidth"
    BWSTAR_VS_BITS = "bwstar-vs-bits"
    SNR_EFF_VS_BITS = "snr-eff-vs-bits"
    POWER_VS_SNREFF_LPADC = "power-vs-snreff-lpadc"
    POWER_VS_SNREFF_HPADC = "power-vs-snreff-hpadc"

    @classmethod
    def parse(cls, text: str) -> "FigureId":
        for member in cls:
            if member.value.lower() == text.strip().lower():
                return member
        known = ", ".join(m.value for m in cls)
        raise DomainError(f"unknown figure id {text!r} (known: {known})")


_ALL_ARCHS = (Architecture.ABF, Architecture.DBF, Architecture.HBF)
# 100 MHz .. 2 GHz in 100 MHz steps; integer multiples keep the values exact.
_BANDWIDTH_GRID = tuple(k * 1e8 for k in range(1, 21))

DEFAULTS: dict[FigureId, dict[str, Any]] = {
    FigureId.PTOT_VS_BITS_100MHZ: dict(
        n_ant_values=(16, 64), n_rf=4, bits=(1, 10), bandwidth_values=(1e8,),
        adc_models=(LPADC,)),
    FigureId.PTOT_VS_BITS_1GHZ: dict(
        n_ant_values=(16, 64), n_rf=4, bits=(1, 10), bandwidth_values=(1e9,),
        adc_models=(LPADC,)),
    FigureId.BSTAR_VS_BANDWIDTH: dict(
        n_ant_values=(64, 128, 256), n_rf_ratio=8, bandwidth_values=_BANDWIDTH_GRID,
        adc_models=(LPADC, HPADC)),
    FigureId.BWSTAR_VS_BITS: dict(
        n_ant_values=(64, 128, 256), n_rf_ratio=8, bits=(1, 10),
        adc_models=(LPADC, HPADC)),
    FigureId.SNR_EFF_VS_BITS: dict(gamma_db_values=(-10.0, 0.0, 10.0, 20.0), bits=(1, 10)),
    FigureId.POWER_VS_SNREFF_LPADC: dict(
        n_ant_values=(16,), n_rf=4, bits=(1, 6), bandwidth_values=(1e8, 1e9),
        adc_models=(LPADC,), gamma_db=10.0),
    FigureId.POWER_VS_SNREFF_HPADC: dict(
        n_ant_values=(16,), n_rf=4, bits=(1, 5), bandwidth_values=(1e8, 1e9),
        adc_models=(HPADC,), gamma_db=10.0),
}


def _params(fig: FigureId, overrides: Optional[Mapping[str, Any]]) -> dict[str, Any]:
    params = dict(DEFAULTS[fig])
    for key, value in (overrides or {}).items():
        if key not in params:
            raise DomainError(
                f"figure {fig.value} has no parameter {key!r} "
                f"(allowed: {', '.join(sorted(params))})")
        params[key] = value
    return params


def _ptot_dataset(p, table) -> Dataset:
    spec = SweepSpec(
        architectures=_ALL_ARCHS, n_ant_values=p["n_ant_values"], bits_range=p["bits"],
        bandwidth_values=p["bandwidth_values"], adc_models=p["adc_models"],
        n_rf_values=(p["n_rf"],), gamma_db=p.get("gamma_db"))
    result = run_sweep(spec, table)
    if result.errors:
        raise DomainError(result.errors[0].message)
    ds = points_dataset(result.points)
    if spec.gamma_db is None:
        keep = [i for i, c in enumerate(ds.columns) if c != "gamma_ef_db"]
        return Dataset(tuple(ds.columns[i] for i in keep),
                       tuple(tuple(r[i] for i in keep) for r in ds.rows))
    return ds


def _ratio_pairs(p):
    k = p["n_rf_ratio"]
    pairs = []
    for n_ant in p["n_ant_values"]:
        if n_ant % k:
            raise DomainError(f"n_ant={n_ant} not divisible by n_rf ratio {k}")
        pairs.append((n_ant, n_ant // k))
    return pairs


def _bstar_dataset(p, table) -> Dataset:
    rows = []
    for adc in p["adc_models"]:
        for n_ant, n_rf in _ratio_pairs(p):
            for bw in p["bandwidth_values"]:
                r = bits_star(CrossoverQuery(n_ant, n_rf, table, adc, bandwidth=bw))
                rows.append((adc.label, n_ant, n_rf, bw, r.raw_r, r.value))
    return Dataset(("adc", "n_ant", "n_rf", "bandwidth_hz", "raw_r", "b_star"), tuple(rows))


def _bwstar_dataset(p, table) -> Dataset:
    lo, hi = p["bits"]
    rows = []
    for adc in p["adc_models"]:
        for n_ant, n_rf in _ratio_pairs(p):
            for b in range(lo, hi + 1):
                r = bandwidth_star(CrossoverQuery(n_ant, n_rf, table, adc, bits=b))
                rows.append((adc.label, n_ant, n_rf, b, r.value))
    return Dataset(("adc", "n_ant", "n_rf", "bits", "bandwidth_star_hz"), tuple(rows))


def _snr_dataset(p) -> Dataset:
    lo, hi = p["bits"]
    rows = []
    for g_db in p["gamma_db_values"]:
        g = from_db(g_db)
        for b in range(lo, hi + 1):
            rows.append((g_db, b, eta(b), db(effective_snr(g, b))))
    return Dataset(("gamma_db", "bits", "eta", "gamma_ef_db"), tuple(rows))


def figure_dataset(figure_id: FigureId | str, table: ComponentPowerTable,
                   overrides: Optional[Mapping[str, Any]] = None) -> Dataset:
    """Build the dataset behind one figure.

    Raises:
        DomainError: unknown figure id or override key.
    """
    fig = figure_id if isinstance(figure_id, FigureId) else FigureId.parse(figure_id)
    p = _params(fig, overrides)
    if fig in (FigureId.PTOT_VS_BITS_100MHZ, FigureId.PTOT_VS_BITS_1GHZ,
               FigureId.POWER_VS_SNREFF_LPADC, FigureId.POWER_VS_SNREFF_HPADC):
        return _ptot_dataset(p, table)
    if fig is FigureId.BSTAR_VS_BANDWIDTH:
        return _bstar_dataset(p, table)
    if fig is FigureId.BWSTAR_VS_BITS:
        return _bwstar_dataset(p, table)
    return _snr_dataset(p)


def with_adc_profiles(fig: FigureId, lpadc: AdcModel, hpadc: AdcModel) -> dict[str, Any]:
    """Overrides that swap the default ADC profiles for configured ones."""
    defaults = DEFAULTS[fig].get("adc_models")
    if defaults is None:
        return {}
    swap = {LPADC.label: lpadc, HPADC.label: hpadc}
    models = tuple(swap[m.label] for m in defaults)
    return {} if models == defaults else {"adc_models": models}
