"""Receiver power model for analog, hybrid and digital beamforming.

All quantities are in base SI units: watts, joules, hertz.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, fields

from .errors import DomainError

BITS_MIN = 1
BITS_MAX = 20


class Architecture(enum.Enum):
    ABF = "abf"
    HBF = "hbf"
    DBF = "dbf"

    @classmethod
    def parse(cls, text: str) -> "Architecture":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise DomainError(
                f"unknown architecture {text!r} (expected abf, hbf or dbf)") from None


@dataclass(frozen=True)
class ComponentPowerTable:
    """Power draw of each receiver building block, in watts."""

    p_lna: float
    p_ps: float
    p_combiner: float
    p_splitter: float
    p_mixer: float
    p_lo: float
    p_lpf: float
    p_bb_amp: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not value >= 0:
                raise DomainError(f"{f.name} must be >= 0 W, got {value!r}")

    @classmethod
    def paper_defaults(cls) -> "ComponentPowerTable":
        # The combiner has no published figure; it mirrors the splitter.
        return cls(
            p_lna=0.039,
            p_ps=0.0195,
            p_combiner=0.0195,
            p_splitter=0.0195,
            p_mixer=0.0168,
            p_lo=0.005,
            p_lpf=0.014,
            p_bb_amp=0.005,
        )

    @classmethod
    def zeros(cls) -> "ComponentPowerTable":
        return cls(*(0.0 for _ in fields(cls)))


@dataclass(frozen=True)
class AdcModel:
    """An ADC characterised by its energy per conversion step ``c`` (J)."""

    label: str
    c: float

    def __post_init__(self):
        if not self.c > 0:
            raise DomainError(f"ADC {self.label!r}: c must be > 0 J, got {self.c!r}")


LPADC = AdcModel("LPADC", 494e-15)
HPADC = AdcModel("HPADC", 12.5e-12)


def check_bits(bits) -> int:
    if isinstance(bits, bool) or not isinstance(bits, int) or not BITS_MIN <= bits <= BITS_MAX:
        raise DomainError(f"bits must be an integer in [{BITS_MIN}, {BITS_MAX}], got {bits!r}")
    return bits


def check_bandwidth(bandwidth) -> float:
    if not bandwidth > 0:
        raise DomainError(f"bandwidth must be > 0 Hz, got {bandwidth!r}")
    return float(bandwidth)


@dataclass(frozen=True)
class ReceiverDesign:
    """One point in the receiver design space.

    ``n_rf`` only matters for HBF; ABF and DBF designs store ``n_rf = 1``.
    """

    arch: Architecture
    n_ant: int
    bits: int
    bandwidth: float
    n_rf: int = 1

    def __post_init__(self):
        if not isinstance(self.arch, Architecture):
            object.__setattr__(self, "arch", Architecture.parse(str(self.arch)))
        if isinstance(self.n_ant, bool) or not isinstance(self.n_ant, int) or self.n_ant < 1:
            raise DomainError(f"n_ant must be a positive integer, got {self.n_ant!r}")
        check_bits(self.bits)
        object.__setattr__(self, "bandwidth", check_bandwidth(self.bandwidth))
        if self.arch is Architecture.HBF:
            if isinstance(self.n_rf, bool) or not isinstance(self.n_rf, int) or self.n_rf < 1:
                raise DomainError(f"n_rf must be a positive integer, got {self.n_rf!r}")
            if self.n_rf > self.n_ant:
                raise DomainError(
                    f"HBF requires n_rf <= n_ant, got n_rf={self.n_rf}, n_ant={self.n_ant}")
        else:
            object.__setattr__(self, "n_rf", 1)

    @property
    def levels(self) -> int:
        """Number of quantization levels, 2**bits."""
        return 2 ** self.bits


@dataclass(frozen=True)
class PowerBreakdown:
    total: float
    per_component: tuple[tuple[str, float], ...]

    def as_dict(self) -> dict[str, float]:
        return dict(self.per_component)


def adc_power(adc: AdcModel, bandwidth: float, bits: int) -> float:
    """Power of a single ADC sampling at Nyquist: ``c * B * 2**bits``."""
    check_bandwidth(bandwidth)
    check_bits(bits)
    return adc.c * bandwidth * 2 ** bits


def rf_chain_power(table: ComponentPowerTable) -> float:
    """Mixer + local oscillator + low-pass filter + baseband amplifier."""
    return table.p_mixer + table.p_lo + table.p_lpf + table.p_bb_amp


BREAKDOWN_LABELS = ("lna", "phase_shifters", "splitters", "combiners", "rf_chains", "adcs")


def total_power(design: ReceiverDesign, table: ComponentPowerTable,
                adc: AdcModel) -> PowerBreakdown:
    """Total receiver power and its split over component groups.

    Every breakdown lists the same six groups in ``BREAKDOWN_LABELS`` order;
    groups an architecture does not use are zero. Two ADCs (I and Q) are
    counted per RF chain.
    """
    n_ant, n_rf = design.n_ant, design.n_rf
    p_adc = adc_power(adc, design.bandwidth, design.bits)
    p_rf = rf_chain_power(table)
    t = table

    if design.arch is Architecture.ABF:
        total = n_ant * (t.p_lna + t.p_ps) + p_rf + t.p_combiner + 2 * p_adc
        groups = (n_ant * t.p_lna, n_ant * t.p_ps, 0.0, t.p_combiner, p_rf, 2 * p_adc)
    elif design.arch is Architecture.HBF:
        if n_rf > n_ant:
            raise DomainError(f"HBF requires n_rf <= n_ant, got n_rf={n_rf}, n_ant={n_ant}")
        total = (n_ant * (t.p_lna + t.p_splitter + n_rf * t.p_ps)
                 + n_rf * (p_rf + t.p_combiner + 2 * p_adc))
        groups = (n_ant * t.p_lna, n_ant * n_rf * t.p_ps, n_ant * t.p_splitter,
                  n_rf * t.p_combiner, n_rf * p_rf, n_rf * 2 * p_adc)
    else:
        total = n_ant * (t.p_lna + p_rf + 2 * p_adc)
        groups = (n_ant * t.p_lna, 0.0, 0.0, 0.0, n_ant * p_rf, n_ant * 2 * p_adc)

    return PowerBreakdown(total=total, per_component=tuple(zip(BREAKDOWN_LABELS, groups)))
