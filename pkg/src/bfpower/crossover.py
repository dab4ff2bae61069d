"""Break-even points between digital and hybrid beamforming receivers.

Equating the HBF and DBF totals gives

    (N_ANT - N_RF) P_RF + 2 (N_ANT - N_RF) c B R
        = N_ANT N_RF P_PS + N_RF P_C + N_ANT P_SP

which is solved either for the quantization level count ``R`` at a fixed
bandwidth (``bits_star``) or for the bandwidth at a fixed ``R``
(``bandwidth_star``). DBF is no more expensive than HBF at or below the
returned value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .power_model import (
    BITS_MAX,
    BITS_MIN,
    AdcModel,
    Architecture,
    ComponentPowerTable,
    ReceiverDesign,
    check_bandwidth,
    check_bits,
    rf_chain_power,
    total_power,
)


@dataclass(frozen=True)
class CrossoverQuery:
    """Inputs for a DBF-vs-HBF break-even computation.

    Set ``bandwidth`` for a bits query, ``bits`` for a bandwidth query.
    """

    n_ant: int
    n_rf: int
    table: ComponentPowerTable
    adc: AdcModel
    bandwidth: Optional[float] = None
    bits: Optional[int] = None

    def __post_init__(self):
        for name in ("n_ant", "n_rf"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise DomainError(f"{name} must be a positive integer, got {v!r}")
        if self.n_rf >= self.n_ant:
            raise DomainError(
                "break-even formulas hold only for n_rf < n_ant "
                f"(got n_rf={self.n_rf}, n_ant={self.n_ant})")
        if self.bandwidth is not None:
            object.__setattr__(self, "bandwidth", check_bandwidth(self.bandwidth))
        if self.bits is not None:
            check_bits(self.bits)


@dataclass(frozen=True)
class CrossoverResult:
    """``value`` is bits (int) or Hz (float); ``None`` when no crossover exists.

    ``raw_r`` is the unfloored level count for bits queries.
    """

    exists: bool
    value: Optional[float] = None
    raw_r: Optional[float] = None


def _hbf_excess(n_ant: int, n_rf: int, t: ComponentPowerTable) -> float:
    """Power HBF spends beyond DBF, excluding ADCs."""
    return n_ant * (n_rf * t.p_ps + t.p_splitter) + n_rf * t.p_combiner \
        - (n_ant - n_rf) * rf_chain_power(t)


def _bits_from_levels(r: float) -> CrossoverResult:
    if not r >= 2 ** BITS_MIN:
        return CrossoverResult(exists=False, raw_r=r)
    # Beyond the global resolution cap every allowed b qualifies.
    bits = min(math.floor(math.log2(r)), BITS_MAX)
    return CrossoverResult(exists=True, value=bits, raw_r=r)


def raw_levels(query: CrossoverQuery) -> float:
    if query.bandwidth is None:
        raise DomainError("bits query needs a fixed bandwidth")
    num = _hbf_excess(query.n_ant, query.n_rf, query.table)
    return num / (2 * (query.n_ant - query.n_rf) * query.adc.c * query.bandwidth)


def bits_star(query: CrossoverQuery) -> CrossoverResult:
    """Largest ADC resolution with DBF power <= HBF power at fixed bandwidth."""
    return _bits_from_levels(raw_levels(query))


def bandwidth_star(query: CrossoverQuery) -> CrossoverResult:
    """Largest bandwidth (Hz, unfloored) with DBF power <= HBF power at fixed bits."""
    if query.bits is None:
        raise DomainError("bandwidth query needs fixed bits")
    num = _hbf_excess(query.n_ant, query.n_rf, query.table)
    bw = num / (2 * (query.n_ant - query.n_rf) * query.adc.c * 2 ** query.bits)
    if bw > 0:
        return CrossoverResult(exists=True, value=bw)
    return CrossoverResult(exists=False)


def crossover_asymptotic(n_rf: int, table: ComponentPowerTable, adc: AdcModel, *,
                         bandwidth: Optional[float] = None,
                         bits: Optional[int] = None) -> CrossoverResult:
    """Break-even point in the limit of infinitely many antennas.

    Exactly one of ``bandwidth`` (gives a bits result) or ``bits`` (gives a
    bandwidth result) must be set. For any finite array the true crossover
    is at least this value.
    """
    if (bandwidth is None) == (bits is None):
        raise DomainError("give exactly one of bandwidth or bits")
    if isinstance(n_rf, bool) or not isinstance(n_rf, int) or n_rf < 1:
        raise DomainError(f"n_rf must be a positive integer, got {n_rf!r}")
    num = n_rf * table.p_ps + table.p_splitter - rf_chain_power(table)
    if bandwidth is not None:
        bandwidth = check_bandwidth(bandwidth)
        return _bits_from_levels(num / (2 * adc.c * bandwidth))
    check_bits(bits)
    bw = num / (2 * adc.c * 2 ** bits)
    if bw > 0:
        return CrossoverResult(exists=True, value=bw)
    return CrossoverResult(exists=False)


def brute_force_bits_star(query: CrossoverQuery) -> CrossoverResult:
    """Same question as ``bits_star``, answered by evaluating both totals per b."""
    if query.bandwidth is None:
        raise DomainError("bits query needs a fixed bandwidth")
    best = None
    for b in range(BITS_MIN, BITS_MAX + 1):
        dbf = ReceiverDesign(Architecture.DBF, query.n_ant, b, query.bandwidth)
        hbf = ReceiverDesign(Architecture.HBF, query.n_ant, b, query.bandwidth, query.n_rf)
        if total_power(dbf, query.table, query.adc).total <= \
                total_power(hbf, query.table, query.adc).total:
            best = b
    if best is None:
        return CrossoverResult(exists=False)
    return CrossoverResult(exists=True, value=best)
