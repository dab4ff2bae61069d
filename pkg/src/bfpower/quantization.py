"""Additive quantization noise model (AQNM) for low-resolution ADCs.

The quantizer is replaced by a gain ``1 - eta`` plus uncorrelated noise,
where ``eta`` is the inverse signal-to-quantization-noise ratio for a
Gaussian input. SNRs are linear throughout; see ``db``/``from_db``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType

from .errors import DomainError
from .power_model import BITS_MAX, BITS_MIN, check_bits

# Optimal non-uniform quantizer, Gaussian input.
ETA_TABLE = MappingProxyType({
    1: 0.3634,
    2: 0.1175,
    3: 0.03454,
    4: 0.009497,
    5: 0.002499,
})

_ETA_HIGH_RES_SCALE = math.pi * math.sqrt(3) / 2


def db(x: float) -> float:
    return 10 * math.log10(x)


def from_db(x_db: float) -> float:
    return 10 ** (x_db / 10)


def eta(bits: int) -> float:
    """Inverse SQNR: tabulated up to 5 bits, ``(pi*sqrt(3)/2) * 2**(-2b)`` above."""
    check_bits(bits)
    if bits in ETA_TABLE:
        return ETA_TABLE[bits]
    return _ETA_HIGH_RES_SCALE * 2.0 ** (-2 * bits)


@dataclass(frozen=True)
class SnrPoint:
    gamma: float
    gamma_ef: float

    @property
    def loss_db(self) -> float:
        return db(self.gamma) - db(self.gamma_ef)


def effective_snr(gamma: float, bits: int) -> float:
    """Effective SNR ``(1 - eta) * gamma / (1 + eta * gamma)`` (linear)."""
    if not gamma >= 0:
        raise DomainError(f"gamma must be a non-negative linear SNR, got {gamma!r}")
    e = eta(bits)
    return (1 - e) * gamma / (1 + e * gamma)


def snr_point(gamma: float, bits: int) -> SnrPoint:
    return SnrPoint(gamma, effective_snr(gamma, bits))


def min_adequate_bits(gamma: float, epsilon_db: float) -> int:
    """Smallest resolution whose quantization loss is at most ``epsilon_db``.

    The loss is ``10*log10(gamma) - 10*log10(gamma_ef)``, scanned over
    ``bits = 1..20``.

    Raises:
        DomainError: ``gamma <= 0``, ``epsilon_db <= 0``, or no resolution in
            range meets the tolerance.
    """
    if not gamma > 0:
        raise DomainError(f"gamma must be > 0, got {gamma!r}")
    if not epsilon_db > 0:
        raise DomainError(f"epsilon_db must be > 0, got {epsilon_db!r}")
    target = db(gamma)
    for bits in range(BITS_MIN, BITS_MAX + 1):
        if target - db(effective_snr(gamma, bits)) <= epsilon_db:
            return bits
    raise DomainError(
        f"loss tolerance {epsilon_db} dB not attainable within {BITS_MAX} bits")
