"""Power consumption modeling for mmWave beamforming receivers."""

from .crossover import (
    CrossoverQuery,
    CrossoverResult,
    bandwidth_star,
    bits_star,
    brute_force_bits_star,
    crossover_asymptotic,
)
from .errors import ConfigError, DomainError, UnitError
from .power_model import (
    HPADC,
    LPADC,
    AdcModel,
    Architecture,
    ComponentPowerTable,
    PowerBreakdown,
    ReceiverDesign,
    adc_power,
    rf_chain_power,
    total_power,
)
from .quantization import ETA_TABLE, effective_snr, eta, min_adequate_bits

__version__ = "0.1.0"
