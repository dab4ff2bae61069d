"""Unit-suffixed quantity parsing.

Values are converted to base SI units (W, J, Hz) with exact power-of-ten
scaling: the mantissa is read as a decimal and shifted, so ``"39 mW"`` and
``"0.039 W"`` yield the identical float.
"""

from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation

from .errors import UnitError

# suffix -> (dimension, power of ten)
_UNITS: dict[str, tuple[str, int]] = {
    "W": ("power", 0),
    "kW": ("power", 3),
    "mW": ("power", -3),
    "uW": ("power", -6),
    "µW": ("power", -6),
    "J": ("energy", 0),
    "mJ": ("energy", -3),
    "uJ": ("energy", -6),
    "nJ": ("energy", -9),
    "pJ": ("energy", -12),
    "fJ": ("energy", -15),
    "Hz": ("frequency", 0),
    "kHz": ("frequency", 3),
    "MHz": ("frequency", 6),
    "GHz": ("frequency", 9),
}

BASE_UNIT = {"power": "W", "energy": "J", "frequency": "Hz"}

_QUANTITY = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([^\s\d.+-][^\s]*)?\s*$")


def parse_quantity(text: str, dimension: str, *, field: str = "value",
                   require_unit: bool = True) -> float:
    """Parse ``text`` such as ``"494 fJ"`` into a float in base units.

    Args:
        text: number with an optional unit suffix (whitespace optional).
        dimension: one of ``"power"``, ``"energy"``, ``"frequency"``.
        field: name used in error messages.
        require_unit: if False, a bare number is taken in base units.

    Raises:
        UnitError: malformed number, unknown suffix, wrong dimension, or a
            missing suffix when one is required.
    """
    if dimension not in BASE_UNIT:
        raise ValueError(f"unknown dimension {dimension!r}")
    m = _QUANTITY.match(str(text))
    if m is None:
        raise UnitError(f"{field}: cannot parse quantity {text!r}")
    number, suffix = m.groups()
    if suffix is None:
        if require_unit:
            raise UnitError(
                f"{field}: missing unit in {text!r} "
                f"(expected a {dimension} unit such as {BASE_UNIT[dimension]})")
        exponent = 0
    else:
        if suffix not in _UNITS:
            raise UnitError(f"{field}: unknown unit {suffix!r} in {text!r}")
        dim, exponent = _UNITS[suffix]
        if dim != dimension:
            raise UnitError(
                f"{field}: unit {suffix!r} is a {dim} unit, expected {dimension}")
    try:
        value = Decimal(number).scaleb(exponent)
    except InvalidOperation as exc:  # pragma: no cover - regex guards this
        raise UnitError(f"{field}: cannot parse quantity {text!r}") from exc
    return float(value)


def format_quantity(value: float, dimension: str) -> str:
    """Render ``value`` in base units so that parsing it back is exact."""
    return f"{value!r} {BASE_UNIT[dimension]}"


_SI_PREFIXES = [(1e9, "G"), (1e6, "M"), (1e3, "k"), (1.0, ""), (1e-3, "m"),
                (1e-6, "u"), (1e-9, "n"), (1e-12, "p"), (1e-15, "f")]


def format_si(value: float, unit: str, digits: int = 4) -> str:
    """Human-readable engineering notation, e.g. ``127.5 MHz``."""
    if value == 0 or value != value:
        return f"{value:.{digits}g} {unit}"
    mag = abs(value)
    for scale, prefix in _SI_PREFIXES:
        if mag >= scale:
            return f"{value / scale:.{digits}g} {prefix}{unit}"
    scale, prefix = _SI_PREFIXES[-1]
    return f"{value / scale:.{digits}g} {prefix}{unit}"
