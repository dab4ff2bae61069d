import pytest
from hypothesis import given, strategies as st

from bfpower.errors import UnitError
from bfpower.units import format_quantity, format_si, parse_quantity


@pytest.mark.parametrize("text, dim, expected", [
    ("39 mW", "power", 0.039),
    ("0.039 W", "power", 0.039),
    ("19.5mW", "power", 0.0195),
    ("494 fJ", "energy", 494e-15),
    ("12.5 pJ", "energy", 12.5e-12),
    ("100 MHz", "frequency", 1e8),
    ("1GHz", "frequency", 1e9),
    ("1.5 GHz", "frequency", 1.5e9),
    ("2e3 Hz", "frequency", 2000.0),
    ("0 W", "power", 0.0),
])
def test_parse_quantity(text, dim, expected):
    assert parse_quantity(text, dim) == expected


def test_milliwatt_and_watt_parse_identically():
    assert parse_quantity("39 mW", "power") == parse_quantity("0.039 W", "power")
    assert parse_quantity("16.8 mW", "power") == parse_quantity("0.0168 W", "power")


@pytest.mark.parametrize("text, dim", [
    ("39", "power"),
    ("39 mV", "power"),
    ("39 MHz", "power"),
    ("494 fJ", "frequency"),
    ("abc mW", "power"),
    ("", "power"),
])
def test_parse_quantity_rejects(text, dim):
    with pytest.raises(UnitError):
        parse_quantity(text, dim)


def test_bare_number_allowed_when_opted_in():
    assert parse_quantity("1e9", "frequency", require_unit=False) == 1e9


def test_unit_error_names_field():
    with pytest.raises(UnitError, match="p_lna"):
        parse_quantity("39 parsecs", "power", field="p_lna")


@given(st.floats(min_value=0, max_value=1e6, allow_nan=False))
def test_format_roundtrip(x):
    assert parse_quantity(format_quantity(x, "power"), "power") == x


@given(st.integers(min_value=-15, max_value=12), st.integers(min_value=1, max_value=999))
def test_suffixes_are_exact_powers_of_ten(exp, mantissa):
    # "<m> mW" must equal "<m>e-3 W" bit for bit
    assert parse_quantity(f"{mantissa} mW", "power") == parse_quantity(f"{mantissa}e-3 W", "power")
    assert parse_quantity(f"{mantissa} GHz", "frequency") == float(f"{mantissa}e9")
    assert parse_quantity(f"{mantissa} fJ", "energy") == float(f"{mantissa}e-15")


def test_format_si():
    assert format_si(127.5e6, "Hz") == "127.5 MHz"
    assert format_si(0.0, "W") == "0 W"
