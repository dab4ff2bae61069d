"""Run configuration: sectioned key/value files with unit-suffixed values.

Layout::

    [components]
    p_lna = 39 mW
    ...
    [adc.lpadc]
    c = 494 fJ
    [defaults]
    adc = lpadc
    epsilon_db = 0.3

Every section and key is optional; anything omitted falls back to the
published component values and the two built-in ADC profiles.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field, fields, replace
from typing import Optional

from .errors import ConfigError, DomainError, UnitError
from .power_model import (
    HPADC,
    LPADC,
    AdcModel,
    Architecture,
    ComponentPowerTable,
)
from .sweep import SweepSpec
from .units import format_quantity, parse_quantity

ENV_CONFIG = "BFPOWER_CONFIG"

_COMPONENT_KEYS = tuple(f.name for f in fields(ComponentPowerTable))
_ADC_NAME = re.compile(r"^[A-Za-z0-9_-]+$")


def builtin_adc_profiles() -> dict[str, AdcModel]:
    return {"lpadc": LPADC, "hpadc": HPADC}


@dataclass(frozen=True)
class Defaults:
    adc: str = "lpadc"
    epsilon_db: float = 0.3
    precision: int = 4
    output: str = "-"
    bandwidth: Optional[float] = None
    bits: Optional[int] = None
    n_rf: Optional[int] = None


@dataclass(frozen=True)
class RunConfig:
    table: ComponentPowerTable = field(default_factory=ComponentPowerTable.paper_defaults)
    adc_profiles: dict[str, AdcModel] = field(default_factory=builtin_adc_profiles)
    defaults: Defaults = field(default_factory=Defaults)

    def adc(self, name: str) -> AdcModel:
        try:
            return self.adc_profiles[name.strip().lower()]
        except KeyError:
            known = ", ".join(sorted(self.adc_profiles))
            raise DomainError(f"unknown ADC profile {name!r} (known: {known})") from None


def _line_of(text: str, section: str, key: Optional[str] = None) -> Optional[int]:
    """Best-effort line number of ``key`` inside ``[section]``."""
    current = None
    for n, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s.startswith("[") and s.endswith("]"):
            current = s[1:-1].strip()
            if key is None and current == section:
                return n
        elif current == section and key is not None:
            k = re.split(r"[=:]", s, maxsplit=1)[0].strip().lower()
            if k == key:
                return n
    return None


def _read(text: str) -> configparser.ConfigParser:
    cp = configparser.ConfigParser(interpolation=None, default_section="\0defaults",
                                   strict=True, empty_lines_in_values=False,
                                   inline_comment_prefixes=("#",))
    try:
        cp.read_string(text)
    except configparser.MissingSectionHeaderError as exc:
        raise ConfigError("key outside of any [section]", exc.lineno) from None
    except configparser.ParsingError as exc:
        lineno, line = exc.errors[0]
        raise ConfigError(f"cannot parse {line.strip()!r}", lineno) from None
    except (configparser.DuplicateSectionError, configparser.DuplicateOptionError) as exc:
        raise ConfigError(exc.message.split(": ", 1)[-1], exc.lineno) from None
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from None
    return cp


def _check_keys(cp, text, section, allowed):
    for key in cp[section]:
        if key not in allowed:
            raise ConfigError(f"unknown key {key!r} in [{section}]",
                              _line_of(text, section, key))


def _field(text, section, key, parse):
    try:
        return parse()
    except UnitError as exc:
        raise UnitError(str(exc), _line_of(text, section, key)) from None
    except (ValueError, DomainError) as exc:
        raise ConfigError(f"[{section}] {key}: {exc}", _line_of(text, section, key)) from None


def _quantity(text, section, key, value, dimension):
    return _field(text, section, key,
                  lambda: parse_quantity(value, dimension, field=f"[{section}] {key}"))


def parse_config(text: str) -> RunConfig:
    """Parse a configuration document into a fully resolved ``RunConfig``.

    Raises:
        ConfigError: syntax errors (with line number), unknown sections or
            keys, and invalid values.
        UnitError: a quantity with a missing or wrong unit.
    """
    cp = _read(text)
    table = ComponentPowerTable.paper_defaults()
    profiles = builtin_adc_profiles()
    defaults = Defaults()

    for section in cp.sections():
        sec = cp[section]
        if section == "components":
            _check_keys(cp, text, section, _COMPONENT_KEYS)
            values = {}
            for key, raw in sec.items():
                v = _quantity(text, section, key, raw, "power")
                if v < 0:
                    raise ConfigError(f"[{section}] {key}: power must be >= 0, got {raw!r}",
                                      _line_of(text, section, key))
                values[key] = v
            table = replace(table, **values)
        elif section.startswith("adc."):
            name = section[4:].strip().lower()
            if not _ADC_NAME.match(name):
                raise ConfigError(f"invalid ADC profile name {section[4:]!r}",
                                  _line_of(text, section))
            _check_keys(cp, text, section, ("c", "label"))
            if "c" not in sec:
                raise ConfigError(f"[{section}] needs an energy per conversion step 'c'",
                                  _line_of(text, section))
            c = _quantity(text, section, "c", sec["c"], "energy")
            label = sec.get("label", name.upper()).strip()
            profiles[name] = _field(text, section, "c", lambda: AdcModel(label, c))
        elif section == "defaults":
            _check_keys(cp, text, section, tuple(f.name for f in fields(Defaults)))
            values = {}
            for key, raw in sec.items():
                raw = raw.strip()
                if key == "bandwidth":
                    values[key] = _quantity(text, section, key, raw, "frequency")
                elif key in ("bits", "n_rf", "precision"):
                    values[key] = _field(text, section, key, lambda: int(raw))
                elif key == "epsilon_db":
                    values[key] = _field(text, section, key, lambda: float(raw))
                else:
                    values[key] = raw
            defaults = replace(defaults, **values)
        else:
            raise ConfigError(f"unknown section [{section}]", _line_of(text, section))

    config = RunConfig(table=table, adc_profiles=profiles, defaults=defaults)
    if defaults.adc.lower() not in profiles:
        raise ConfigError(f"[defaults] adc: unknown ADC profile {defaults.adc!r}",
                          _line_of(text, "defaults", "adc"))
    if defaults.precision < 1:
        raise ConfigError("[defaults] precision must be >= 1",
                          _line_of(text, "defaults", "precision"))
    return config


def render_config(config: RunConfig) -> str:
    """Inverse of ``parse_config``; values are written exactly in base units."""
    lines = ["[components]"]
    for key in _COMPONENT_KEYS:
        lines.append(f"{key} = {format_quantity(getattr(config.table, key), 'power')}")
    for name, adc in config.adc_profiles.items():
        lines += ["", f"[adc.{name}]", f"label = {adc.label}",
                  f"c = {format_quantity(adc.c, 'energy')}"]
    lines += ["", "[defaults]"]
    d = config.defaults
    for f in fields(Defaults):
        value = getattr(d, f.name)
        if value is None:
            continue
        if f.name == "bandwidth":
            value = format_quantity(value, "frequency")
        elif isinstance(value, float):
            value = repr(value)
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"


_SWEEP_KEYS = ("architectures", "n_ant", "n_rf", "n_rf_ratio", "bits", "bandwidth",
               "adc", "gamma_db")


def _int_list(raw: str) -> tuple[int, ...]:
    return tuple(int(x) for x in raw.split(",") if x.strip())


def _bits_range(raw: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:-|\.\.)\s*(\d+)\s*)?", raw)
    if not m:
        raise ValueError(f"expected 'N' or 'LO-HI', got {raw!r}")
    lo = int(m.group(1))
    return lo, int(m.group(2) or lo)


def parse_sweep_spec(text: str, config: RunConfig) -> SweepSpec:
    """Parse a ``[sweep]`` document; ADC names resolve against ``config``.

    Example::

        [sweep]
        architectures = abf, hbf, dbf
        n_ant = 16, 64
        n_rf = 4
        bits = 1-10
        bandwidth = 100 MHz
        adc = lpadc
    """
    cp = _read(text)
    for section in cp.sections():
        if section != "sweep":
            raise ConfigError(f"unknown section [{section}] in sweep file",
                              _line_of(text, section))
    if "sweep" not in cp:
        raise ConfigError("sweep file needs a [sweep] section")
    _check_keys(cp, text, "sweep", _SWEEP_KEYS)
    sec = cp["sweep"]
    for key in ("architectures", "n_ant", "bits", "bandwidth"):
        if key not in sec:
            raise ConfigError(f"[sweep] missing required key {key!r}", _line_of(text, "sweep"))

    def get(key, parse):
        return _field(text, "sweep", key, lambda: parse(sec[key])) if key in sec else None

    archs = get("architectures",
                lambda s: tuple(Architecture.parse(a) for a in s.split(",") if a.strip()))
    bandwidths = tuple(
        _quantity(text, "sweep", "bandwidth", x, "frequency")
        for x in sec["bandwidth"].split(",") if x.strip())
    adc_names = sec.get("adc", config.defaults.adc)
    adcs = get("adc", lambda s: tuple(config.adc(n) for n in s.split(",") if n.strip())) \
        or (config.adc(adc_names),)
    return _field(text, "sweep", "architectures", lambda: SweepSpec(
        architectures=archs,
        n_ant_values=get("n_ant", _int_list),
        bits_range=get("bits", _bits_range),
        bandwidth_values=bandwidths,
        adc_models=adcs,
        n_rf_values=get("n_rf", _int_list),
        n_rf_ratio=get("n_rf_ratio", int),
        gamma_db=get("gamma_db", float),
    ))
