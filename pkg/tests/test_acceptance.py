"""Acceptance criteria AC1-AC10.

Run with pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly: ``python3 tests/test_acceptance.py``.
"""

import csv
import io
import itertools
import math
import sys
from pathlib import Path

import pytest

from bfpower.crossover import (
    CrossoverQuery,
    bandwidth_star,
    bits_star,
    brute_force_bits_star,
    crossover_asymptotic,
    raw_levels,
)
from bfpower.csvio import to_csv
from bfpower.figures import FigureId, figure_dataset
from bfpower.power_model import (
    HPADC,
    LPADC,
    AdcModel,
    Architecture,
    ComponentPowerTable,
    ReceiverDesign,
    total_power,
)
from bfpower.quantization import effective_snr, eta, from_db, min_adequate_bits

GOLDEN_DIR = Path(__file__).parent / "golden"
TABLE = ComponentPowerTable.paper_defaults()
ABF, HBF, DBF = Architecture.ABF, Architecture.HBF, Architecture.DBF

RESULTS: dict[str, tuple[bool, str]] = {}


def _bstar(n_ant, n_rf, adc, bw):
    return bits_star(CrossoverQuery(n_ant, n_rf, TABLE, adc, bandwidth=bw))


def _power(arch, n_ant, bits, bw, adc, n_rf=1):
    return total_power(ReceiverDesign(arch, n_ant, bits, bw, n_rf), TABLE, adc).total


def ac1():
    a, b = _bstar(64, 4, LPADC, 1e9).value, _bstar(64, 4, LPADC, 1e8).value
    return (a, b) == (6, 9), f"b*(64,4,LPADC) = {a} @1 GHz, {b} @100 MHz; expected 6, 9"


def ac2():
    lp, hp = _bstar(256, 32, LPADC, 1.5e9).value, _bstar(256, 32, HPADC, 1.5e9).value
    return (lp, hp) == (8, 4), f"b*(256,32,1.5 GHz) = {lp} LPADC, {hp} HPADC; expected 8, 4"


def ac3():
    at100 = _bstar(16, 4, HPADC, 1e8).value
    at1g = _bstar(16, 4, HPADC, 1e9).value
    lowered = _bstar(16, 4, AdcModel("HPADC-11.9pJ", 11.9e-12), 1e9).value
    ok = at100 == 5 and at1g in (1, 2) and lowered == 2
    return ok, (f"HPADC N_ANT=16: {at100} @100 MHz (want 5), {at1g} @1 GHz (want 1 or 2), "
                f"{lowered} @1 GHz with c=11.9 pJ (want 2)")


def ac4():
    lo, hi = min_adequate_bits(from_db(-10), 0.3), min_adequate_bits(from_db(20), 0.3)
    return (lo, hi) == (3, 6), f"b_m(eps=0.3 dB) = {lo} @-10 dB, {hi} @20 dB; expected 3, 6"


def ac5():
    ratio = _power(DBF, 16, 5, 1e8, LPADC) / _power(ABF, 16, 5, 1e8, LPADC)
    return 1.25 <= ratio <= 1.40, f"P_DBF/P_ABF = {ratio:.4f}, want in [1.25, 1.40]"


def _oracle_grid():
    for n_ant in (8, 16, 32, 64, 128, 256):
        for n_rf in (2 ** k for k in range(int(math.log2(n_ant)))):
            for bw in (1e8, 5e8, 1e9, 1.5e9, 2e9):
                for adc in (LPADC, HPADC):
                    yield n_ant, n_rf, bw, adc


def ac6():
    points = list(_oracle_grid())
    bad = [p for p in points
           if _bstar(*p[:2], p[3], p[2]).value
           != brute_force_bits_star(CrossoverQuery(p[0], p[1], TABLE, p[3], bandwidth=p[2])).value]
    return len(points) >= 300 and not bad, f"{len(points)} queries, {len(bad)} mismatches"


def ac7():
    failures = []
    for arch in Architecture:
        for bits, bw in itertools.product(range(1, 13), (1e8, 1e9)):
            p = [_power(arch, n, bits, bw, LPADC, max(1, n // 8)) for n in range(8, 257, 8)]
            if not all(a < b for a, b in zip(p, p[1:])):
                failures.append(f"{arch.name} not increasing in N_ANT")
        for n, bw in itertools.product((1, 16, 64, 256), (1e8, 1e9)):
            p = [_power(arch, n, b, bw, LPADC, max(1, n // 8)) for b in range(1, 13)]
            if not all(a < b for a, b in zip(p, p[1:])):
                failures.append(f"{arch.name} not increasing in b")
            for b in range(1, 13):
                if not _power(arch, n, b, 1e8, LPADC, max(1, n // 8)) < \
                        _power(arch, n, b, 1e9, LPADC, max(1, n // 8)):
                    failures.append(f"{arch.name} not increasing in B")
    for g in (0.01, 0.1, 1.0, 10.0, 100.0):
        s = [effective_snr(g, b) for b in range(1, 21)]
        if not all(a < b for a, b in zip(s, s[1:])):
            failures.append("gamma_ef not increasing in b")
    bws = (1e8, 5e8, 1e9, 1.5e9, 2e9)
    for n_ant, n_rf in {(p[0], p[1]) for p in _oracle_grid()}:
        for adc in (LPADC, HPADC):
            v = [_bstar(n_ant, n_rf, adc, bw).value or 0 for bw in bws]
            if not all(a >= b for a, b in zip(v, v[1:])):
                failures.append("b* increasing in B")
            w = [bandwidth_star(CrossoverQuery(n_ant, n_rf, TABLE, adc, bits=b)).value
                 for b in range(1, 21)]
            if w[0] is not None and not all(
                    abs(b - a / 2) <= 1e-12 * abs(a / 2) for a, b in zip(w, w[1:])):
                failures.append("B*(b+1) != B*(b)/2")
    return not failures, "all monotone" if not failures else "; ".join(sorted(set(failures)))


def ac8():
    table_ok = [eta(b) for b in range(1, 6)] == [0.3634, 0.1175, 0.03454, 0.009497, 0.002499]
    ref = math.pi * math.sqrt(3) / 2 * 2.0 ** -12
    rel = abs(eta(6) - ref) / ref
    return table_ok and rel < 1e-7, f"table exact: {table_ok}; eta(6) rel err {rel:.1e}"


def _golden_rows(fig):
    return list(csv.DictReader(io.StringIO((GOLDEN_DIR / f"{fig}.csv").read_text())))


def _audit_goldens():
    """Re-derive criteria 1, 2, 4 and 5 from the golden files alone."""
    problems = []
    for fig, expected in (("ptot-vs-bits-1GHz", 6), ("ptot-vs-bits-100MHz", 9)):
        rows = [r for r in _golden_rows(fig) if r["n_ant"] == "64"]
        p = {(r["architecture"], int(r["bits"])): float(r["total_power_w"]) for r in rows}
        star = max(b for b in range(1, 11) if p["DBF", b] <= p["HBF", b])
        if star != expected:
            problems.append(f"{fig}: DBF<=HBF up to {star}, expected {expected}")
    rows = _golden_rows("bstar-vs-bandwidth")
    got = {r["adc"]: r["b_star"] for r in rows
           if r["n_ant"] == "256" and float(r["bandwidth_hz"]) == 1.5e9}
    if got != {"LPADC": "8", "HPADC": "4"}:
        problems.append(f"bstar golden at 256/1.5 GHz: {got}")
    rows = _golden_rows("snr-eff-vs-bits")
    for g, expected in ((-10.0, 3), (20.0, 6)):
        losses = {int(r["bits"]): g - float(r["gamma_ef_db"])
                  for r in rows if float(r["gamma_db"]) == g}
        b_m = min(b for b, loss in losses.items() if loss <= 0.3)
        if b_m != expected:
            problems.append(f"snr golden b_m({g}) = {b_m}")
    rows = _golden_rows("power-vs-snreff-lpadc")
    p = {r["architecture"]: float(r["total_power_w"]) for r in rows
         if r["bits"] == "5" and float(r["bandwidth_hz"]) == 1e8}
    if not 1.25 <= p["DBF"] / p["ABF"] <= 1.40:
        problems.append(f"snreff golden ratio {p['DBF'] / p['ABF']:.3f}")
    return problems


def ac9():
    diffs = [f.value for f in FigureId
             if to_csv(figure_dataset(f, TABLE)).encode("utf-8")
             != (GOLDEN_DIR / f"{f.value}.csv").read_bytes()]
    problems = _audit_goldens()
    ok = not diffs and not problems
    return ok, (f"{len(FigureId)} figures byte-identical, golden audit clean" if ok
                else f"differs: {diffs}; audit: {problems}")


def ac10():
    worst_gap = 0.0
    violations = 0
    checked = 0
    for n_rf in (1, 2, 4, 8, 16, 32):
        for adc, bw in itertools.product((LPADC, HPADC), (1e8, 5e8, 1e9, 1.5e9, 2e9)):
            asym = crossover_asymptotic(n_rf, TABLE, adc, bandwidth=bw).raw_r
            for k in range(1, 9):
                r = raw_levels(CrossoverQuery(2 ** k * n_rf, n_rf, TABLE, adc, bandwidth=bw))
                violations += r < asym
            if asym > 0:
                checked += 1
                gap = (r - asym) / asym  # r is at N_ANT = 256 * N_RF
                worst_gap = max(worst_gap, gap)
    ok = violations == 0 and worst_gap < 0.02
    return ok, (f"{violations} lower-bound violations; worst gap at 256*N_RF = "
                f"{100 * worst_gap:.2f}% over {checked} series with a positive asymptote")


CRITERIA = {
    "AC1 crossover b* = 6 / 9 (N_ANT=64, N_RF=4, LPADC)": ac1,
    "AC2 crossover b* = 8 / 4 (N_ANT=256, N_RF=32, 1.5 GHz)": ac2,
    "AC3 HPADC N_ANT=16 point and c-sensitivity": ac3,
    "AC4 b_m = 3 / 6 at eps = 0.3 dB": ac4,
    "AC5 DBF/ABF power ratio ~30%": ac5,
    "AC6 closed form vs brute force over >= 300 queries": ac6,
    "AC7 monotonicity suite": ac7,
    "AC8 eta table pinning": ac8,
    "AC9 figure golden files": ac9,
    "AC10 asymptotic lower bound": ac10,
}


@pytest.mark.parametrize("name", list(CRITERIA), ids=[n.split()[0] for n in CRITERIA])
def test_criterion(name):
    ok, detail = CRITERIA[name]()
    RESULTS[name] = (ok, detail)
    assert ok, detail


def format_results(results):
    return [f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}" for name, (ok, detail) in results.items()]


if __name__ == "__main__":
    results = {name: check() for name, check in CRITERIA.items()}
    print("\n".join(format_results(results)))
    sys.exit(0 if all(ok for ok, _ in results.values()) else 1)
