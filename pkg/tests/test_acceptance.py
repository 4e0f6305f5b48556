"""Acceptance criteria 1-10.

Each criterion runs the matching seeded verification suite(s) at the sample
sizes it prescribes, prints one ``PASS``/``FAIL`` line with the worst residual
and the runtime, and asserts both the properties and the runtime budget.

Run standalone with ``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
import time

import pytest

from hopfreal import verify as vf

SEED = 0

# number, title, [(suite, samples)], runtime budget in seconds
CRITERIA = [
    (1, "root/flow algebra", [("flows", 200)], 5.0),
    (2, "even normalization", [("even", 100)], 10.0),
    (3, "odd normalization", [("odd", 100)], 10.0),
    (4, "parity well-definedness", [("parity", 50)], 10.0),
    (5, "differential inequality", [("diffineq", 10_000)], 10.0),
    (6, "trivialization", [("trivialization", 1000)], 10.0),
    (7, "classification charts", [("charts", 1000)], 10.0),
    (8, "real locus", [("locus", 50)], 10.0),
    (9, "Picard", [("picard", 200)], 10.0),
    (10, "automorphism groups", [("aut", 200)], 10.0),
]
TOTAL_BUDGET = 60.0


def run_criterion(number: int):
    _, title, suites, budget = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    reports = [vf.run_suite(name, samples, SEED) for name, samples in suites]
    elapsed = time.perf_counter() - start
    props = [p for r in reports for p in r["properties"]]
    failed = [p for p in props if not p["pass"]]
    worst = max(
        (p["max_residual"] / p["tolerance"] for p in props if isinstance(p["max_residual"], float) and p["tolerance"]),
        default=0.0,
    )
    ok = not failed and elapsed < budget
    line = "%s criterion %2d (%s): %d properties, worst residual/tolerance %.2e, %.2fs (budget %.0fs)" % (
        "PASS" if ok else "FAIL", number, title, len(props), worst, elapsed, budget)
    if failed:
        line += "; failing: " + ", ".join(p["property"] for p in failed)
    return ok, line, failed, elapsed


_elapsed = {}


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA])
def test_criterion(number, capsys):
    ok, line, failed, elapsed = run_criterion(number)
    _elapsed[number] = elapsed
    with capsys.disabled():
        print("\n" + line)
    assert not failed, failed
    assert ok, line


def test_total_runtime(capsys):
    total = sum(_elapsed.values())
    with capsys.disabled():
        print("\n%s total acceptance runtime %.2fs (budget %.0fs)" % (
            "PASS" if total < TOTAL_BUDGET else "FAIL", total, TOTAL_BUDGET))
    assert total < TOTAL_BUDGET


if __name__ == "__main__":
    results = [run_criterion(c[0]) for c in CRITERIA]
    for _, line, _, _ in results:
        print(line)
    sys.exit(0 if all(r[0] for r in results) else 1)
