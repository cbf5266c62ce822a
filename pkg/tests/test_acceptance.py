"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section at the end of the session output.
"""

import math
import time

from stanleydepth.algebra import QuotientModule
from stanleydepth.bounds import bound_report
from stanleydepth.experiments import extension_suite, oracle_suite, sandwich_suite, radical_transfer_suite
from stanleydepth.parsing import parse_ideal, parse_ideals
from stanleydepth.poset import sdepth_exact


def exact(text: str, n: int | None = None) -> int:
    return sdepth_exact(QuotientModule.of_ideal(parse_ideal(text, n)))


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def check(record, number, label, ok, seconds, limit):
    within = limit is None or seconds < limit
    detail = f"{seconds:.2f}s" + (f" < {limit}s" if limit is not None else "")
    record(number, label, ok and within, detail)
    assert ok, label
    assert within, f"{label}: took {seconds:.2f}s, limit {limit}s"


def test_01_two_disjoint_primes(record_acceptance):
    value, secs = timed(lambda: exact("(x1,x2) ∩ (x3,x4)"))
    check(record_acceptance, 1, f"(x1,x2)∩(x3,x4) has sdepth {value}, want 3", value == 3, secs, 1)


def test_02_small_example(record_acceptance):
    values, secs = timed(lambda: (exact("(x1^2, x1*x2)"), exact("(x1)", n=2)))
    check(record_acceptance, 2, f"(x1^2,x1x2) -> {values[0]}, (x1) -> {values[1]}, want 1 and 2",
          values == (1, 2), secs, 1)


def test_03_maximal_ideal(record_acceptance):
    got, secs = timed(lambda: [exact(f"n={n}; (x1,...,x{n})" if n > 1 else "(x1)") for n in range(1, 7)])
    want = [math.ceil(n / 2) for n in range(1, 7)]
    check(record_acceptance, 3, f"maximal ideal n=1..6 gives {got}, want ceil(n/2)", got == want, secs, 60)


def test_04_odd_disjoint_irreducible(record_acceptance):
    value, secs = timed(lambda: exact("(x1^2,x2) ∩ (x3,x4^3,x5)"))
    check(record_acceptance, 4, f"(x1^2,x2)∩(x3,x4^3,x5) has sdepth {value}, want 3", value == 3, secs, 300)


def test_05_even_disjoint_odd_t(record_acceptance):
    value, secs = timed(lambda: exact("(x1,x2,x3) ∩ (x4,x5,x6)"))
    check(record_acceptance, 5, f"(x1,x2,x3)∩(x4,x5,x6) has sdepth {value}, want 4", value == 4, secs, 300)


def test_06_projection_beats_shared_variables(record_acceptance):
    Q, Q2 = parse_ideals(["(x1,...,x6)", "(x3,...,x8)"])
    report, secs = timed(lambda: bound_report(Q, Q2, compute_exact=True))
    proj, shared = report.entry("projection").value, report.entry("shared_variables").value
    ok = proj == 5 and shared == 7 and report.exact <= 5
    check(record_acceptance, 6, f"projection {proj}, shared_variables {shared}, exact {report.exact}",
          ok, secs, None)


def test_07_overlap_all_but_one(record_acceptance):
    value, secs = timed(lambda: exact("(x1*x4, x2, x3)"))
    check(record_acceptance, 7, f"(x1x4,x2,x3) has sdepth {value}, want 3", value == 3 == 4 - 3 // 2, secs, 10)


def test_08_generator_count_family(record_acceptance):
    value, secs = timed(lambda: exact("(x1^2,x2^2) ∩ (x2^2,x3,x4^3)"))
    check(record_acceptance, 8, f"(x1^2,x2^2)∩(x2^2,x3,x4^3) has sdepth {value}, want 3", value == 3, secs, 300)


def _suite(record, number, cases, run, limit):
    result, secs = timed(run)
    ok = result.ok and result.cases == cases
    check(record, number, f"{result.name}: {result.cases} cases, {len(result.violations)} violations",
          ok, secs, limit)


def test_09_radical_transfer_suite(record_acceptance):
    _suite(record_acceptance, 9, 200, lambda: radical_transfer_suite(seed=2024, count=200, max_n=4, max_exp=3), 600)


def test_10_variable_extension_suite(record_acceptance):
    _suite(record_acceptance, 10, 100, lambda: extension_suite(seed=2024, count=100, max_n=4), None)


def test_11_oracle_suite(record_acceptance):
    _suite(record_acceptance, 11, 100, lambda: oracle_suite(seed=2024, count=100, max_n=4), None)


def test_12_sandwich_suite(record_acceptance):
    _suite(record_acceptance, 12, 100, lambda: sandwich_suite(seed=2024, count=100, max_n=6, max_exp=1), None)
