from itertools import product

import pytest
from hypothesis import settings

from stanleydepth.algebra import MonomialIdeal

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


def ideal(n, *gens):
    return MonomialIdeal(n, gens)


def box(bounds):
    return product(*(range(b + 1) for b in bounds))


def member(gens, w):
    """Brute-force membership: some generator is componentwise below w."""
    return any(all(a <= b for a, b in zip(g, w)) for g in gens)


@pytest.fixture
def record_acceptance():
    def record(number: int, label: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number:>2}: {label}" + (f"  ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
