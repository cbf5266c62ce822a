import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import ideal
from stanleydepth.algebra import (
    MonomialIdeal,
    QuotientModule,
    SupportShape,
    intersect,
    prime_ideal,
    variable,
)
from stanleydepth.bounds import (
    bound_report,
    exact_odd_disjoint,
    exact_single_variable,
    extension_interval,
    formula_complete_intersection,
    formula_prime,
    lb_generators,
    lb_irreducible_disjoint,
    range_even_disjoint,
    ub_disjoint_supports,
    ub_general,
    ub_nested_supports,
    ub_overlap_all_but_one,
    ub_projection,
    ub_radical,
    ub_shared_variables,
    ub_single_variable,
)
from stanleydepth.errors import DomainError, InvariantViolation, NotApplicable
from stanleydepth.experiments import extension_suite, sandwich_suite
from stanleydepth.poset import sdepth_exact


def S(t, r, p, n):
    return SupportShape(t=t, r=r, p=p, n=n)


def sdepth_of(I):
    return sdepth_exact(QuotientModule.of_ideal(I))


def irreducible(n, powers):
    """Ideal generated by x_i^powers[i] (0-based keys)."""
    return MonomialIdeal(n, [variable(i, n, e) for i, e in powers.items()])


def disjoint_primes(t, n):
    return intersect(prime_ideal(range(t), n), prime_ideal(range(t, n), n))


# ---------------------------------------------------------------- formulas


def test_ub_radical_examples():
    assert ub_radical(QuotientModule.of_ideal(ideal(2, (2, 0), (1, 1)))) == 2
    sq = disjoint_primes(2, 4)
    assert ub_radical(QuotientModule.of_ideal(sq)) == sdepth_of(sq) == 3
    powered = intersect(irreducible(4, {0: 2, 1: 2}), irreducible(4, {2: 2, 3: 2}))
    assert ub_radical(QuotientModule.of_ideal(powered)) == sdepth_of(sq) == 3


def test_ub_nested_supports():
    assert ub_nested_supports(S(2, 0, 4, 4)) == 3
    for n in range(1, 8):
        assert ub_nested_supports(S(n, 0, n, n)) == math.ceil(n / 2)
    assert ub_nested_supports(S(3, 0, 5, 5)) == 4 == sdepth_of(prime_ideal(range(3), 5))
    with pytest.raises(NotApplicable):
        ub_nested_supports(S(2, 1, 4, 4))


def test_ub_single_variable():
    assert ub_single_variable(S(1, 1, 4, 4)) == 3
    assert ub_single_variable(S(1, 1, 2, 2)) == 2
    assert ub_single_variable(S(1, 1, 5, 5)) == 3 == sdepth_of(disjoint_primes(1, 5))
    assert exact_single_variable(S(1, 1, 4, 4), True) == 3
    with pytest.raises(NotApplicable):
        exact_single_variable(S(1, 1, 4, 4), False)


def test_ub_disjoint_supports():
    assert ub_disjoint_supports(S(2, 2, 4, 4)) == 3
    assert math.floor(ub_disjoint_supports(S(2, 2, 5, 5))) == 3 == exact_odd_disjoint(S(2, 2, 5, 5), True)
    assert math.floor(ub_disjoint_supports(S(3, 3, 6, 6))) == 4 == range_even_disjoint(S(3, 3, 6, 6), True)[0]
    assert ub_disjoint_supports(S(2, 2, 5, 5)) == Fraction(7, 2)
    for shape in (S(1, 1, 4, 4), S(2, 2, 3, 3), S(2, 2, 4, 5)):
        with pytest.raises(NotApplicable):
            ub_disjoint_supports(shape)


def test_ub_shared_variables():
    assert ub_shared_variables(S(6, 2, 8, 8)) == 7
    assert ub_shared_variables(S(5, 4, 9, 9)) == 6
    for n in (4, 5, 6):
        assert ub_shared_variables(S(2, 2, n, n)) == ub_disjoint_supports(S(2, 2, n, n))


def test_ub_projection():
    assert ub_projection(S(6, 2, 8, 8)) == 5
    assert ub_projection(S(5, 4, 9, 9)) == 7
    for n in range(3, 9):
        assert ub_projection(S(n - 1, 2, n, n)) == n - (n - 1) // 2
    with pytest.raises(NotApplicable):
        ub_projection(S(2, 1, 4, 4))


def test_ub_general():
    assert ub_general(S(2, 2, 4, 5)) == 4 == sdepth_of(intersect(prime_ideal([0, 1], 5), prime_ideal([2, 3], 5)))
    assert ub_general(S(6, 2, 8, 8)) == 5
    for t, r, n in [(6, 2, 8), (5, 4, 9), (3, 2, 6), (4, 2, 7)]:
        shape = S(t, r, n, n)
        assert ub_general(shape) == min(math.floor(ub_shared_variables(shape)), ub_projection(shape))
    with pytest.raises(NotApplicable):
        ub_general(S(2, 2, 2, 4))


def test_overlap_all_but_one():
    I = ideal(4, (1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0))
    assert ub_overlap_all_but_one(S(3, 1, 4, 4)) == 3 == sdepth_of(I)
    for n in range(2, 7):
        overlap = intersect(prime_ideal(range(n - 1), n), prime_ideal(range(1, n), n))
        assert ub_overlap_all_but_one(S(n - 1, 1, n, n)) == n - (n - 1) // 2 == sdepth_of(overlap)


def test_lb_irreducible_disjoint():
    assert lb_irreducible_disjoint(S(2, 2, 5, 5), True) == 3
    assert lb_irreducible_disjoint(S(3, 3, 6, 6), True) == 4
    assert lb_irreducible_disjoint(S(2, 2, 6, 6), True) == 3
    assert range_even_disjoint(S(2, 2, 6, 6), True) == (3, 4)
    with pytest.raises(NotApplicable):
        lb_irreducible_disjoint(S(2, 2, 6, 6), False)


def test_lb_generators():
    final = intersect(irreducible(4, {0: 2, 1: 2}), irreducible(4, {1: 2, 2: 1, 3: 3}))
    assert len(final.gens) == 3
    assert lb_generators(final) == 3 == sdepth_of(final)
    assert lb_generators(ideal(3, (1, 2, 0))) == 3
    for n in range(1, 8):
        assert lb_generators(prime_ideal(range(n), n)) == math.ceil(n / 2)
    with pytest.raises(DomainError):
        lb_generators(MonomialIdeal(2, []))


def test_formula_prime():
    for n in range(1, 8):
        assert formula_prime(n, n) == math.ceil(n / 2)
        assert formula_prime(1, n) == n
    assert formula_prime(3, 5) == 4
    with pytest.raises(DomainError):
        formula_prime(0, 3)


def test_formula_complete_intersection():
    assert formula_complete_intersection(3, 4) == 3
    assert formula_complete_intersection(1, 5) == 5
    for n in range(1, 8):
        assert formula_complete_intersection(n, n) == math.ceil(n / 2)


def test_extension_interval():
    # complete intersections: m odd keeps the depth, m even raises it
    for m in range(1, 6):
        for n in range(m, 7):
            s, s_ext = formula_complete_intersection(m, n), formula_complete_intersection(m + 1, n + 1)
            lo, hi = extension_interval(s)
            assert lo <= s_ext <= hi
            assert s_ext == (s if m % 2 else s + 1)
    for n in range(1, 5):
        for r in range(0, 4):
            lo = formula_prime(n, n)
            assert lo <= math.ceil((n + r) / 2) <= lo + r


# ---------------------------------------------------------------- exact agreement


def _ci(blocks, n, powers=1):
    gens, start = [], 0
    for size in blocks:
        gens.append(tuple(powers if start <= j < start + size else 0 for j in range(n)))
        start += size
    return MonomialIdeal(n, gens)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            if rest[0] <= first:
                yield (first,) + rest


@pytest.mark.parametrize("n", range(1, 7))
def test_formulas_agree_with_exact(n):
    for t in range(1, n + 1):
        assert sdepth_of(prime_ideal(range(t), n)) == formula_prime(t, n)
    for used in range(1, n + 1):
        for m in range(1, used + 1):
            for blocks in _compositions(used, m):
                assert sdepth_of(_ci(blocks, n)) == formula_complete_intersection(m, n), blocks


def test_complete_intersection_with_powers():
    assert sdepth_of(ideal(4, (2, 0, 0, 1), (0, 3, 0, 0), (0, 0, 1, 0))) == formula_complete_intersection(3, 4)
    assert sdepth_of(_ci((1, 1, 2), 4, powers=2)) == formula_complete_intersection(3, 4)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_disjoint_exact(n):
    for t in range(1, n):
        assert sdepth_of(disjoint_primes(t, n)) == math.ceil(n / 2) == exact_odd_disjoint(S(t, t, n, n), True)


def test_odd_disjoint_with_powers():
    I = intersect(irreducible(5, {0: 2, 1: 1}), irreducible(5, {2: 1, 3: 3, 4: 1}))
    assert sdepth_of(I) == 3


@pytest.mark.parametrize("n", [2, 4, 6])
def test_even_disjoint(n):
    for t in range(1, n):
        low, high = range_even_disjoint(S(t, t, n, n), True)
        value = sdepth_of(disjoint_primes(t, n))
        if t % 2:
            assert value == n // 2 + 1 == low == high
        else:
            assert value in (n // 2, n // 2 + 1) and low <= value <= high


def _general_equality_instances():
    for n in (5, 7):
        for t in range(2, n):
            for p in range(t + 1, n + 1):
                yield t, p, n


@pytest.mark.parametrize("t, p, n", list(_general_equality_instances()))
def test_general_bound_equality_case(t, p, n):
    shape = S(t, t, p, n)
    I = intersect(prime_ideal(range(t), n), prime_ideal(range(t, p), n))
    assert sdepth_of(I) == ub_general(shape)


def test_general_bound_equality_with_powers():
    I = intersect(irreducible(5, {0: 2, 1: 3}), irreducible(5, {2: 2, 3: 1}))
    assert sdepth_of(I) == ub_general(S(2, 2, 4, 5)) == 4


def test_extension_property_random():
    result = extension_suite(seed=11, count=60, max_n=4)
    assert result.ok, result.violations


# ---------------------------------------------------------------- report


def test_report_example_projection_beats_shared():
    Q, Q2 = prime_ideal(range(6), 8), prime_ideal(range(2, 8), 8)
    report = bound_report(Q, Q2)
    assert report.entry("projection").value == 5
    assert report.entry("shared_variables").value == 7
    assert report.entry("shared_variables").rational == 7
    assert report.best_upper() == 5
    assert [e.name for e in report.entries] == sorted(e.name for e in report.entries)


def test_report_odd_disjoint_instance():
    Q, Q2 = irreducible(5, {0: 2, 1: 1}), irreducible(5, {2: 1, 3: 3, 4: 1})
    report = bound_report(Q, Q2, compute_exact=True)
    assert report.entry("irreducible_disjoint_lower").value == 3
    assert report.entry("odd_disjoint_exact").value == 3
    assert report.entry("disjoint_supports").value == 3
    assert report.exact == 3
    assert not report.violations()


def test_report_nested_case():
    Q = prime_ideal([0], 1)
    report = bound_report(Q, Q, compute_exact=True)
    assert report.entry("nested_supports").applicable
    assert report.entry("nested_supports").value == 1 == report.exact


def test_report_even_t_note():
    report = bound_report(prime_ideal([0, 1], 4), prime_ideal([2, 3], 4), compute_exact=True)
    entry = report.entry("even_disjoint_range")
    assert (entry.value, entry.high) == (2, 3)
    assert report.notes == ["even_disjoint_range: exact computation selects 3"]


def test_report_swapped_entries():
    # Q' = (x1) is the single-variable side: only the swapped shape fits
    report = bound_report(prime_ideal([1, 2, 3], 4), prime_ideal([0], 4), compute_exact=True)
    assert not report.entry("single_variable").applicable
    assert report.entry("single_variable~swapped").value == 3 == report.exact


def test_report_rejects_non_primary():
    with pytest.raises(DomainError):
        bound_report(ideal(2, (1, 1)), prime_ideal([0], 2))


def test_report_check_raises_on_forged_exact():
    report = bound_report(prime_ideal([0, 1], 4), prime_ideal([2, 3], 4))
    report.exact = 4
    with pytest.raises(InvariantViolation):
        report.check()


def test_report_serializations():
    report = bound_report(prime_ideal(range(6), 8), prime_ideal(range(2, 8), 8))
    data = report.as_dict()
    assert data["shape"] == {"t": 6, "r": 2, "p": 8, "n": 8}
    table = report.to_table()
    assert "projection" in table and "shared_variables" in table
    assert table.splitlines()[1].split() == ["name", "kind", "value", "applicable", "citation"]


# ---------------------------------------------------------------- sandwich


@st.composite
def primary(draw, n, max_exp):
    support = draw(st.sets(st.integers(0, n - 1), min_size=1))
    powers = {i: draw(st.integers(1, max_exp)) for i in support}
    gens = [variable(i, n, e) for i, e in powers.items()]
    for _ in range(draw(st.integers(0, 2))):
        exps = tuple(draw(st.integers(0, powers[j] - 1)) if j in powers else 0 for j in range(n))
        if any(exps):
            gens.append(exps)
    return MonomialIdeal(n, gens)


@st.composite
def primary_pairs(draw, max_n, max_exp):
    n = draw(st.integers(1, max_n))
    return draw(primary(n, max_exp)), draw(primary(n, max_exp))


@given(primary_pairs(6, 1))
def test_sandwich_squarefree(pair):
    assert not bound_report(*pair, compute_exact=True, check=False).violations()


@given(primary_pairs(5, 3))
def test_sandwich_with_powers(pair):
    assert not bound_report(*pair, compute_exact=True, check=False).violations()


def test_sandwich_suite_with_powers():
    result = sandwich_suite(seed=3, count=100, max_n=5, max_exp=3)
    assert result.ok, result.violations
