"""Seeded random instances and the property suites run by ``stanleydepth experiment``.

Every suite draws from its own ``random.Random(seed)`` so a run is
reproducible from the seed alone, independently of the thread count.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .algebra import (
    Monomial,
    MonomialIdeal,
    QuotientModule,
    dim_quotient,
    ideal_sum,
    intersect,
    unit_ideal,
    variable,
    zero_ideal,
)
from .bounds import bound_report
from .poset import (
    NAIVE_CELL_LIMIT,
    characteristic_poset,
    default_box,
    enumerate_partitions_naive,
    find_partition,
    sdepth_exact,
    sdepth_with_witness,
)
from .stanley import (
    decomposition_error,
    decomposition_from_partition,
    sdepth_of_decomposition,
    transfer_with_report,
)

__all__ = [
    "SuiteResult",
    "random_ideal",
    "random_module",
    "random_primary",
    "radical_transfer_suite",
    "extension_suite",
    "oracle_suite",
    "sandwich_suite",
    "SUITES",
    "run_suites",
]


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "suite": self.name,
            "cases": self.cases,
            "violations": list(self.violations),
            "ok": self.ok,
            "seconds": round(self.seconds, 3),
        }


def random_ideal(rng: random.Random, n: int, max_exp: int = 3, max_gens: int = 4) -> MonomialIdeal:
    """A nonzero proper monomial ideal with at most ``max_gens`` generators."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = [rng.randint(0, max_exp) for _ in range(n)]
        if not any(exps):
            exps[rng.randrange(n)] = rng.randint(1, max_exp)
        gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(n, gens)


def random_module(rng: random.Random, n: int, max_exp: int = 3) -> QuotientModule:
    """A random J/I with I inside J; I is zero about a third of the time."""
    J = unit_ideal(n) if rng.random() < 0.15 else random_ideal(rng, n, max_exp)
    if rng.random() < 0.35:
        I = zero_ideal(n)
    else:
        I = intersect(J, random_ideal(rng, n, max_exp))
    return QuotientModule(J, I)


def random_primary(
    rng: random.Random, n: int, max_exp: int = 3, squarefree: bool = False
) -> MonomialIdeal:
    """A random primary ideal: pure powers on a random support plus mixed generators."""
    support = rng.sample(range(n), rng.randint(1, n))
    if squarefree:
        return MonomialIdeal(n, [variable(i, n) for i in support])
    powers = {i: rng.randint(1, max_exp) for i in support}
    gens = [variable(i, n, e) for i, e in powers.items()]
    for _ in range(rng.randint(0, 2)):
        exps = [0] * n
        for i in support:
            exps[i] = rng.randint(0, powers[i] - 1)
        if sum(1 for e in exps if e) >= 2:
            gens.append(Monomial(tuple(exps)))
    return MonomialIdeal(n, gens)


def radical_transfer_suite(
    seed: int = 0, count: int = 200, max_n: int = 4, max_exp: int = 3, threads: int = 1
) -> SuiteResult:
    """Pull optimal decompositions of J/I back to sqrt(J)/sqrt(I).

    Checks per instance: the transferred decomposition is valid for the
    radical module, its depth is no smaller, sdepth(J/I) <= sdepth of the
    radical module, and the Cohen-Macaulay-type equality sdepth = dim
    passes to nonzero radical modules.
    """
    rng = random.Random(seed)
    res = SuiteResult("radical-transfer")
    start = time.perf_counter()
    for case in range(count):
        module = random_module(rng, rng.randint(1, max_n), max_exp)
        depth, partition = sdepth_with_witness(module, threads=threads)
        D = decomposition_from_partition(partition, module)
        a = max(1, max(module.max_exponents()))
        report = transfer_with_report(D, a)
        tag = f"#{case} {module}"
        witness = decomposition_error(report.decomposition)
        if witness is not None:
            res.violations.append(f"{tag}: transferred decomposition miscounts degree {witness}")
        if sdepth_of_decomposition(report.decomposition) < sdepth_of_decomposition(D):
            res.violations.append(f"{tag}: transfer lowered the depth")
        rad = module.radical()
        rad_depth = sdepth_exact(rad, threads=threads)
        if depth > rad_depth:
            res.violations.append(f"{tag}: sdepth {depth} > radical sdepth {rad_depth}")
        # a zero radical module has infinite depth and dimension -1, so the
        # equality can only transfer when sqrt(J) != sqrt(I)
        if not rad.is_zero() and depth == dim_quotient(module) and rad_depth != dim_quotient(rad):
            res.violations.append(f"{tag}: sdepth = dim does not pass to the radical")
        res.cases += 1
    res.seconds = time.perf_counter() - start
    return res


def extension_suite(seed: int = 0, count: int = 100, max_n: int = 4, max_exp: int = 3,
                    threads: int = 1) -> SuiteResult:
    """Adding a new variable x_{n+1} to I raises sdepth by 0 or 1."""
    rng = random.Random(seed)
    res = SuiteResult("variable-extension")
    start = time.perf_counter()
    for case in range(count):
        n = rng.randint(1, max_n)
        I = random_ideal(rng, n, max_exp)
        s = sdepth_exact(QuotientModule.of_ideal(I), threads=threads)
        ext = ideal_sum(I.embed(n + 1), MonomialIdeal(n + 1, [variable(n, n + 1)]))
        s2 = sdepth_exact(QuotientModule.of_ideal(ext), threads=threads)
        if s2 - s not in (0, 1):
            res.violations.append(f"#{case} {I}: sdepth {s} -> {s2} after adding x{n + 1}")
        res.cases += 1
    res.seconds = time.perf_counter() - start
    return res


def oracle_suite(seed: int = 0, count: int = 100, max_n: int = 4, max_exp: int = 2) -> SuiteResult:
    """Reduced exact-cover search versus exhaustive search on posets of at most 20 cells."""
    rng = random.Random(seed)
    res = SuiteResult("oracle-agreement")
    start = time.perf_counter()
    while res.cases < count:
        module = random_module(rng, rng.randint(1, max_n), max_exp)
        box = default_box(module)
        poset = characteristic_poset(module, box)
        if len(poset) > NAIVE_CELL_LIMIT:
            continue
        for k in range(box.n + 2):
            fast = find_partition(poset, box, k)
            slow = enumerate_partitions_naive(poset, box, k)
            tag = f"#{res.cases} {module} k={k}"
            if (fast is None) != (slow is None):
                res.violations.append(f"{tag}: search says {fast is not None}, oracle says {slow is not None}")
            for name, part in (("search", fast), ("oracle", slow)):
                if part is not None and (not part.is_partition_of(poset) or part.min_rho() < k):
                    res.violations.append(f"{tag}: {name} returned an invalid partition")
        res.cases += 1
    res.seconds = time.perf_counter() - start
    return res


def sandwich_suite(seed: int = 0, count: int = 100, max_n: int = 6, max_exp: int = 1,
                   threads: int = 1) -> SuiteResult:
    """Every applicable lower and upper bound brackets the exact depth of Q ∩ Q'.

    ``max_exp = 1`` draws prime (squarefree primary) ideals.
    """
    rng = random.Random(seed)
    res = SuiteResult("bound-sandwich")
    start = time.perf_counter()
    for case in range(count):
        n = rng.randint(1, max_n)
        squarefree = max_exp <= 1
        Q = random_primary(rng, n, max_exp, squarefree)
        Q2 = random_primary(rng, n, max_exp, squarefree)
        report = bound_report(Q, Q2, compute_exact=True, threads=threads, check=False)
        res.violations.extend(f"#{case} {Q} ∩ {Q2}: {v}" for v in report.violations())
        res.cases += 1
    res.seconds = time.perf_counter() - start
    return res


SUITES = {
    "radical-transfer": radical_transfer_suite,
    "variable-extension": extension_suite,
    "oracle-agreement": oracle_suite,
    "bound-sandwich": sandwich_suite,
}


def run_suites(names, seed: int = 0, count: int | None = None, max_n: int | None = None,
               threads: int = 1) -> list[SuiteResult]:
    results = []
    for name in names:
        fn = SUITES[name]
        kwargs = {"seed": seed}
        if count is not None:
            kwargs["count"] = count
        if max_n is not None:
            kwargs["max_n"] = max_n
        if name != "oracle-agreement":
            kwargs["threads"] = threads
        results.append(fn(**kwargs))
    return results
