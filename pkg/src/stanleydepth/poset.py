"""Characteristic posets and exact Stanley depth by interval partitions.

For a module J/I and a box g dominating every generator exponent, the
characteristic poset is the set of exponent vectors c <= g with x^c in J
but not in I.  A partition of it into intervals [lo, hi] yields a Stanley
decomposition whose spaces have dimension rho(hi), the number of
coordinates of hi sitting at the ceiling of the box, and the best such
partition attains the Stanley depth.

Search for a partition with every rho(hi) >= k is phrased as an exact
cover problem.  Two reductions keep it small:

* a cell with rho(c) >= k can always be its own interval, so only the
  *deficient* cells (rho(c) < k) must be covered; the others are covered
  at most once;
* an interval starting at a deficient cell can be assumed to raise
  exactly the coordinates of a set Z (|Z| = k) to the ceiling and leave
  the rest fixed.  A wider interval splits into such an interval plus
  intervals whose tops have rho >= k, by peeling one coordinate at a time.

Cells are encoded as their rank in the mixed-radix enumeration of the box.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Sequence

from .algebra import QuotientModule, divides
from .errors import PreconditionError, SizeLimitError

__all__ = [
    "INFINITE",
    "Box",
    "Interval",
    "IntervalPartition",
    "characteristic_poset",
    "rho",
    "find_partition",
    "enumerate_partitions_naive",
    "sdepth_exact",
    "sdepth_with_witness",
    "default_box",
    "NAIVE_CELL_LIMIT",
]

#: Stanley depth of the zero module; compares above every integer.
INFINITE = math.inf

NAIVE_CELL_LIMIT = 20

Cell = tuple[int, ...]


@dataclass(frozen=True)
class Box:
    g: tuple[int, ...]

    def __post_init__(self):
        g = tuple(int(x) for x in self.g)
        if not g or any(x < 1 for x in g):
            raise ValueError(f"box ceilings must be positive, got {self.g}")
        object.__setattr__(self, "g", g)

    @property
    def n(self) -> int:
        return len(self.g)

    @property
    def size(self) -> int:
        return math.prod(x + 1 for x in self.g)

    def cells(self) -> Iterable[Cell]:
        return product(*(range(x + 1) for x in self.g))

    def contains(self, c: Sequence[int]) -> bool:
        return len(c) == self.n and all(0 <= a <= b for a, b in zip(c, self.g))

    def index(self, c: Sequence[int]) -> int:
        """Mixed-radix rank of ``c``; agrees with the order of :meth:`cells`."""
        idx = 0
        for a, b in zip(c, self.g):
            idx = idx * (b + 1) + a
        return idx

    def enlarged(self, extra: int = 1) -> Box:
        return Box(tuple(x + extra for x in self.g))


def default_box(module: QuotientModule) -> Box:
    """The tight box: componentwise maximal generator exponent, at least 1."""
    return Box(tuple(max(e, 1) for e in module.max_exponents()))


def rho(d: Sequence[int], box: Box) -> int:
    """Number of coordinates of ``d`` at the ceiling of ``box``."""
    return sum(1 for a, b in zip(d, box.g) if a == b)


@dataclass(frozen=True)
class Interval:
    lo: Cell
    hi: Cell

    def __post_init__(self):
        if len(self.lo) != len(self.hi) or not divides(self.lo, self.hi):
            raise ValueError(f"interval bounds are not comparable: {self.lo}, {self.hi}")

    def cells(self) -> Iterable[Cell]:
        return product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def __contains__(self, c) -> bool:
        return divides(self.lo, c) and divides(c, self.hi)

    def __len__(self) -> int:
        return math.prod(b - a + 1 for a, b in zip(self.lo, self.hi))


@dataclass(frozen=True)
class IntervalPartition:
    intervals: tuple[Interval, ...]
    box: Box

    def min_rho(self) -> float:
        """Smallest rho over the interval tops (INFINITE when empty)."""
        return min((rho(iv.hi, self.box) for iv in self.intervals), default=INFINITE)

    def uncovered_or_overlapping(self, poset: Iterable[Cell]) -> list[Cell]:
        """Cells violating the partition property; empty iff this partitions ``poset``."""
        poset = set(poset)
        seen: set[Cell] = set()
        bad = []
        for iv in self.intervals:
            for c in iv.cells():
                if c in seen or c not in poset:
                    bad.append(c)
                seen.add(c)
        bad.extend(sorted(poset - seen))
        return bad

    def is_partition_of(self, poset: Iterable[Cell]) -> bool:
        return not self.uncovered_or_overlapping(poset)


def characteristic_poset(module: QuotientModule, box: Box) -> frozenset[Cell]:
    """Cells ``c`` of ``box`` with ``x^c`` in J and not in I."""
    if box.n != module.n:
        raise PreconditionError(f"box has {box.n} coordinates, module lives in {module.n} variables")
    need = module.max_exponents()
    if not divides(need, box.g):
        raise PreconditionError(f"box {box.g} does not dominate generator exponents {need}")
    J, I = module.J.exponents, module.I.exponents
    return frozenset(
        c
        for c in box.cells()
        if any(divides(u, c) for u in J) and not any(divides(u, c) for u in I)
    )


# --------------------------------------------------------------------------
# exact cover search


class _ExactCover:
    """Algorithm X over dict-of-sets, with primary and secondary columns.

    Columns in ``primary`` must be covered exactly once, the others at most
    once.  Branching picks the primary column with the fewest remaining
    rows (ties broken by column id), and rows are tried in increasing id,
    so the search is deterministic.
    """

    def __init__(self, rows: Sequence[Sequence[int]], primary: Iterable[int]):
        self.Y = [tuple(r) for r in rows]
        self.X: dict[int, set[int]] = {}
        for i, r in enumerate(self.Y):
            for j in r:
                self.X.setdefault(j, set()).add(i)
        self.primary = sorted(primary)
        for j in self.primary:
            self.X.setdefault(j, set())

    def _select(self, r: int) -> list[set[int]]:
        X, Y = self.X, self.Y
        cols = []
        for j in Y[r]:
            for i in X[j]:
                for k in Y[i]:
                    if k != j:
                        X[k].remove(i)
            cols.append(X.pop(j))
        return cols

    def _deselect(self, r: int, cols: list[set[int]]) -> None:
        X, Y = self.X, self.Y
        for j in reversed(Y[r]):
            X[j] = cols.pop()
            for i in X[j]:
                for k in Y[i]:
                    if k != j:
                        X[k].add(i)

    def _choose(self) -> int | None:
        best, best_len = None, None
        X = self.X
        for j in self.primary:
            rows = X.get(j)
            if rows is None:
                continue
            if best_len is None or len(rows) < best_len:
                best, best_len = j, len(rows)
                if best_len == 0:
                    break
        return best

    def top_level_rows(self) -> list[int] | None:
        """Rows branched on at the root; None when nothing needs covering."""
        col = self._choose()
        return None if col is None else sorted(self.X[col])

    def solve(self, forced: Sequence[int] = ()) -> list[int] | None:
        solution: list[int] = []
        for r in forced:
            if any(j not in self.X for j in self.Y[r]):
                return None
            self._select(r)
            solution.append(r)
        col = self._choose()
        if col is None:
            return solution
        stack = [[sorted(self.X[col]), 0, None]]
        while stack:
            frame = stack[-1]
            if frame[2] is not None:
                self._deselect(solution.pop(), frame[2])
                frame[2] = None
            if frame[1] >= len(frame[0]):
                stack.pop()
                continue
            r = frame[0][frame[1]]
            frame[1] += 1
            frame[2] = self._select(r)
            solution.append(r)
            col = self._choose()
            if col is None:
                return solution
            if self.X[col]:
                stack.append([sorted(self.X[col]), 0, None])
        return None


def _cover_problem(poset: Iterable[Cell], box: Box, k: int):
    """Rows (intervals) and primary columns for the reduced cover problem."""
    cells = sorted(poset, key=lambda c: (sum(c), c))
    index = {c: i for i, c in enumerate(cells)}
    g = box.g
    deficient = [i for i, c in enumerate(cells) if rho(c, box) < k]
    intervals: list[Interval] = []
    rows: list[tuple[int, ...]] = []
    for i in deficient:
        lo = cells[i]
        saturated = [j for j in range(box.n) if lo[j] == g[j]]
        free = [j for j in range(box.n) if lo[j] < g[j]]
        for raise_ in combinations(free, k - len(saturated)):
            hi = list(lo)
            for j in raise_:
                hi[j] = g[j]
            hi = tuple(hi)
            if hi not in index:
                continue
            iv = Interval(lo, hi)
            intervals.append(iv)
            rows.append(tuple(index[c] for c in iv.cells()))
    return cells, deficient, intervals, rows


def _assemble(cells, intervals, rows, chosen, box) -> IntervalPartition:
    used = [intervals[r] for r in chosen]
    covered = {i for r in chosen for i in rows[r]}
    used.extend(Interval(c, c) for i, c in enumerate(cells) if i not in covered)
    used.sort(key=lambda iv: (sum(iv.lo), iv.lo, iv.hi))
    return IntervalPartition(tuple(used), box)


def _solve_branch(poset, g, k, first_row):
    box = Box(g)
    _, deficient, _, rows = _cover_problem(poset, box, k)
    return _ExactCover(rows, deficient).solve(forced=(first_row,))


def find_partition(
    poset: Iterable[Cell], box: Box, k: int, threads: int = 1
) -> IntervalPartition | None:
    """An interval partition of ``poset`` with rho(hi) >= k for every interval.

    Returns None when no such partition exists.  With ``threads > 1`` the
    root branches are explored in worker processes; the partition returned
    is the same one the sequential search finds.
    """
    poset = frozenset(poset)
    if k > box.n:
        return None
    if not poset:
        return IntervalPartition((), box)
    cells, deficient, intervals, rows = _cover_problem(poset, box, k)
    problem = _ExactCover(rows, deficient)
    if threads > 1:
        roots = problem.top_level_rows()
        if roots is not None and len(roots) > 1:
            chosen = _parallel_solve(poset, box, k, roots, threads)
            if chosen is None:
                return None
            return _assemble(cells, intervals, rows, chosen, box)
    chosen = problem.solve()
    if chosen is None:
        return None
    return _assemble(cells, intervals, rows, chosen, box)


def _parallel_solve(poset, box, k, roots, threads):
    # branch order is preserved: the first root (in sequential order) that
    # succeeds wins, exactly as in the sequential depth-first search
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_solve_branch, poset, box.g, k, r) for r in roots]
        for fut in futures:
            result = fut.result()
            if result is not None:
                for other in futures:
                    other.cancel()
                return result
    return None


def enumerate_partitions_naive(poset: Iterable[Cell], box: Box, k: int) -> IntervalPartition | None:
    """Reference search over *all* intervals [lo, hi] of the poset.

    Branches on the least uncovered cell of a linear extension and tries
    every top; no reduction beyond disjointness.  Refuses posets with more
    than ``NAIVE_CELL_LIMIT`` cells.
    """
    poset = frozenset(poset)
    if len(poset) > NAIVE_CELL_LIMIT:
        raise SizeLimitError(f"naive search limited to {NAIVE_CELL_LIMIT} cells, got {len(poset)}")
    if k > box.n:
        return None
    order = sorted(poset, key=lambda c: (sum(c), c))
    tops = [d for d in order if rho(d, box) >= k]
    uncovered = set(poset)
    chosen: list[Interval] = []

    def extend() -> bool:
        if not uncovered:
            return True
        c = next(x for x in order if x in uncovered)
        for d in tops:
            if not divides(c, d):
                continue
            iv = Interval(c, d)
            block = list(iv.cells())
            if not all(e in uncovered for e in block):
                continue
            uncovered.difference_update(block)
            chosen.append(iv)
            if extend():
                return True
            chosen.pop()
            uncovered.update(block)
        return False

    if extend():
        return IntervalPartition(tuple(chosen), box)
    return None


def sdepth_with_witness(
    module: QuotientModule, box: Box | None = None, threads: int = 1
) -> tuple[float, IntervalPartition]:
    """Stanley depth of ``module`` and an optimal interval partition.

    Binary search over k in [0, n]: a partition good for k is good for
    every smaller k.  The zero module has depth INFINITE.
    """
    box = box or default_box(module)
    poset = characteristic_poset(module, box)
    if not poset:
        return INFINITE, IntervalPartition((), box)
    best = find_partition(poset, box, 0)
    lo, hi = 0, box.n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        found = find_partition(poset, box, mid, threads=threads)
        if found is not None:
            lo, best = mid, found
        else:
            hi = mid - 1
    return lo, best


def sdepth_exact(module: QuotientModule, box: Box | None = None, threads: int = 1) -> float:
    """Exact Stanley depth of J/I (an int, or INFINITE for the zero module)."""
    return sdepth_with_witness(module, box, threads)[0]
