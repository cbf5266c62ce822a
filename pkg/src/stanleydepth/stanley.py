"""Stanley decompositions of J/I: construction, verification, radical transfer."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from .algebra import Monomial, QuotientModule, divides
from .errors import InvariantViolation, PreconditionError
from .poset import INFINITE, IntervalPartition

__all__ = [
    "StanleySpace",
    "StanleyDecomposition",
    "TransferReport",
    "decomposition_from_partition",
    "verify_decomposition",
    "decomposition_error",
    "verification_box",
    "sdepth_of_decomposition",
    "radical_transfer",
    "transfer_with_report",
]


@dataclass(frozen=True, order=True)
class StanleySpace:
    """The space u*K[Z]: monomial multiples of ``u`` in the variables ``Z`` (0-based)."""

    u: Monomial
    Z: frozenset[int]

    def __post_init__(self):
        Z = frozenset(self.Z)
        if any(not 0 <= j < self.u.n for j in Z):
            raise ValueError(f"free variables {sorted(Z)} outside a ring with {self.u.n} variables")
        object.__setattr__(self, "Z", Z)

    @property
    def dim(self) -> int:
        return len(self.Z)

    def contains(self, e: Sequence[int]) -> bool:
        return all(
            (a >= b) if j in self.Z else (a == b) for j, (a, b) in enumerate(zip(e, self.u.exps))
        )

    def cells_in(self, bounds: Sequence[int]):
        """Exponent vectors of this space inside the box ``[0, bounds]``."""
        ranges = []
        for j, (b, top) in enumerate(zip(self.u.exps, bounds)):
            if j in self.Z:
                ranges.append(range(b, top + 1))
            elif b <= top:
                ranges.append((b,))
            else:
                return iter(())
        return product(*ranges)

    def __str__(self) -> str:
        free = ",".join(f"x{j + 1}" for j in sorted(self.Z))
        return f"{self.u}*K[{free}]"


@dataclass(frozen=True)
class StanleyDecomposition:
    module: QuotientModule
    spaces: tuple[StanleySpace, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "spaces", tuple(self.spaces))

    def __str__(self) -> str:
        return " + ".join(str(s) for s in self.spaces) or "0"

    def to_lines(self) -> str:
        """One space per line as ``u ; x1, x2``."""
        out = []
        for s in self.spaces:
            out.append(f"{s.u} ; " + ", ".join(f"x{j + 1}" for j in sorted(s.Z)))
        return "\n".join(out)

    def to_json(self) -> list[dict]:
        return [
            {"generator": str(s.u), "freeVars": [f"x{j + 1}" for j in sorted(s.Z)]}
            for s in self.spaces
        ]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def decomposition_from_partition(
    partition: IntervalPartition, module: QuotientModule
) -> StanleyDecomposition:
    """The Stanley decomposition induced by an interval partition.

    An interval [lo, hi] contributes the spaces x^c * K[Z] where Z is the
    set of coordinates with hi at the box ceiling and c runs over the cells
    of the interval agreeing with lo on Z.  When hi differs from lo only on
    Z this is the single space x^lo * K[Z].
    """
    g = partition.box.g
    spaces = []
    for iv in partition.intervals:
        Z = frozenset(j for j in range(len(g)) if iv.hi[j] == g[j])
        ranges = [(iv.lo[j],) if j in Z else range(iv.lo[j], iv.hi[j] + 1) for j in range(len(g))]
        spaces.extend(StanleySpace(Monomial(c), Z) for c in product(*ranges))
    decomposition = StanleyDecomposition(module, tuple(spaces))
    witness = decomposition_error(decomposition)
    if witness is not None:
        raise InvariantViolation(f"partition does not induce a decomposition; degree {witness} is miscounted")
    return decomposition


def verification_box(decomposition: StanleyDecomposition) -> tuple[int, ...]:
    """Per-variable bound B_j = 1 + largest exponent among all generators and spaces."""
    m = decomposition.module
    vectors = list(m.J.exponents) + list(m.I.exponents) + [s.u.exps for s in decomposition.spaces]
    return tuple(1 + max((v[j] for v in vectors), default=0) for j in range(m.n))


def decomposition_error(
    decomposition: StanleyDecomposition, bounds: Sequence[int] | None = None
) -> tuple[int, ...] | None:
    """A degree where the spaces fail to count J/I exactly once, or None.

    Membership of x^e in J/I and in every space is unchanged when e_j is
    clamped to B_j (one past every exponent in sight), so checking the box
    [0, B] settles the question for all degrees.
    """
    bounds = tuple(bounds) if bounds is not None else verification_box(decomposition)
    m = decomposition.module
    counts: Counter = Counter()
    for s in decomposition.spaces:
        if s.u.n != m.n:
            return s.u.exps
        counts.update(s.cells_in(bounds))
    J, I = m.J.exponents, m.I.exponents
    for e in product(*(range(b + 1) for b in bounds)):
        want = int(any(divides(u, e) for u in J) and not any(divides(u, e) for u in I))
        if counts.get(e, 0) != want:
            return e
    return None


def verify_decomposition(decomposition: StanleyDecomposition) -> bool:
    """True iff the spaces form a direct sum equal to the module."""
    return decomposition_error(decomposition) is None


def sdepth_of_decomposition(decomposition: StanleyDecomposition) -> float:
    """Smallest space dimension; INFINITE for the empty decomposition."""
    return min((s.dim for s in decomposition.spaces), default=INFINITE)


@dataclass(frozen=True)
class TransferReport:
    decomposition: StanleyDecomposition
    discarded: tuple[StanleySpace, ...]
    power: int


def transfer_with_report(decomposition: StanleyDecomposition, a: int) -> TransferReport:
    """Pull a decomposition of J/I back along x_i -> x_i^a.

    The preimage of u*K[Z] is nonzero iff ``a`` divides u_j for every j
    outside Z; it is then y^c * K[Z] with c_j = u_j / a off Z and
    c_j = ceil(u_j / a) on Z.  For ``a`` at least every exponent involved
    the preimages of J and I are their radicals, so the surviving spaces
    decompose sqrt(J)/sqrt(I).
    """
    if a < 1:
        raise PreconditionError("the power must be positive")
    m = decomposition.module
    top = max(
        [max(m.J.max_exponents()), max(m.I.max_exponents())]
        + [max(s.u.exps) for s in decomposition.spaces]
    )
    if a < top:
        raise PreconditionError(f"power {a} is below the largest exponent {top}")
    witness = decomposition_error(decomposition)
    if witness is not None:
        raise PreconditionError(f"not a Stanley decomposition of {m}: degree {witness} is miscounted")
    kept, dropped = [], []
    for s in decomposition.spaces:
        if any(j not in s.Z and e % a for j, e in enumerate(s.u.exps)):
            dropped.append(s)
            continue
        c = tuple(-(-e // a) if j in s.Z else e // a for j, e in enumerate(s.u.exps))
        kept.append(StanleySpace(Monomial(c), s.Z))
    result = StanleyDecomposition(m.radical(), tuple(kept))
    return TransferReport(result, tuple(dropped), a)


def radical_transfer(decomposition: StanleyDecomposition, a: int) -> StanleyDecomposition:
    """Decomposition of sqrt(J)/sqrt(I) induced by one of J/I; see :func:`transfer_with_report`."""
    return transfer_with_report(decomposition, a).decomposition
