"""Monomials and monomial ideals in S = K[x1, ..., xn].

A monomial is stored as its exponent vector; a monomial ideal as the
divisibility antichain of its minimal generators, sorted in decreasing
lexicographic order of exponent vectors (so ``x1`` comes before ``x2``);
two ideals are equal exactly when their canonical forms are.

The zero ideal has no generators and the unit ideal is generated by ``1``.
Nothing here depends on the coefficient field.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import DimensionError, DomainError, PreconditionError, VacuousColonWarning

__all__ = [
    "Monomial",
    "MonomialIdeal",
    "QuotientModule",
    "SupportShape",
    "minimalize",
    "contains",
    "intersect",
    "ideal_sum",
    "colon_monomial",
    "colon_ideal",
    "radical",
    "is_primary",
    "is_irreducible",
    "is_complete_intersection",
    "is_prime",
    "support_shape",
    "minimal_primes",
    "height",
    "dim_quotient",
    "contract_power_map",
    "variable",
    "prime_ideal",
    "zero_ideal",
    "unit_ideal",
    "divides",
]


@dataclass(frozen=True, order=True)
class Monomial:
    exps: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exps)
        if not exps:
            raise DimensionError("a monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exps", exps)

    @property
    def n(self) -> int:
        return len(self.exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @property
    def degree(self) -> int:
        return sum(self.exps)

    @property
    def support(self) -> frozenset[int]:
        """Indices (0-based) of the variables dividing this monomial."""
        return frozenset(j for j, e in enumerate(self.exps) if e)

    def is_one(self) -> bool:
        return not any(self.exps)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exps)

    def divides(self, other: Monomial) -> bool:
        _check_n(self.n, other.n)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __mul__(self, other: Monomial) -> Monomial:
        _check_n(self.n, other.n)
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: Monomial) -> Monomial:
        _check_n(self.n, other.n)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def gcd(self, other: Monomial) -> Monomial:
        _check_n(self.n, other.n)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exps, other.exps)))

    def quotient(self, other: Monomial) -> Monomial:
        """``self / gcd(self, other)``, the generator of ``(self) : other``."""
        _check_n(self.n, other.n)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exps, other.exps)))

    def squarefree_part(self) -> Monomial:
        return Monomial(tuple(min(e, 1) for e in self.exps))

    def embed(self, n: int) -> Monomial:
        if n < self.n:
            raise DimensionError(f"cannot embed a monomial in {self.n} variables into {n}")
        return Monomial(self.exps + (0,) * (n - self.n))

    def __str__(self) -> str:
        parts = []
        for j, e in enumerate(self.exps):
            if e == 1:
                parts.append(f"x{j + 1}")
            elif e > 1:
                parts.append(f"x{j + 1}^{e}")
        return "*".join(parts) or "1"


def divides(u: Sequence[int], w: Sequence[int]) -> bool:
    """Componentwise ``u <= w`` on raw exponent vectors."""
    return all(a <= b for a, b in zip(u, w))


def _check_n(n1: int, n2: int) -> None:
    if n1 != n2:
        raise DimensionError(f"ambient rings differ: {n1} vs {n2} variables")


def _as_monomial(w, n: int) -> Monomial:
    if not isinstance(w, Monomial):
        w = Monomial(tuple(w))
    _check_n(w.n, n)
    return w


def _antichain(vectors: Iterable[tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    # sorting by degree first means a divisor is always seen before its multiples
    kept: list[tuple[int, ...]] = []
    for v in sorted(set(vectors), key=lambda v: (sum(v), v)):
        if not any(divides(u, v) for u in kept):
            kept.append(v)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by (any) generators; stored minimalized.

    >>> MonomialIdeal(2, [(2, 0), (2, 1), (1, 1)]).gens
    (Monomial(exps=(2, 0)), Monomial(exps=(1, 1)))
    """

    n: int
    gens: tuple[Monomial, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError("the ambient ring needs at least one variable")
        vecs = []
        for g in self.gens:
            g = _as_monomial(g, self.n)
            vecs.append(g.exps)
        object.__setattr__(self, "gens", tuple(Monomial(v) for v in _antichain(vecs)))

    @property
    def exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.exps for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    @property
    def support(self) -> frozenset[int]:
        """Variables (0-based) occurring in some minimal generator."""
        out: set[int] = set()
        for g in self.gens:
            out |= g.support
        return frozenset(out)

    def max_exponents(self) -> tuple[int, ...]:
        """Componentwise maximum exponent over the minimal generators."""
        if not self.gens:
            return (0,) * self.n
        return tuple(max(col) for col in zip(*self.exponents))

    def embed(self, n: int) -> MonomialIdeal:
        """The extension of this ideal to K[x1, ..., xn] for n >= self.n."""
        return MonomialIdeal(n, [g.embed(n) for g in self.gens])

    def permute(self, perm: Sequence[int]) -> MonomialIdeal:
        """Rename variables so that new variable ``i`` is old variable ``perm[i]``."""
        return MonomialIdeal(self.n, [tuple(g.exps[p] for p in perm) for g in self.gens])

    def __contains__(self, w) -> bool:
        return contains(self, w)

    def __le__(self, other: MonomialIdeal) -> bool:
        """Ideal inclusion."""
        _check_n(self.n, other.n)
        return all(contains(other, g) for g in self.gens)

    def __str__(self) -> str:
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def zero_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, ())


def unit_ideal(n: int) -> MonomialIdeal:
    return MonomialIdeal(n, [Monomial.one(n)])


def variable(i: int, n: int, power: int = 1) -> Monomial:
    """The monomial ``x_{i+1}^power`` (``i`` is 0-based)."""
    exps = [0] * n
    exps[i] = power
    return Monomial(tuple(exps))


def prime_ideal(variables: Iterable[int], n: int) -> MonomialIdeal:
    """The prime ideal generated by the given 0-based variables."""
    return MonomialIdeal(n, [variable(i, n) for i in variables])


def minimalize(gens: Iterable, n: int | None = None) -> MonomialIdeal:
    """The ideal generated by ``gens``, reduced to its minimal generating set."""
    gens = [g if isinstance(g, Monomial) else Monomial(tuple(g)) for g in gens]
    if n is None:
        if not gens:
            raise DimensionError("cannot infer the ambient ring of an empty generating set")
        n = gens[0].n
    for g in gens:
        _check_n(g.n, n)
    return MonomialIdeal(n, gens)


def contains(ideal: MonomialIdeal, w) -> bool:
    """True iff the monomial ``w`` lies in ``ideal``."""
    w = _as_monomial(w, ideal.n)
    return any(divides(g, w.exps) for g in ideal.exponents)


def intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_n(a.n, b.n)
    return MonomialIdeal(a.n, [g.lcm(h) for g in a.gens for h in b.gens])


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _check_n(a.n, b.n)
    return MonomialIdeal(a.n, a.gens + b.gens)


def colon_monomial(ideal: MonomialIdeal, v) -> MonomialIdeal:
    """``I : v`` for a monomial ``v``."""
    v = _as_monomial(v, ideal.n)
    return MonomialIdeal(ideal.n, [g.quotient(v) for g in ideal.gens])


def colon_ideal(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    """``I : J``, the intersection of ``I : v`` over the generators v of J.

    Colon by the zero ideal is the unit ideal; a :class:`VacuousColonWarning`
    is emitted since the intersection is empty.
    """
    _check_n(a.n, b.n)
    if b.is_zero():
        warnings.warn("colon by the zero ideal is the unit ideal", VacuousColonWarning, stacklevel=2)
        return unit_ideal(a.n)
    out = unit_ideal(a.n)
    for v in b.gens:
        out = intersect(out, colon_monomial(a, v))
    return out


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, [g.squarefree_part() for g in ideal.gens])


def _check_proper_nonzero(q: MonomialIdeal) -> None:
    if q.is_zero() or q.is_unit():
        raise DomainError(f"expected a proper nonzero ideal, got {q}")


def _pure_power_variables(q: MonomialIdeal) -> set[int]:
    return {next(iter(g.support)) for g in q.gens if len(g.support) == 1}


def is_primary(q: MonomialIdeal) -> bool:
    """True iff every variable of some generator has a pure power in G(q)."""
    _check_proper_nonzero(q)
    return q.support <= _pure_power_variables(q)


def is_irreducible(q: MonomialIdeal) -> bool:
    """True iff q is generated by pure powers of variables."""
    _check_proper_nonzero(q)
    return all(len(g.support) == 1 for g in q.gens)


def is_prime(q: MonomialIdeal) -> bool:
    return is_irreducible(q) and q.is_squarefree()


def is_complete_intersection(q: MonomialIdeal) -> bool:
    """True iff the minimal generators have pairwise disjoint supports."""
    _check_proper_nonzero(q)
    seen: set[int] = set()
    for g in q.gens:
        if seen & g.support:
            return False
        seen |= g.support
    return True


@dataclass(frozen=True)
class SupportShape:
    """Normal form of a pair of primary ideals.

    After renumbering, the first ideal is supported on x1..xt and the
    second on x(r+1)..xp, inside a ring with n variables.
    """

    t: int
    r: int
    p: int
    n: int

    def __post_init__(self):
        if not 0 <= self.r <= self.t <= self.p <= self.n:
            raise DomainError(f"need 0 <= r <= t <= p <= n, got {self}")

    @property
    def common(self) -> int:
        """Number of variables shared by both supports."""
        return self.t - self.r


def support_shape(q1: MonomialIdeal, q2: MonomialIdeal) -> tuple[SupportShape, tuple[int, ...]]:
    """Shape of the pair ``(q1, q2)`` and the renumbering that realizes it.

    The returned permutation lists old variable indices in their new order:
    first the variables only in q1, then the shared ones, then those only
    in q2, then the variables in neither.
    """
    _check_n(q1.n, q2.n)
    for q in (q1, q2):
        if not is_primary(q):
            raise DomainError(f"{q} is not primary")
    a, b = q1.support, q2.support
    rest = set(range(q1.n)) - a - b
    perm = tuple(sorted(a - b)) + tuple(sorted(a & b)) + tuple(sorted(b - a)) + tuple(sorted(rest))
    shape = SupportShape(t=len(a), r=len(a - b), p=len(a | b), n=q1.n)
    return shape, perm


def _minimal_transversals(edges: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    # Berge's sequential algorithm: update the minimal transversals edge by edge
    transversals = [frozenset()]
    for edge in edges:
        grown = set()
        for t in transversals:
            if t & edge:
                grown.add(t)
            else:
                grown.update(t | {v} for v in edge)
        transversals = [t for t in grown if not any(s < t for s in grown)]
    return sorted(transversals, key=lambda t: (len(t), sorted(t)))


def minimal_primes(ideal: MonomialIdeal) -> list[frozenset[int]]:
    """Minimal primes of ``ideal`` as sets of 0-based variable indices.

    These are the minimal vertex covers of the hypergraph whose edges are
    the supports of the generators of the radical.
    """
    _check_proper_nonzero(ideal)
    return _minimal_transversals(g.support for g in radical(ideal).gens)


def height(ideal: MonomialIdeal) -> int:
    """Height of a proper ideal; the zero ideal has height 0."""
    if ideal.is_zero():
        return 0
    return min(len(p) for p in minimal_primes(ideal))


@dataclass(frozen=True)
class QuotientModule:
    """The module ``J/I`` for monomial ideals ``I`` inside ``J``.

    ``I`` may be the zero ideal (the module is the ideal ``J`` itself) and
    ``J`` may be the unit ideal (the module is ``S/I``).
    """

    J: MonomialIdeal
    I: MonomialIdeal

    def __post_init__(self):
        _check_n(self.J.n, self.I.n)
        if not self.I <= self.J:
            raise DomainError(f"{self.I} is not contained in {self.J}")

    @classmethod
    def of_ideal(cls, ideal: MonomialIdeal) -> QuotientModule:
        return cls(ideal, zero_ideal(ideal.n))

    @classmethod
    def of_ring_quotient(cls, ideal: MonomialIdeal) -> QuotientModule:
        """The cyclic module ``S/I``."""
        return cls(unit_ideal(ideal.n), ideal)

    @property
    def n(self) -> int:
        return self.J.n

    def is_zero(self) -> bool:
        return self.J == self.I

    def radical(self) -> QuotientModule:
        return QuotientModule(radical(self.J), radical(self.I))

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max(a, b) for a, b in zip(self.J.max_exponents(), self.I.max_exponents()))

    def contains(self, w) -> bool:
        """True iff the monomial ``w`` is nonzero in J/I."""
        return contains(self.J, w) and not contains(self.I, w)

    def __str__(self) -> str:
        if self.I.is_zero():
            return str(self.J)
        return f"{self.J} / {self.I}"


def dim_quotient(module: QuotientModule) -> int:
    """Krull dimension of ``J/I``, that is ``n - height(I : J)``.

    The zero module gets dimension -1.
    """
    if module.J.is_zero():
        return -1
    annihilator = colon_ideal(module.I, module.J)
    if annihilator.is_unit():
        return -1
    return module.n - height(annihilator)


def contract_power_map(ideal: MonomialIdeal, a: int) -> MonomialIdeal:
    """Preimage of ``ideal`` under the substitution ``x_i -> x_i^a``.

    ``x^c`` lies in the preimage iff ``x^(a*c)`` lies in ``ideal``; for
    ``a`` at least every exponent in G(ideal) this is the radical.
    """
    if a < 1:
        raise PreconditionError("the power must be positive")
    top = max(ideal.max_exponents(), default=0)
    if a < top:
        raise PreconditionError(f"power {a} is below the largest generator exponent {top}")
    return MonomialIdeal(ideal.n, [tuple(-(-e // a) for e in g.exps) for g in ideal.gens])


def box_cells(bounds: Sequence[int]):
    """All exponent vectors ``e`` with ``0 <= e_j <= bounds[j]``."""
    return product(*(range(b + 1) for b in bounds))
