"""Closed-form bounds and exact values for the Stanley depth of Q ∩ Q'.

Shape-based functions take a :class:`SupportShape` (t, r, p, n): after
renumbering, Q is supported on x1..xt and Q' on x(r+1)..xp.  Each one
raises :class:`NotApplicable` when the shape falls outside the hypotheses
of the result it encodes; nothing is extrapolated.

Half-integral upper bounds are returned as :class:`fractions.Fraction`;
compare them with integer depths through ``math.floor``.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import (
    MonomialIdeal,
    QuotientModule,
    SupportShape,
    intersect,
    is_complete_intersection,
    is_irreducible,
    is_prime,
    support_shape,
)
from .errors import DomainError, InvariantViolation, NotApplicable
from .poset import INFINITE, sdepth_exact

__all__ = [
    "BoundEntry",
    "BoundReport",
    "bound_report",
    "ub_radical",
    "ub_nested_supports",
    "ub_single_variable",
    "exact_single_variable",
    "ub_disjoint_supports",
    "ub_shared_variables",
    "ub_projection",
    "ub_general",
    "ub_overlap_all_but_one",
    "lb_irreducible_disjoint",
    "exact_odd_disjoint",
    "range_even_disjoint",
    "lb_generators",
    "formula_prime",
    "formula_complete_intersection",
    "extension_interval",
]


def _require(cond: bool, what: str) -> None:
    if not cond:
        raise NotApplicable(what)


def ub_radical(module: QuotientModule, threads: int = 1) -> float:
    """sdepth(J/I) <= sdepth(sqrt(J)/sqrt(I)); returns the right-hand side."""
    return sdepth_exact(module.radical(), threads=threads)


def ub_nested_supports(shape: SupportShape) -> int:
    """sqrt(Q) inside sqrt(Q') = (x1..xn): at most n - floor(t/2)."""
    _require(shape.r == 0 and shape.p == shape.n and shape.t >= 1, "needs sqrt(Q) in sqrt(Q') = m")
    return shape.n - shape.t // 2


def ub_single_variable(shape: SupportShape) -> int:
    """sqrt(Q) = (x1), sqrt(Q') = (x2..xn): at most 1 + ceil((n-1)/2)."""
    _require(shape.t == 1 and shape.r == 1 and shape.p == shape.n and shape.n >= 2,
             "needs t = r = 1 and p = n >= 2")
    return 1 + math.ceil((shape.n - 1) / 2)


def exact_single_variable(shape: SupportShape, irreducible: bool) -> int:
    """The single-variable bound is attained when both ideals are irreducible."""
    _require(irreducible, "needs irreducible Q and Q'")
    return ub_single_variable(shape)


def ub_disjoint_supports(shape: SupportShape) -> Fraction:
    """Disjoint supports covering all variables, t >= 2, n >= 4: at most (n+2)/2."""
    s = shape
    _require(s.r == s.t and s.p == s.n and s.t >= 2 and s.n >= 4 and s.n > s.t,
             "needs disjoint supports covering x1..xn with t >= 2, n >= 4")
    return Fraction(s.n + 2, 2)


def ub_shared_variables(shape: SupportShape) -> Fraction:
    """1 < r <= t < n = p, n >= 4: at most (n + t - r + 2)/2."""
    s = shape
    _require(1 < s.r <= s.t < s.n and s.p == s.n and s.n >= 4, "needs 1 < r <= t < p = n, n >= 4")
    return Fraction(s.n + s.t - s.r + 2, 2)


def ub_projection(shape: SupportShape) -> int:
    """1 < r <= t < n = p: at most min(n - floor(t/2), n - floor((n-t)/2))."""
    s = shape
    _require(1 < s.r <= s.t < s.n and s.p == s.n, "needs 1 < r <= t < p = n")
    return min(s.n - s.t // 2, s.n - (s.n - s.t) // 2)


def ub_general(shape: SupportShape) -> int:
    """1 < r <= t < p <= n, n >= 4.

    min(floor((2n + t - p - r + 2)/2), n - floor(t/2), n - floor((p-t)/2)).
    """
    s = shape
    _require(1 < s.r <= s.t < s.p <= s.n and s.n >= 4, "needs 1 < r <= t < p <= n, n >= 4")
    return min((2 * s.n + s.t - s.p - s.r + 2) // 2, s.n - s.t // 2, s.n - (s.p - s.t) // 2)


def ub_overlap_all_but_one(shape: SupportShape) -> int:
    """sqrt(Q) = (x1..x(n-1)), sqrt(Q') = (x2..xn): at most n - floor((n-1)/2).

    The intersection of the radicals is the complete intersection
    (x1*xn, x2, ..., x(n-1)).
    """
    s = shape
    _require(s.r == 1 and s.t == s.n - 1 and s.p == s.n and s.n >= 2, "needs r = 1, t = n-1, p = n")
    return formula_complete_intersection(s.n - 1, s.n)


def lb_irreducible_disjoint(shape: SupportShape, irreducible: bool) -> int:
    """Irreducible Q, Q' with disjoint supports covering all variables:
    at least ceil(t/2) + ceil((n-t)/2)."""
    s = shape
    _require(irreducible and s.r == s.t and s.p == s.n and 1 <= s.t < s.n,
             "needs irreducible ideals with disjoint supports covering x1..xn")
    return math.ceil(s.t / 2) + math.ceil((s.n - s.t) / 2)


def exact_odd_disjoint(shape: SupportShape, irreducible: bool) -> int:
    """Irreducible, disjoint supports covering all variables, n odd: exactly ceil(n/2)."""
    lb_irreducible_disjoint(shape, irreducible)
    _require(shape.n % 2 == 1, "needs n odd")
    return math.ceil(shape.n / 2)


def range_even_disjoint(shape: SupportShape, irreducible: bool) -> tuple[int, int]:
    """Irreducible, disjoint supports covering all variables, n even.

    Exactly n/2 + 1 for odd t; for even t the value is n/2 or n/2 + 1.
    """
    lb_irreducible_disjoint(shape, irreducible)
    _require(shape.n % 2 == 0, "needs n even")
    half = shape.n // 2
    if shape.t % 2:
        return half + 1, half + 1
    return half, half + 1


def lb_generators(ideal: MonomialIdeal) -> int:
    """Lower bound n - floor(|G(I)|/2) for a nonzero monomial ideal."""
    if ideal.is_zero():
        raise DomainError("needs a nonzero ideal")
    return ideal.n - len(ideal.gens) // 2


def formula_prime(t: int, n: int) -> int:
    """Stanley depth of a prime generated by t of the n variables: n - t + ceil(t/2)."""
    if not 1 <= t <= n:
        raise DomainError(f"needs 1 <= t <= n, got t={t}, n={n}")
    return n - t + math.ceil(t / 2)


def formula_complete_intersection(m: int, n: int) -> int:
    """Stanley depth of a monomial complete intersection with m generators: n - floor(m/2)."""
    if not 1 <= m <= n:
        raise DomainError(f"needs 1 <= m <= n, got m={m}, n={n}")
    return n - m // 2


def extension_interval(s: int) -> tuple[int, int]:
    """Possible depths of (I, x_{n+1}) in n+1 variables when sdepth(I) = s."""
    return s, s + 1


# --------------------------------------------------------------------------
# aggregated report

KINDS = ("upper", "lower", "exact", "range")


@dataclass
class BoundEntry:
    name: str
    kind: str
    value: int | None
    applicable: bool
    citation: str
    rational: Fraction | None = None
    high: int | None = None
    reason: str = ""

    def holds_for(self, exact: float) -> bool:
        if not self.applicable or self.value is None:
            return True
        if self.kind == "upper":
            return exact <= self.value
        if self.kind == "lower":
            return exact >= self.value
        if self.kind == "exact":
            return exact == self.value
        return self.value <= exact <= self.high

    def as_dict(self) -> dict:
        d = asdict(self)
        d["rational"] = str(self.rational) if self.rational is not None else None
        return d


@dataclass
class BoundReport:
    Q: MonomialIdeal
    Q2: MonomialIdeal
    shape: SupportShape
    entries: list[BoundEntry] = field(default_factory=list)
    exact: float | None = None
    notes: list[str] = field(default_factory=list)

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def applicable(self) -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable]

    def best_upper(self) -> int | None:
        vals = [e.value for e in self.applicable() if e.kind in ("upper", "exact")]
        return min(vals, default=None)

    def best_lower(self) -> int | None:
        vals = [e.value for e in self.applicable() if e.kind in ("lower", "exact", "range")]
        return max(vals, default=None)

    def violations(self) -> list[str]:
        out = []
        if self.exact is not None:
            for e in self.applicable():
                if not e.holds_for(self.exact):
                    out.append(f"{e.name} ({e.kind} {e.value}) contradicts exact sdepth {self.exact}")
        lo, hi = self.best_lower(), self.best_upper()
        if lo is not None and hi is not None and lo > hi:
            out.append(f"lower bound {lo} exceeds upper bound {hi}")
        return out

    def check(self) -> BoundReport:
        bad = self.violations()
        if bad:
            raise InvariantViolation("; ".join(bad))
        return self

    def as_dict(self) -> dict:
        return {
            "Q": str(self.Q),
            "Q2": str(self.Q2),
            "n": self.shape.n,
            "shape": asdict(self.shape),
            "exact": _json_depth(self.exact),
            "entries": [e.as_dict() for e in self.entries],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)

    def to_table(self) -> str:
        header = ("name", "kind", "value", "applicable", "citation")
        rows = [header]
        for e in self.entries:
            if not e.applicable:
                value = "-"
            elif e.kind == "range":
                value = f"{e.value}..{e.high}"
            elif e.rational is not None and e.rational.denominator != 1:
                value = f"{e.value} ({e.rational})"
            else:
                value = str(e.value)
            rows.append((e.name, e.kind, value, "yes" if e.applicable else "no", e.citation))
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        s = self.shape
        lines.insert(0, f"{self.Q} ∩ {self.Q2}   shape t={s.t} r={s.r} p={s.p} n={s.n}")
        if self.exact is not None:
            lines.append(f"exact sdepth = {_json_depth(self.exact)}")
        lines.extend(f"note: {n}" for n in self.notes)
        return "\n".join(lines)


def _json_depth(v):
    if v is None:
        return None
    return "infinite" if v == INFINITE else int(v)


def _entry(name, kind, citation, fn: Callable, *args) -> BoundEntry:
    try:
        value = fn(*args)
    except NotApplicable as exc:
        return BoundEntry(name, kind, None, False, citation, reason=str(exc))
    if kind == "range":
        return BoundEntry(name, kind, value[0], True, citation, high=value[1])
    if isinstance(value, Fraction):
        return BoundEntry(name, kind, math.floor(value), True, citation, rational=value)
    return BoundEntry(name, kind, int(value), True, citation)


def _shape_entries(shape: SupportShape, irreducible: bool, suffix: str = "") -> list[BoundEntry]:
    table = [
        ("nested_supports", "upper", "prime-ideal formula via radicals", ub_nested_supports),
        ("single_variable", "upper", "gcd colon reduction", ub_single_variable),
        ("disjoint_supports", "upper", "interval counting on degree 2 and 3 cells", ub_disjoint_supports),
        ("shared_variables", "upper", "free-variable extension of the disjoint case", ub_shared_variables),
        ("projection", "upper", "setting one variable to 1", ub_projection),
        ("general", "upper", "restriction to the support ring", ub_general),
        ("overlap_all_but_one", "upper", "complete-intersection radical", ub_overlap_all_but_one),
    ]
    out = [_entry(name + suffix, kind, cite, fn, shape) for name, kind, cite, fn in table]
    with_irr = [
        ("single_variable_exact", "exact", "gcd colon reduction, irreducible case", exact_single_variable),
        ("irreducible_disjoint_lower", "lower", "irreducible disjoint-support lower bound", lb_irreducible_disjoint),
        ("odd_disjoint_exact", "exact", "irreducible disjoint supports, n odd", exact_odd_disjoint),
        ("even_disjoint_range", "range", "irreducible disjoint supports, n even", range_even_disjoint),
    ]
    out += [_entry(name + suffix, kind, cite, fn, shape, irreducible) for name, kind, cite, fn in with_irr]
    eq = _entry("general_equality" + suffix, "exact", "restriction to the support ring, equality case",
                _general_equality, shape, irreducible)
    out.append(eq)
    return out


def _general_equality(shape: SupportShape, irreducible: bool) -> int:
    value = ub_general(shape)
    _require(irreducible and shape.t == shape.r and shape.n % 2 == 1,
             "needs t = r, n odd and irreducible ideals")
    return value


def bound_report(
    Q: MonomialIdeal,
    Q2: MonomialIdeal,
    compute_exact: bool = False,
    threads: int = 1,
    check: bool = True,
) -> BoundReport:
    """Evaluate every bound that applies to Q ∩ Q' for primary Q, Q'.

    With ``compute_exact`` the exact Stanley depth of the intersection and of
    its radical are computed as well, and (unless ``check`` is False) every
    applicable entry is checked against it.
    """
    shape, _ = support_shape(Q, Q2)
    swapped, _ = support_shape(Q2, Q)
    irreducible = is_irreducible(Q) and is_irreducible(Q2)
    ideal = intersect(Q, Q2)
    report = BoundReport(Q, Q2, shape)
    report.entries = _shape_entries(shape, irreducible)
    if swapped != shape:
        report.entries += [e for e in _shape_entries(swapped, irreducible, "~swapped") if e.applicable]

    report.entries.append(_entry("generator_count", "lower", "generator-count lower bound", lb_generators, ideal))
    if is_prime(ideal):
        report.entries.append(_entry("prime_formula", "exact", "prime-ideal formula", formula_prime,
                                     len(ideal.support), ideal.n))
    if is_complete_intersection(ideal):
        report.entries.append(_entry("complete_intersection_formula", "exact",
                                     "complete-intersection formula",
                                     formula_complete_intersection, len(ideal.gens), ideal.n))
    if compute_exact:
        module = QuotientModule.of_ideal(ideal)
        report.entries.append(BoundEntry("radical", "upper", int(ub_radical(module, threads)), True,
                                         "passing to radicals"))
        report.exact = sdepth_exact(module, threads=threads)
        for e in report.entries:
            if e.kind == "range" and e.applicable and e.value != e.high:
                report.notes.append(f"{e.name}: exact computation selects {_json_depth(report.exact)}")
    report.entries.sort(key=lambda e: e.name)
    if check:
        report.check()
    return report
