"""Reading and writing monomial ideals and Stanley decompositions as text.

Ideal literals look like ``(x1^2*x2, x3)``.  An optional ``n=5;`` prefix
fixes the number of variables, otherwise it is the largest index used.
``x1, ..., x6`` expands to ``x1, x2, ..., x6``; ``(0)`` and ``()`` are the
zero ideal, ``(1)`` the unit ideal.  Several literals joined by ``∩`` (or
``cap`` / ``&``) denote their intersection.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .algebra import Monomial, MonomialIdeal, QuotientModule, intersect
from .errors import StanleyDepthError
from .stanley import StanleyDecomposition, StanleySpace

__all__ = [
    "ParseError",
    "parse_ideal",
    "parse_ideals",
    "parse_monomial",
    "format_ideal",
    "format_monomial",
    "parse_decomposition",
]


class ParseError(StanleyDepthError, ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text, self.pos = text, pos
        if pos is not None:
            message = f"{message} at position {pos}: {text!r}"
        super().__init__(message)


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<n>n\s*=\s*(?P<nval>\d+)\s*;)
      | (?P<var>x(?P<idx>\d+))
      | (?P<int>\d+)
      | (?P<ellipsis>\.\.\.|…)
      | (?P<cap>∩|\bcap\b|&)
      | (?P<op>[(),*^])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = len(text) - len(text[pos:].lstrip())
            raise ParseError("unexpected character", text, stripped if stripped > pos else pos)
        start = m.start(m.lastgroup) if m.lastgroup else pos
        if m.group("n"):
            tokens.append(("n", m.group("nval"), start))
        elif m.group("var"):
            tokens.append(("var", m.group("idx"), start))
        elif m.group("int"):
            tokens.append(("int", m.group("int"), start))
        elif m.group("ellipsis"):
            tokens.append(("...", "...", start))
        elif m.group("cap"):
            tokens.append(("cap", "∩", start))
        else:
            tokens.append((m.group("op"), m.group("op"), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


# a raw generator maps a 1-based variable index to its exponent
_Raw = dict


@dataclass
class _Parsed:
    n: int | None
    terms: list[list[_Raw]]

    @property
    def max_index(self) -> int:
        return max((i for term in self.terms for g in term for i in g), default=0)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            want = {"end": "end of input"}.get(kind, repr(kind))
            found = f"x{tok[1]}" if tok[0] == "var" else tok[1]
            raise ParseError(f"expected {want}, found {found!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self) -> _Parsed:
        n = None
        if self.peek()[0] == "n":
            n = int(self.take("n")[1])
            if n < 1:
                raise ParseError("n must be positive", self.text, self.tokens[0][2])
        terms = [self.term()]
        while self.peek()[0] == "cap":
            self.take("cap")
            terms.append(self.term())
        self.take("end")
        return _Parsed(n, terms)

    def term(self) -> list[_Raw]:
        self.take("(")
        gens: list[_Raw] = []
        if self.peek()[0] == ")":
            self.take(")")
            return gens
        gens.append(self.gen())
        while self.peek()[0] == ",":
            self.take(",")
            if self.peek()[0] == "...":
                tok = self.take("...")
                self.take(",")
                last = self.gen()
                gens.extend(self._expand(gens[-1], last, tok[2]))
            else:
                gens.append(self.gen())
        self.take(")")
        if any(g is None for g in gens):
            if len(gens) == 1:
                return []
            raise ParseError("0 cannot be combined with other generators", self.text, None)
        return gens

    def _expand(self, first: _Raw, last: _Raw, pos: int) -> list[_Raw]:
        if not (first and last and len(first) == 1 and len(last) == 1
                and set(first.values()) == {1} and set(last.values()) == {1}):
            raise ParseError("'...' must sit between two plain variables", self.text, pos)
        a, b = next(iter(first)), next(iter(last))
        if b <= a:
            raise ParseError("'...' needs an increasing variable range", self.text, pos)
        return [{i: 1} for i in range(a + 1, b + 1)]

    def gen(self) -> _Raw | None:
        tok = self.peek()
        if tok[0] == "int":
            self.take("int")
            if tok[1] == "1":
                return {}
            if tok[1] == "0":
                return None
            raise ParseError("only 0 and 1 may appear as constant generators", self.text, tok[2])
        exps: _Raw = {}
        self.factor(exps)
        while self.peek()[0] == "*":
            self.take("*")
            self.factor(exps)
        return exps

    def factor(self, exps: _Raw) -> None:
        tok = self.take("var")
        idx = int(tok[1])
        if idx == 0:
            raise ParseError("variables are numbered from x1", self.text, tok[2])
        power = 1
        if self.peek()[0] == "^":
            self.take("^")
            ptok = self.take("int")
            power = int(ptok[1])
            if power == 0:
                raise ParseError("exponent 0 is not allowed", self.text, ptok[2])
        exps[idx] = exps.get(idx, 0) + power


def _build(terms: list[list[_Raw]], n: int) -> MonomialIdeal:
    ideals = []
    for term in terms:
        gens = []
        for g in term:
            exps = [0] * n
            for i, e in g.items():
                exps[i - 1] = e
            gens.append(Monomial(tuple(exps)))
        ideals.append(MonomialIdeal(n, gens))
    out = ideals[0]
    for other in ideals[1:]:
        out = intersect(out, other)
    return out


def parse_ideals(texts: Sequence[str], n: int | None = None) -> list[MonomialIdeal]:
    """Parse several ideal expressions into one common ring.

    The ambient size is ``n`` if given, else any ``n=`` prefix, else the
    largest variable index across all expressions.
    """
    parsed = [_Parser(t).parse() for t in texts]
    declared = {p.n for p in parsed if p.n is not None}
    if n is None:
        if len(declared) > 1:
            raise ParseError(f"conflicting ring sizes {sorted(declared)}")
        n = declared.pop() if declared else None
    need = max((p.max_index for p in parsed), default=0)
    if n is None:
        n = max(need, 1)
    if need > n:
        raise ParseError(f"variable x{need} does not exist in a ring with {n} variables")
    return [_build(p.terms, n) for p in parsed]


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Parse one ideal expression.

    >>> str(parse_ideal("(x1^2, x1*x2, x1^2*x2)"))
    '(x1^2, x1*x2)'
    """
    return parse_ideals([text], n)[0]


def parse_monomial(text: str, n: int) -> Monomial:
    ideal = parse_ideal(f"({text})", n)
    if len(ideal.gens) != 1:
        raise ParseError(f"expected a single monomial, got {text!r}")
    return ideal.gens[0]


def format_monomial(u: Monomial) -> str:
    return str(u)


def format_ideal(ideal: MonomialIdeal, with_n: bool = False) -> str:
    body = str(ideal)
    return f"n={ideal.n}; {body}" if with_n else body


def _parse_vars(text: str, n: int) -> frozenset[int]:
    out = set()
    for item in filter(None, (s.strip() for s in text.split(","))):
        m = re.fullmatch(r"x(\d+)", item)
        if not m or not 1 <= int(m.group(1)) <= n:
            raise ParseError(f"bad free variable {item!r}")
        out.add(int(m.group(1)) - 1)
    return frozenset(out)


def parse_decomposition(text: str, module: QuotientModule) -> StanleyDecomposition:
    """Read a decomposition of ``module``.

    Accepts either the line format (``u ; x1, x2`` per space, ``#`` starts a
    comment) or its JSON mirror, a list of ``{"generator", "freeVars"}``.
    """
    import json

    n = module.n
    stripped = text.strip()
    spaces: list[StanleySpace] = []
    if stripped.startswith("["):
        for item in json.loads(stripped):
            u = parse_monomial(item["generator"], n)
            spaces.append(StanleySpace(u, _parse_vars(",".join(item["freeVars"]), n)))
        return StanleyDecomposition(module, tuple(spaces))
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if ";" not in line:
            raise ParseError(f"line {lineno}: expected 'generator ; free variables'")
        u_text, z_text = line.split(";", 1)
        spaces.append(StanleySpace(parse_monomial(u_text.strip(), n), _parse_vars(z_text, n)))
    return StanleyDecomposition(module, tuple(spaces))
