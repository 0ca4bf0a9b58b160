"""Signed argument strings for multiple zeta values and Euler sums.

The text grammar (also the CLI argument format):

    spec     ::= item (',' item)*  |  ''
    item     ::= INT | '{' INT (',' INT)* '}' '^' UINT
    INT      ::= '-'? [1-9][0-9]*

A leading '-' marks a barred (alternating) argument.  A single braced
group with a repetition exponent may appear as the last item.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class SignedArg:
    magnitude: int
    barred: bool = False

    def __post_init__(self):
        if self.magnitude < 1:
            raise DomainError("argument magnitude must be >= 1")

    def __str__(self):
        return f"-{self.magnitude}" if self.barred else str(self.magnitude)


@dataclass(frozen=True)
class Composition:
    args: tuple[SignedArg, ...] = ()

    @classmethod
    def of(cls, *values: int) -> "Composition":
        """Build from signed integers; negative means barred."""
        return cls(tuple(SignedArg(abs(v), v < 0) for v in values))

    @property
    def depth(self) -> int:
        return len(self.args)

    @property
    def weight(self) -> int:
        return sum(a.magnitude for a in self.args)

    def __iter__(self):
        return iter(self.args)

    def __add__(self, other: "Composition") -> "Composition":
        return Composition(self.args + other.args)

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class PeriodicSpec:
    prefix: Composition
    period: Composition
    reps: int = 0

    def expansion(self) -> Composition:
        out = self.prefix
        for _ in range(self.reps):
            out = out + self.period
        return out


_TOKEN = re.compile(r"\s*(-?\d+|[{}^,])")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


def _parse_int(tok: str, pos: int) -> SignedArg:
    v = int(tok)
    if v == 0:
        raise DomainError("argument 0 is not allowed")
    return SignedArg(abs(v), v < 0)


def parse(text: str) -> PeriodicSpec:
    """Parse an argument string into prefix + repeated period."""
    tokens = _tokenize(text)
    if not tokens:
        return PeriodicSpec(Composition(), Composition(), 0)
    prefix: list[SignedArg] = []
    i = 0
    n = len(tokens)
    while i < n:
        tok, pos = tokens[i]
        if tok == "{":
            period: list[SignedArg] = []
            i += 1
            expect_int = True
            while i < n and tokens[i][0] != "}":
                tok, pos = tokens[i]
                if expect_int:
                    if tok in "{^,":
                        raise ParseError("expected integer inside braces", pos)
                    period.append(_parse_int(tok, pos))
                else:
                    if tok != ",":
                        raise ParseError("expected ',' inside braces", pos)
                i += 1
                expect_int = not expect_int
            if i >= n:
                raise ParseError("unterminated '{'", pos)
            if not period:
                raise ParseError("empty braced group", pos)
            i += 1  # consume '}'
            if i >= n or tokens[i][0] != "^":
                p = tokens[i][1] if i < n else len(tokens)
                raise ParseError("braced group requires '^' exponent", p)
            i += 1
            if i >= n or not tokens[i][0].lstrip("-").isdigit():
                raise ParseError("missing repetition count after '^'", pos)
            reps = int(tokens[i][0])
            if reps < 0:
                raise ParseError("repetition count must be non-negative", tokens[i][1])
            i += 1
            if i < n:
                raise ParseError("braced group must be the last item", tokens[i][1])
            return PeriodicSpec(
                Composition(tuple(prefix)), Composition(tuple(period)), reps
            )
        if tok in "}^,":
            raise ParseError(f"unexpected {tok!r}", pos)
        prefix.append(_parse_int(tok, pos))
        i += 1
        if i < n:
            tok, pos = tokens[i]
            if tok != ",":
                raise ParseError("expected ','", pos)
            i += 1
            if i >= n:
                raise ParseError("trailing ','", pos)
    return PeriodicSpec(Composition(tuple(prefix)), Composition(), 0)


def render(comp: Composition) -> str:
    """Flat comma-separated canonical form; barred arguments as '-k'."""
    return ",".join(str(a) for a in comp.args)


def is_convergent(comp: Composition, at_x_equals_one: bool) -> bool:
    """Convergence of the defining nested sum (s1 > 1 or a barred head)."""
    if not at_x_equals_one or comp.depth == 0:
        return True
    head = comp.args[0]
    return head.barred or head.magnitude > 1


def dual(comp: Composition) -> Composition:
    """Classical MZV duality via binary-word reverse-complement.

    Each argument s maps to the word 0^(s-1) 1; the dual word is the
    reversed complement.  Defined for admissible unbarred compositions.
    """
    if any(a.barred for a in comp.args):
        raise DomainError("duality is defined for unbarred compositions only")
    if comp.depth == 0:
        return comp
    if comp.args[0].magnitude < 2:
        raise DomainError("duality requires an admissible composition (s1 >= 2)")
    word = []
    for a in comp.args:
        word.extend([0] * (a.magnitude - 1) + [1])
    word = [1 - b for b in reversed(word)]
    out = []
    run = 0
    for b in word:
        run += 1
        if b == 1:
            out.append(SignedArg(run))
            run = 0
    return Composition(tuple(out))
