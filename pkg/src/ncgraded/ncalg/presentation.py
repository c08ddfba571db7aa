"""Graded presentations and their UTF-8 text format.

Format::

    # comment
    gens: u v w
    rel: u*u
    rel: u*v - (1/2 + 3*w)*v*u

A term is ``[coef*]gen(*gen)*`` where ``gen^k`` abbreviates k factors.
A coefficient is ``p`` or ``p/q`` or a parenthesised scalar expression, in
which ``w`` always denotes the cube root of unity.  Bare ``w`` / ``w^2`` are
accepted as coefficients only when no generator is named ``w``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..errors import (
    InhomogeneousRelation,
    PresentationSyntaxError,
    ScalarParseError,
    UnknownGenerator,
)
from ..exactnum import Eis, format_scalar, parse_scalar
from .poly import NCPoly

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class Presentation:
    generator_names: tuple[str, ...]
    relations: tuple[NCPoly, ...] = ()
    generator_degrees: tuple[int, ...] = field(default=())

    def __post_init__(self):
        names = tuple(self.generator_names)
        object.__setattr__(self, "generator_names", names)
        object.__setattr__(self, "relations", tuple(r for r in self.relations if r))
        degrees = tuple(self.generator_degrees) or (1,) * len(names)
        object.__setattr__(self, "generator_degrees", degrees)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        if len(degrees) != len(names) or any(d < 1 for d in degrees):
            raise ValueError("one positive degree per generator required")
        for name in names:
            if not _IDENT.fullmatch(name):
                raise ValueError(f"invalid generator name {name!r}")
        for rel in self.relations:
            if not rel.is_homogeneous():
                raise InhomogeneousRelation(f"relation {format_poly(rel, names)} is not homogeneous")
            if rel.max_generator() >= len(names):
                raise UnknownGenerator(f"relation uses generator index {rel.max_generator()}")

    @classmethod
    def free(cls, names: Sequence[str]) -> "Presentation":
        return cls(tuple(names), ())

    @property
    def ngens(self) -> int:
        return len(self.generator_names)

    def index(self, name: str) -> int:
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise UnknownGenerator(f"unknown generator {name!r}") from None

    def gen(self, name: str) -> NCPoly:
        return NCPoly.gen(self.index(name))

    def word(self, text: str) -> tuple[int, ...]:
        """Word from a string of single-letter generator names, e.g. ``"uvw"``."""
        return tuple(self.index(ch) for ch in text)

    @property
    def relation_degrees(self) -> tuple[int, ...]:
        return tuple(r.degree for r in self.relations)

    @property
    def relation_degree(self) -> int | None:
        """Common relation degree, or None when there are none or they differ."""
        ds = set(self.relation_degrees)
        return ds.pop() if len(ds) == 1 else None

    def is_quadratic(self) -> bool:
        return all(d == 2 for d in self.relation_degrees)

    def is_monomial(self) -> bool:
        return all(r.is_monomial() for r in self.relations)

    def with_relations(self, relations: Sequence[NCPoly]) -> "Presentation":
        return Presentation(self.generator_names, tuple(relations), self.generator_degrees)

    def to_text(self) -> str:
        return serialize_presentation(self)

    def __str__(self):
        return self.to_text()


# ---------------------------------------------------------------------------
# serialisation
# ---------------------------------------------------------------------------

def _format_word(word, names) -> str:
    if not word:
        return "1"
    return "*".join(names[i] if names else f"g{i}" for i in word)


def format_poly(p: NCPoly, names=None) -> str:
    if not p:
        return "0"
    out = []
    for word, coef in p:
        sign = "+"
        if coef.is_rational() and coef.re < 0:
            sign, coef = "-", -coef
        w = _format_word(word, names)
        if coef == 1:
            body = w
        elif not word:
            body = format_scalar(coef)
        else:
            body = f"{format_scalar(coef)}*{w}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def serialize_presentation(p: Presentation) -> str:
    lines = ["gens: " + " ".join(p.generator_names)]
    for rel in p.relations:
        lines.append("rel: " + format_poly(rel, p.generator_names))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOK = re.compile(r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>\d+)|(?P<sym>[-+*/^()]))")


class _RelParser:
    def __init__(self, text: str, names: Sequence[str], line: int, col0: int):
        self.text = text
        self.names = list(names)
        self.line = line
        self.col0 = col0
        self.tokens = self._tokenize()
        self.i = 0

    def error(self, msg, pos=None):
        if pos is None:
            pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        return PresentationSyntaxError(msg, self.line, self.col0 + pos + 1)

    def _tokenize(self):
        toks = []
        pos = 0
        while pos < len(self.text):
            if not self.text[pos:].strip():
                break
            m = _TOK.match(self.text, pos)
            if not m:
                lead = len(self.text[pos:]) - len(self.text[pos:].lstrip())
                raise self.error(f"unexpected character {self.text[pos + lead]!r}", pos + lead)
            kind = m.lastgroup
            toks.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        return toks

    def peek(self, k=0):
        j = self.i + k
        return self.tokens[j] if j < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None):
        kind, val, pos = self.peek()
        if kind is None or (value is not None and val != value):
            raise self.error(f"expected {value!r}" if value else "unexpected end of relation")
        self.i += 1
        return kind, val, pos

    def parse(self) -> NCPoly:
        if not self.tokens:
            raise self.error("empty relation")
        total = NCPoly()
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        total = total + self.term() * sign
        while self.peek()[0] is not None:
            kind, val, _ = self.peek()
            if val not in ("+", "-"):
                raise self.error(f"expected '+' or '-' but found {val!r}")
            self.take()
            t = self.term()
            total = total + t if val == "+" else total - t
        return total

    def coefficient(self) -> Eis | None:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            num = int(val)
            if self.peek()[1] == "/":
                self.take()
                k2, v2, p2 = self.peek()
                if k2 != "num":
                    raise self.error("expected denominator")
                self.take()
                if int(v2) == 0:
                    raise self.error("zero denominator", p2)
                return Eis(Fraction(num, int(v2)))
            return Eis(num)
        if val == "(":
            depth, j = 0, self.i
            while j < len(self.tokens):
                if self.tokens[j][1] == "(":
                    depth += 1
                elif self.tokens[j][1] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            else:
                raise self.error("unbalanced parenthesis", pos)
            end = self.tokens[j][2]
            inner = self.text[pos + 1:end]
            try:
                value = parse_scalar(inner)
            except ScalarParseError as exc:
                off = (exc.position or 0) + pos + 1
                raise self.error(f"bad coefficient: {exc.args[0]}", off) from None
            self.i = j + 1
            return value
        if kind == "ident" and val == "w" and "w" not in self.names:
            self.take()
            if self.peek()[1] == "^":
                self.take()
                k2, v2, _ = self.peek()
                if k2 != "num":
                    raise self.error("expected exponent")
                self.take()
                return Eis(0, 1) ** int(v2)
            return Eis(0, 1)
        return None

    def generator_power(self) -> list[int]:
        kind, val, pos = self.peek()
        if kind != "ident":
            raise self.error("expected a generator")
        if val not in self.names:
            raise UnknownGenerator(f"unknown generator {val!r} on line {self.line}, column {self.col0 + pos + 1}")
        self.take()
        idx = self.names.index(val)
        if self.peek()[1] == "^":
            self.take()
            k2, v2, _ = self.peek()
            if k2 != "num":
                raise self.error("expected exponent")
            self.take()
            return [idx] * int(v2)
        return [idx]

    def term(self) -> NCPoly:
        coef = Eis(1)
        word: list[int] = []
        while True:
            c = self.coefficient()
            if c is not None:
                if word:
                    raise self.error("coefficients must precede generators")
                coef = coef * c
            else:
                word.extend(self.generator_power())
            if self.peek()[1] != "*":
                break
            self.take("*")
        return NCPoly({tuple(word): coef})


def parse_relation(text: str, names: Sequence[str], line: int = 1, col0: int = 0) -> NCPoly:
    return _RelParser(text, names, line, col0).parse()


def parse_presentation(text: str) -> Presentation:
    """Parse the text format described in the module docstring."""
    names: list[str] | None = None
    relations: list[NCPoly] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        col0 = len(key) + 1
        key = key.strip()
        if not sep:
            raise PresentationSyntaxError("expected 'gens:' or 'rel:'", lineno, 1)
        if key == "gens":
            if names is not None:
                raise PresentationSyntaxError("duplicate 'gens:' line", lineno, 1)
            names = rest.split()
            if not names:
                raise PresentationSyntaxError("no generators declared", lineno, col0 + 1)
            seen = set()
            for name in names:
                if not _IDENT.fullmatch(name):
                    raise PresentationSyntaxError(f"invalid generator name {name!r}", lineno, col0 + rest.index(name) + 1)
                if name in seen:
                    raise PresentationSyntaxError(f"duplicate generator {name!r}", lineno, col0 + 1)
                seen.add(name)
        elif key == "rel":
            if names is None:
                raise PresentationSyntaxError("'rel:' before 'gens:'", lineno, 1)
            rel = parse_relation(rest, names, lineno, col0)
            if not rel.is_homogeneous():
                raise InhomogeneousRelation(f"relation on line {lineno} is not homogeneous")
            relations.append(rel)
        else:
            raise PresentationSyntaxError(f"unknown directive {key!r}", lineno, 1)
    if names is None:
        raise PresentationSyntaxError("missing 'gens:' line", 1, 1)
    return Presentation(tuple(names), tuple(relations))
