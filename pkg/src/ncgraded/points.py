"""Point modules over k<u, v, w>/(u^2, v^2, w^2).

Points of P^2 use the coordinates (u, v, w).  The locus uvw = 0 is the union
of the lines U (u = 0), V (v = 0) and W (w = 0).  A point sequence p_0, p_1,
... records how u, v, w move e_n to a multiple of e_{n+1}.

Two independent routes decide whether a finite sequence can occur:

* the successor rule (``successors``), stated in terms of lines and points;
* the module oracle (``module_oracle``), which builds the truncated module
  with the given actions and checks the relations, cyclicity and that the
  last point admits a further step.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotNormalWord, OffTriangle
from .exactnum import Echelon, Eis
from .monomial import MONO_A, normal_words

LETTERS = "uvw"
LINE_NAMES = ("U", "V", "W")


@dataclass(frozen=True)
class ProjPoint:
    """Point of P^2 with its first nonzero coordinate scaled to 1."""

    coords: tuple[Eis, Eis, Eis]

    def __init__(self, *coords):
        if len(coords) == 1 and not isinstance(coords[0], (int, Eis)):
            coords = tuple(coords[0])
        vals = [Eis.coerce(x) for x in coords]
        if len(vals) != 3:
            raise ValueError("a point of P^2 has three coordinates")
        lead = next((x for x in vals if x), None)
        if lead is None:
            raise ValueError("(0, 0, 0) is not a projective point")
        object.__setattr__(self, "coords", tuple(x / lead for x in vals))

    def __getitem__(self, i: int) -> Eis:
        return self.coords[i]

    def zero_set(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.coords) if not x)

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [str(x) for x in self.coords]


def intersection_point(i: int) -> ProjPoint:
    """The point where exactly coordinate i is nonzero."""
    return ProjPoint(*(int(j == i) for j in range(3)))


INTERSECTION_POINTS = tuple(intersection_point(i) for i in range(3))


class PointKind(enum.Enum):
    INTERSECTION = "IntersectionPoint"
    GENERIC_ON_LINE = "GenericOnLine"
    OFF_E = "OffE"


@dataclass(frozen=True)
class PointClass:
    kind: PointKind
    lines: tuple[str, ...] = ()

    def __str__(self):
        if self.lines:
            return f"{self.kind.value}({', '.join(self.lines)})"
        return self.kind.value


def classify_point(p: ProjPoint) -> PointClass:
    zeros = p.zero_set()
    lines = tuple(LINE_NAMES[i] for i in zeros)
    if len(zeros) == 2:
        return PointClass(PointKind.INTERSECTION, lines)
    if len(zeros) == 1:
        return PointClass(PointKind.GENERIC_ON_LINE, lines)
    return PointClass(PointKind.OFF_E)


@dataclass(frozen=True)
class Successors:
    """Either a whole line of E (``line`` set) or a single point."""

    line: int | None = None
    point: ProjPoint | None = None

    def contains(self, q: ProjPoint) -> bool:
        if self.line is not None:
            return not q[self.line]
        return q == self.point

    def __str__(self):
        if self.line is not None:
            return f"line {LINE_NAMES[self.line]}"
        return str(self.point)


def successors(p: ProjPoint) -> Successors:
    """Where the next point of a point sequence may lie after ``p``."""
    zeros = p.zero_set()
    if len(zeros) == 2:
        # the only nonzero coordinate names the opposite line
        (live,) = (i for i in range(3) if i not in zeros)
        return Successors(line=live)
    if len(zeros) == 1:
        return Successors(point=intersection_point(zeros[0]))
    raise OffTriangle(f"{p} is not on uvw = 0; no point module passes through it")


def _rule_ok(seq: Sequence[ProjPoint]) -> bool:
    for p in seq:
        if classify_point(p).kind is PointKind.OFF_E:
            return False
    return all(successors(p).contains(q) for p, q in zip(seq, seq[1:]))


class TruncatedPointModule:
    """Module k e_0 + ... + k e_{n+1}; ``e_i . a = action[i][a] e_{i+1}``.

    The top basis vector is killed by every generator.
    """

    def __init__(self, action: Sequence[Sequence]):
        rows = tuple(tuple(Eis.coerce(x) for x in row) for row in action)
        if any(len(r) != 3 for r in rows):
            raise ValueError("each level needs three coefficients (u, v, w)")
        self.action = rows

    @classmethod
    def from_sequence(cls, seq: Sequence[ProjPoint]) -> "TruncatedPointModule":
        return cls([p.coords for p in seq])

    @property
    def length(self) -> int:
        return len(self.action) + 1

    def point_sequence(self) -> list[ProjPoint]:
        return [ProjPoint(*row) for row in self.action]

    def action_matrix(self, letter: int) -> list[list[Eis]]:
        n = self.length
        mat = [[Eis(0)] * n for _ in range(n)]
        for i, row in enumerate(self.action):
            mat[i][i + 1] = row[letter]
        return mat

    def act(self, vec: Sequence, word: Iterable[int]) -> list[Eis]:
        """Row vector times the action matrices of the letters of ``word``.

        The matrices are superdiagonal, so the product is done sparsely.
        """
        n = self.length
        cur = {i: Eis.coerce(x) for i, x in enumerate(vec) if x}
        for a in word:
            nxt = {}
            for i, x in cur.items():
                if i + 1 < n:
                    y = x * self.action[i][a]
                    if y:
                        nxt[i + 1] = y
            cur = nxt
            if not cur:
                break
        return [cur.get(i, Eis(0)) for i in range(n)]

    def evaluate(self, word: Sequence[int]) -> Eis:
        """Coefficient c in ``e_0 . word = c e_len(word)`` (zero past the top)."""
        if len(word) >= self.length:
            return Eis(0)
        c = Eis(1)
        for i, a in enumerate(word):
            c = c * self.action[i][a]
            if not c:
                break
        return c

    def annihilates(self, word: Sequence[int]) -> bool:
        """True when every basis vector is killed by ``word``."""
        n = self.length
        for start in range(n):
            vec = [Eis(int(i == start)) for i in range(n)]
            if any(self.act(vec, word)):
                return False
        return True

    def respects_relations(self) -> bool:
        """u^2, v^2, w^2 act as zero: consecutive levels never share a live letter."""
        return all(not (a[j] * b[j]) for a, b in zip(self.action, self.action[1:]) for j in range(3))


def module_oracle(seq: Sequence[ProjPoint]) -> bool:
    """Decide a point sequence by building its truncated module."""
    if not seq:
        return True
    mod = TruncatedPointModule.from_sequence(seq)
    if any(not any(row) for row in mod.action):
        return False
    if not mod.respects_relations():
        return False
    # cyclic: e_0 . A_k is nonzero at every level up to the top
    frontier = [[Eis(int(i == 0)) for i in range(mod.length)]]
    for _ in range(len(seq)):
        step = Echelon()
        nxt = []
        for vec in frontier:
            for a in range(3):
                out = mod.act(vec, [a])
                if step.add({i: x for i, x in enumerate(out) if x}):
                    nxt.append(out)
        if not nxt:
            return False
        frontier = nxt
    # extendable: a nonzero next level q with last[j] * q[j] = 0 exists
    return any(not x for x in seq[-1].coords)


def validate_sequence(seq: Sequence[ProjPoint], cross_check: bool = True) -> bool:
    ok = _rule_ok(seq)
    if cross_check:
        oracle = module_oracle(seq)
        if oracle != ok:
            raise AssertionError(f"successor rule and module oracle disagree on {[str(p) for p in seq]}")
    return ok


def special_sequences(n: int) -> list[tuple[ProjPoint, ...]]:
    """All sequences p_0..p_n of intersection points allowed by the successor rule."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    seqs = [(p,) for p in INTERSECTION_POINTS]
    for _ in range(n):
        seqs = [s + (q,) for s in seqs for q in INTERSECTION_POINTS if successors(s[-1]).contains(q)]
    return seqs


def _word(s) -> tuple[int, ...]:
    if isinstance(s, str):
        try:
            return tuple(LETTERS.index(ch) for ch in s)
        except ValueError:
            raise NotNormalWord(f"{s!r} uses letters outside u, v, w") from None
    return tuple(s)


def special_module_for_word(s) -> TruncatedPointModule:
    """Module with e_i . a = e_{i+1} exactly when a is the i-th letter of s."""
    w = _word(s)
    if not w:
        raise NotNormalWord("the word must have length at least 1")
    if any(a not in (0, 1, 2) for a in w):
        raise NotNormalWord(f"{s!r} uses letters outside u, v, w")
    if any(a == b for a, b in zip(w, w[1:])):
        raise NotNormalWord(f"{s!r} has a repeated adjacent letter")
    return TruncatedPointModule([[int(a == j) for j in range(3)] for a in w])


def annihilator_degree(n: int, words: Sequence | None = None) -> int:
    """Dimension of the common kernel of A_n -> top degree over special modules.

    By default the modules are those of all special sequences of length n;
    ``words`` restricts the family to the modules of the given words.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if words is None:
        modules = [TruncatedPointModule.from_sequence(s) for s in special_sequences(n - 1)]
    else:
        modules = [special_module_for_word(w) for w in words]
    basis = normal_words(MONO_A, n)
    # dual picture: the kernel is the annihilator of the span of functionals
    span = Echelon()
    for mod in modules:
        values = ((w, mod.evaluate(w)) for w in basis)
        span.add({w: c for w, c in values if c})
    return len(basis) - span.rank


def word_text(w: Sequence[int]) -> str:
    return "".join(LETTERS[a] for a in w)


def successor_automaton_dot(name: str = "successors") -> str:
    """Three intersection-point states and three line states."""
    lines = [f"digraph {name} {{"]
    for i, p in enumerate(INTERSECTION_POINTS):
        lines.append(f'  p{i} [label="{p}", shape=circle];')
    for i, ln in enumerate(LINE_NAMES):
        lines.append(f'  L{i} [label="generic on {ln}", shape=box];')
    for i in range(3):
        # intersection point e_i: next point anywhere on the line where coordinate i vanishes
        for j in range(3):
            if j != i:
                lines.append(f'  p{i} -> p{j} [label="on {LINE_NAMES[i]}"];')
        lines.append(f'  p{i} -> L{i} [label="on {LINE_NAMES[i]}"];')
        lines.append(f'  L{i} -> p{i} [label="opposite point"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def special_sequences_json(n: int) -> dict:
    seqs = special_sequences(n)
    return {
        "n": n,
        "count": len(seqs),
        "sequences": [[p.to_json() for p in s] for s in seqs],
    }
