"""Post correspondence instances and their compilation to recognizers.

An instance is a pair of equal-length lists of non-empty words.  A
solution is a non-empty index sequence i_1..i_k with

    x_{i_1} ... x_{i_k}  ==  y_{i_1} ... y_{i_k}.

:func:`compile_pcp` builds a system whose language is non-empty exactly
when the instance has a solution: the accepted grids spell a solution
string on their first two rows and then reduce the two index streams to
nothing on rows of the marker letter ``$``.  :func:`compile_pcp_probe`
extends that system so that a single designated transition (the probe)
can fire in some accepting scenario exactly when a solution exists.
Because solvability is undecidable, emptiness and accessibility for
these systems are undecidable too; the bounded searches in
:mod:`fiskit.analysis` explore them at desk scale.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .errors import (
    FormatError,
    IndexOutOfRange,
    InvalidSolution,
    ReservedSymbolCollision,
)
from .fis import FIS, Transition
from .grids import Grid, check_letter, grid, h_compose, v_compose

MARKER = "$"


@dataclass(frozen=True)
class PcpInstance:
    """Word pairs (x[i], y[i]); letters are single characters.

    ``alphabet`` fixes the letter declaration order used by compiled
    systems; when omitted it is inferred as the sorted set of letters
    occurring in the words.
    """

    x: tuple[str, ...]
    y: tuple[str, ...]
    alphabet: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))
        if not self.x or len(self.x) != len(self.y):
            raise ValueError("need equally many x and y words, at least one pair")
        for word in self.x + self.y:
            if not word:
                raise ValueError("words must be non-empty")
            for ch in word:
                if ch == MARKER:
                    raise ReservedSymbolCollision(
                        f"the marker {MARKER!r} cannot occur in words")
                check_letter(ch)
        inferred = sorted({ch for word in self.x + self.y for ch in word})
        alphabet = tuple(self.alphabet) or tuple(inferred)
        if MARKER in alphabet:
            raise ReservedSymbolCollision(
                f"the marker {MARKER!r} cannot be an instance letter")
        missing = set(inferred) - set(alphabet)
        if missing:
            raise ValueError(f"alphabet is missing letters {sorted(missing)}")
        object.__setattr__(self, "alphabet", alphabet)

    @property
    def pairs(self) -> int:
        return len(self.x)


def check_solution(p: PcpInstance, indices) -> bool:
    """Whether the index sequence is a solution of ``p``."""
    indices = tuple(indices)
    for i in indices:
        if not 1 <= i <= p.pairs:
            raise IndexOutOfRange(f"index {i} outside 1..{p.pairs}")
    if not indices:
        return False
    xcat = "".join(p.x[i - 1] for i in indices)
    ycat = "".join(p.y[i - 1] for i in indices)
    return xcat == ycat


def solve_pcp(p: PcpInstance, max_k: int):
    """Shortest solution with at most ``max_k`` indices, or ``None``.

    Breadth-first search over index sequences; a sequence is extended
    only while one concatenation is a prefix of the other, and distinct
    sequences with the same unmatched overhang are merged keeping the
    first.  Among shortest solutions the lexicographically least index
    sequence is returned.
    """
    n = p.pairs
    # (indices, overhang, sign): sign +1 when the x side is ahead by
    # `overhang`, -1 when the y side is ahead, 0 only at the start
    level = [((), "", 0)]
    seen: set[tuple[str, int]] = set()
    for _ in range(max_k):
        nxt = []
        for indices, over, sign in level:
            for i in range(1, n + 1):
                # unmatched text of each side beyond the common prefix
                if sign >= 0:
                    s_x, s_y = over + p.x[i - 1], p.y[i - 1]
                else:
                    s_x, s_y = p.x[i - 1], over + p.y[i - 1]
                if len(s_x) >= len(s_y):
                    if not s_x.startswith(s_y):
                        continue
                    nover, nsign = s_x[len(s_y):], 1
                else:
                    if not s_y.startswith(s_x):
                        continue
                    nover, nsign = s_y[len(s_x):], -1
                cand = indices + (i,)
                if not nover:
                    return cand
                key = (nover, nsign)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((cand, nover, nsign))
        level = nxt
    return None


# -- state and class names of compiled systems ------------------------------

def _a(i: int, j: int) -> str:
    return f"a({i},{j})"


def _c(i: int, j: int) -> str:
    return f"c({i},{j})"


def _m(i: int, j: int, k: int) -> str:
    return f"M({i},{j},{k})"


def _indices(name: str) -> tuple[int, ...]:
    """The integer arguments of a rendered name like ``c(0,1)``."""
    open_ = name.index("(")
    return tuple(int(part) for part in name[open_ + 1:-1].split(","))


def compile_pcp(p: PcpInstance) -> FIS:
    """The recognizer whose language is non-empty iff ``p`` is solvable.

    Accepted grids have the shape

        x-concatenation   of a solution
        y-concatenation   (the same string)
        $ rows            one per solution index, plus optional extras

    The first row records which x word each column belongs to, the
    second row records the same for y words; the remaining rows consume
    the two index streams pair by pair, and any mismatch between them
    leaves a cell with no applicable transition.
    """
    n = p.pairs
    xs, ys = p.x, p.y

    states = ["s"]
    states += [_a(i, j) for i in range(1, n + 1) for j in range(1, len(xs[i - 1]) + 1)]
    states += [_c(i, j) for i in range(n + 1) for j in range(n + 1)]

    classes = ["A"]
    classes += [f"B({i},{j})" for i in range(1, n + 1)
                for j in range(1, len(xs[i - 1]))]
    classes += [f"C({i},{k})" for i in range(1, n + 1)
                for k in range(1, len(ys[i - 1]))]
    classes += [_m(i, j, k) for i in range(1, n + 1)
                for j in range(len(xs[i - 1]) + 1)
                for k in range(len(ys[i - 1]) + 1)]

    def b_cls(i: int, j: int) -> str:
        # word-boundary positions collapse to the shared class A
        return "A" if j in (0, len(xs[i - 1])) else f"B({i},{j})"

    def c_cls(i: int, k: int) -> str:
        return "A" if k in (0, len(ys[i - 1])) else f"C({i},{k})"

    trans: list[Transition] = []

    # first row: spell letter j of x word i
    for i in range(1, n + 1):
        for j in range(1, len(xs[i - 1]) + 1):
            trans.append(Transition(
                "s", b_cls(i, j - 1), xs[i - 1][j - 1], b_cls(i, j), _a(i, j)))

    # second row: spell letter k of y word i under letter g of x word j,
    # allowed only when the two letters agree
    for i in range(1, n + 1):
        for k in range(1, len(ys[i - 1]) + 1):
            for j in range(1, n + 1):
                for g in range(1, len(xs[j - 1]) + 1):
                    if xs[j - 1][g - 1] == ys[i - 1][k - 1]:
                        trans.append(Transition(
                            _a(j, g), c_cls(i, k - 1), ys[i - 1][k - 1],
                            c_cls(i, k), _c(j, i)))

    # marker cell where both index streams are already exhausted
    trans.append(Transition(_c(0, 0), "A", MARKER, "A", _c(0, 0)))

    # open the reduction of pair i: both streams reach word i together,
    # or only one stream has it while the other is exhausted
    for i in range(1, n + 1):
        trans.append(Transition(
            _c(i, i), "A", MARKER,
            _m(i, len(xs[i - 1]) - 1, len(ys[i - 1]) - 1), _c(0, 0)))
    for i in range(1, n + 1):
        trans.append(Transition(
            _c(i, 0), "A", MARKER,
            _m(i, len(xs[i - 1]) - 1, len(ys[i - 1])), _c(0, 0)))
    for i in range(1, n + 1):
        trans.append(Transition(
            _c(0, i), "A", MARKER,
            _m(i, len(xs[i - 1]), len(ys[i - 1]) - 1), _c(0, 0)))

    # carry a partially consumed pair eastwards; each side either copies
    # a zero, eats one more occurrence of word i, or skips a zero while
    # still loaded -- any other stream entry leaves the cell stuck
    def carry(i: int, j: int, k: int):
        if k == 0:
            return j, 0
        if j == i:
            return 0, k - 1
        if j == 0:
            return 0, k
        return None

    for i in range(1, n + 1):
        x_side = []
        for j1 in range(n + 1):
            for k1 in range(len(xs[i - 1]) + 1):
                got = carry(i, j1, k1)
                if got is not None:
                    x_side.append((j1, k1, *got))
        y_side = []
        for j2 in range(n + 1):
            for k2 in range(len(ys[i - 1]) + 1):
                got = carry(i, j2, k2)
                if got is not None:
                    y_side.append((j2, k2, *got))
        for (j1, k1, m1, r1), (j2, k2, m2, r2) in itertools.product(x_side, y_side):
            trans.append(Transition(
                _c(j1, j2), _m(i, k1, k2), MARKER, _m(i, r1, r2), _c(m1, m2)))

    deduped: list[Transition] = []
    seen: set[Transition] = set()
    for t in trans:
        if t not in seen:
            seen.add(t)
            deduped.append(t)

    return FIS(
        alphabet=p.alphabet + (MARKER,),
        states=tuple(states),
        classes=tuple(classes),
        transitions=tuple(deduped),
        initial_states=("s",),
        initial_classes=("A",),
        final_states=(_c(0, 0),),
        final_classes=("A",) + tuple(_m(i, 0, 0) for i in range(1, n + 1)),
    )


def probe_transition() -> Transition:
    """The designated transition of :func:`compile_pcp_probe`.

    It is accessible (fires in some accepting scenario) exactly when
    the compiled instance has a solution.
    """
    return Transition("s", "Q", MARKER, "T", "q")


def compile_pcp_probe(p: PcpInstance) -> FIS:
    """Extend :func:`compile_pcp` for accessibility questions.

    The extension accepts exactly the grids of the base system padded
    by one marker column and one marker row; the bottom-right cell of
    such a grid is parsed by the probe transition, and no other
    accepting scenario can fire it.
    """
    base = compile_pcp(p)
    n = p.pairs
    extra = [
        Transition("s", "A", MARKER, "T", "s"),
        *[Transition("s", _m(i, 0, 0), MARKER, "T", "s") for i in range(1, n + 1)],
        Transition(_c(0, 0), "A", MARKER, "Q", "q"),
        Transition(_c(0, 0), "Q", MARKER, "Q", "q"),
        probe_transition(),
    ]
    return FIS(
        alphabet=base.alphabet,
        states=base.states + ("q",),
        classes=base.classes + ("Q", "T"),
        transitions=base.transitions + tuple(extra),
        initial_states=base.initial_states,
        initial_classes=base.initial_classes,
        final_states=("q",),
        final_classes=("T",),
    )


def witness_from_solution(p: PcpInstance, indices) -> Grid:
    """The canonical accepted grid encoding a solution.

    Two rows spelling the solution string followed by one marker row
    per solution index.
    """
    indices = tuple(indices)
    if not check_solution(p, indices):
        raise InvalidSolution(f"{indices} does not solve the instance")
    word = "".join(p.x[i - 1] for i in indices)
    rows = [list(word), list(word)]
    rows += [[MARKER] * len(word) for _ in indices]
    return grid(rows)


def probe_witness(p: PcpInstance, indices) -> Grid:
    """The witness grid on which the probe transition fires.

    The base witness padded by one marker column on the right and one
    marker row at the bottom; the probe parses the bottom-right cell.
    """
    base = witness_from_solution(p, indices)
    padded = h_compose(base, grid([[MARKER]] * base.rows))
    return v_compose(padded, grid([[MARKER] * padded.cols]))


class TransKind(Enum):
    """What a compiled transition does, recoverable from its shape."""

    X_SPELL = "x-spell"        # first row, spells a letter of an x word
    Y_SPELL = "y-spell"        # second row, spells a letter of a y word
    PAD = "pad"                # marker cell with both streams exhausted
    OPEN_BOTH = "open-both"    # both streams start pair i together
    OPEN_X = "open-x"          # x stream starts pair i, y stream exhausted
    OPEN_Y = "open-y"          # y stream starts pair i, x stream exhausted
    CARRY = "carry"            # moves a partially consumed pair eastwards


def classify_transition(t: Transition) -> TransKind:
    """Classify a transition of a :func:`compile_pcp` system."""
    if t.north == "s" and t.letter != MARKER:
        return TransKind.X_SPELL
    if t.north.startswith("a("):
        return TransKind.Y_SPELL
    if t.west.startswith("M("):
        return TransKind.CARRY
    if t.west == "A" and t.letter == MARKER and t.north.startswith("c("):
        i, j = _indices(t.north)
        if i == j == 0:
            return TransKind.PAD
        if i == j:
            return TransKind.OPEN_BOTH
        if j == 0:
            return TransKind.OPEN_X
        if i == 0:
            return TransKind.OPEN_Y
    raise ValueError(f"not a compiled-shape transition: {t}")


def parse_pcp(text: str) -> PcpInstance:
    """Read an instance: one ``x y`` pair per line, optional leading
    ``alphabet:`` line fixing the letter order."""
    alphabet: tuple[str, ...] = ()
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("alphabet:"):
            if pairs or alphabet:
                raise FormatError(f"line {lineno}: alphabet must come first")
            alphabet = tuple(line.partition(":")[2].split())
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected 'x y', got {line!r}")
        pairs.append((tokens[0], tokens[1]))
    if not pairs:
        raise FormatError("no word pairs found")
    try:
        return PcpInstance(
            x=tuple(x for x, _ in pairs),
            y=tuple(y for _, y in pairs),
            alphabet=alphabet,
        )
    except (ValueError, ReservedSymbolCollision) as exc:
        raise FormatError(str(exc)) from exc


def format_pcp(p: PcpInstance) -> str:
    """Render an instance in the text format of :func:`parse_pcp`."""
    lines = ["alphabet: " + " ".join(p.alphabet)]
    lines += [f"{x} {y}" for x, y in zip(p.x, p.y)]
    return "\n".join(lines) + "\n"
