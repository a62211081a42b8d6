"""Finite interactive systems over rectangular grids.

A finite interactive system is an automaton whose control is carried by
two kinds of memory: states flow north to south, one per column, and
classes flow west to east, one per row.  A transition

    (north, west, letter, east, south)

reads ``letter`` in a cell whose incoming state is ``north`` and whose
incoming class is ``west``, and emits ``south`` below and ``east`` to
the right.  A grid is accepted when every cell can be labelled by a
transition such that the top border uses initial states, the left
border initial classes, and the bottom and right borders are final.

Recognition propagates sets of frontiers cell by cell in row-major
order; a frontier remembers the south states already emitted in the
current row, the pending north states for the rest of the row, and the
class crossing the current cell border.  Border nondeterminism is
resolved lazily: a first-row cell draws its north state from the
initial states and a first-column cell draws its west class from the
initial classes when the cell is parsed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import FormatError, UnknownLetter, UnknownTransition
from .grids import Grid, check_letter
from . import grids


class Transition(NamedTuple):
    north: str
    west: str
    letter: str
    east: str
    south: str


@dataclass(frozen=True)
class FIS:
    """A finite interactive system.

    Declaration order of letters, states, classes, initial sets and
    transitions is preserved; every search in this package breaks ties
    by declaration order, so equal inputs give byte-equal outputs.
    """

    alphabet: tuple[str, ...]
    states: tuple[str, ...]
    classes: tuple[str, ...]
    transitions: tuple[Transition, ...]
    initial_states: tuple[str, ...]
    initial_classes: tuple[str, ...]
    final_states: tuple[str, ...]
    final_classes: tuple[str, ...]

    def __post_init__(self) -> None:
        for name in ("alphabet", "states", "classes", "initial_states",
                     "initial_classes", "final_states", "final_classes"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(
            self, "transitions",
            tuple(t if isinstance(t, Transition) else Transition(*t)
                  for t in self.transitions))


def validate(f: FIS) -> list[str]:
    """Diagnostics for a system; empty exactly when all invariants hold.

    Each diagnostic starts with a tag naming the violated invariant and
    quotes the offending element.
    """
    out: list[str] = []

    def check_names(kind: str, names: tuple[str, ...]) -> None:
        seen = set()
        for name in names:
            if not name or any(c.isspace() for c in name):
                out.append(f'Bad{kind} "{name}"')
            if name in seen:
                out.append(f'Duplicate{kind} "{name}"')
            seen.add(name)

    for a in f.alphabet:
        try:
            check_letter(a)
        except Exception:
            out.append(f'BadLetter "{a}"')
    seen_letters = set()
    for a in f.alphabet:
        if a in seen_letters:
            out.append(f'DuplicateLetter "{a}"')
        seen_letters.add(a)
    check_names("State", f.states)
    check_names("Class", f.classes)

    states, classes = set(f.states), set(f.classes)
    letters = set(f.alphabet)
    for role, names, declared, tag in (
        ("initial_states", f.initial_states, states, "UndeclaredState"),
        ("final_states", f.final_states, states, "UndeclaredState"),
        ("initial_classes", f.initial_classes, classes, "UndeclaredClass"),
        ("final_classes", f.final_classes, classes, "UndeclaredClass"),
    ):
        for name in names:
            if name not in declared:
                out.append(f'{tag} "{name}" in {role}')

    seen_trans = set()
    for t in f.transitions:
        if t.north not in states:
            out.append(f'UndeclaredState "{t.north}" in {t}')
        if t.south not in states:
            out.append(f'UndeclaredState "{t.south}" in {t}')
        if t.west not in classes:
            out.append(f'UndeclaredClass "{t.west}" in {t}')
        if t.east not in classes:
            out.append(f'UndeclaredClass "{t.east}" in {t}')
        if t.letter not in letters:
            out.append(f'UndeclaredLetter "{t.letter}" in {t}')
        if t in seen_trans:
            out.append(f"DuplicateTransition {t}")
        seen_trans.add(t)
    return out


def unused_elements(f: FIS) -> dict[str, tuple[str, ...]]:
    """Declared letters, states and classes no transition mentions.

    Unused elements are permitted; this is informational only and never
    affects recognition.
    """
    used_states = {t.north for t in f.transitions} | {t.south for t in f.transitions}
    used_classes = {t.west for t in f.transitions} | {t.east for t in f.transitions}
    used_letters = {t.letter for t in f.transitions}
    return {
        "letters": tuple(a for a in f.alphabet if a not in used_letters),
        "states": tuple(s for s in f.states if s not in used_states),
        "classes": tuple(c for c in f.classes if c not in used_classes),
    }


@dataclass(frozen=True)
class Scenario:
    """An accepted parse: one transition per cell plus the four borders.

    ``b_n`` and ``b_s`` hold one state per column, ``b_w`` and ``b_e``
    one class per row.
    """

    grid: Grid
    cell_runs: tuple[tuple[Transition, ...], ...]
    b_n: tuple[str, ...]
    b_w: tuple[str, ...]
    b_s: tuple[str, ...]
    b_e: tuple[str, ...]


def check_scenario(f: FIS, sc: Scenario) -> list[str]:
    """Replay a scenario against a system, independently of the search.

    Returns a list of problems; empty exactly when ``sc`` is a valid
    accepting scenario of ``f`` on ``sc.grid``.
    """
    out: list[str] = []
    g = sc.grid
    m, q = g.rows, g.cols
    if len(sc.cell_runs) != m or any(len(r) != q for r in sc.cell_runs):
        return [f"cell_runs shape is not {m}x{q}"]
    if len(sc.b_n) != q or len(sc.b_s) != q or len(sc.b_w) != m or len(sc.b_e) != m:
        return ["border lengths do not match the grid"]

    declared = set(f.transitions)
    for i in range(m):
        for j in range(q):
            t = sc.cell_runs[i][j]
            if t not in declared:
                out.append(f"cell ({i},{j}) uses undeclared transition {t}")
            if t.letter != g.cells[i][j]:
                out.append(f"cell ({i},{j}) letter {t.letter!r} != grid {g.cells[i][j]!r}")
            north = sc.b_n[j] if i == 0 else sc.cell_runs[i - 1][j].south
            if t.north != north:
                out.append(f"cell ({i},{j}) north {t.north!r} != incoming {north!r}")
            west = sc.b_w[i] if j == 0 else sc.cell_runs[i][j - 1].east
            if t.west != west:
                out.append(f"cell ({i},{j}) west {t.west!r} != incoming {west!r}")
    for j in range(q):
        if sc.b_s[j] != sc.cell_runs[m - 1][j].south:
            out.append(f"b_s[{j}] does not match the last row")
    for i in range(m):
        if sc.b_e[i] != sc.cell_runs[i][q - 1].east:
            out.append(f"b_e[{i}] does not match the last column")

    for j, s in enumerate(sc.b_n):
        if s not in f.initial_states:
            out.append(f'b_n[{j}]="{s}" is not an initial state')
    for i, c in enumerate(sc.b_w):
        if c not in f.initial_classes:
            out.append(f'b_w[{i}]="{c}" is not an initial class')
    for j, s in enumerate(sc.b_s):
        if s not in f.final_states:
            out.append(f'b_s[{j}]="{s}" is not a final state')
    for i, c in enumerate(sc.b_e):
        if c not in f.final_classes:
            out.append(f'b_e[{i}]="{c}" is not a final class')
    return out


def render_scenario(sc: Scenario) -> str:
    """Draw a scenario as interleaved state rows and class/letter rows.

    State rows carry the north border, the states between grid rows and
    the south border, each above/below its letter column.  Class rows
    carry the west border class, then letter and class alternating.
    """
    m, q = sc.grid.rows, sc.grid.cols
    nslots = 2 * q + 1
    lines: list[list[str]] = []
    for i in range(m + 1):
        srow = [""] * nslots
        for j in range(q):
            srow[2 * j + 1] = sc.b_n[j] if i == 0 else sc.cell_runs[i - 1][j].south
        lines.append(srow)
        if i < m:
            crow = [""] * nslots
            crow[0] = sc.b_w[i]
            for j in range(q):
                crow[2 * j + 1] = sc.grid.cells[i][j]
                crow[2 * j + 2] = sc.cell_runs[i][j].east
            lines.append(crow)
    widths = [max(len(line[k]) for line in lines) for k in range(nslots)]
    text = []
    for line in lines:
        text.append(" ".join(tok.ljust(w) for tok, w in zip(line, widths)).rstrip())
    return "\n".join(text) + "\n"


_FIS_KEYS = ("alphabet", "states", "classes", "initial_states",
             "initial_classes", "final_states", "final_classes")


def parse_fis(text: str) -> FIS:
    """Read a system from its text format.

    Lines are ``key: tokens``; ``trans:`` lines give one transition as
    five tokens, every other key lists names.  Lines starting with
    ``#`` are comments.  Unknown keys are errors.
    """
    fields: dict[str, list[str]] = {k: [] for k in _FIS_KEYS}
    transitions: list[Transition] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'key: ...'")
        key = key.strip()
        tokens = rest.split()
        if key == "trans":
            if len(tokens) != 5:
                raise FormatError(f"line {lineno}: trans needs 5 tokens")
            transitions.append(Transition(*tokens))
        elif key in fields:
            fields[key].extend(tokens)
        else:
            raise FormatError(f"line {lineno}: unknown key {key!r}")
    return FIS(
        alphabet=tuple(fields["alphabet"]),
        states=tuple(fields["states"]),
        classes=tuple(fields["classes"]),
        transitions=tuple(transitions),
        initial_states=tuple(fields["initial_states"]),
        initial_classes=tuple(fields["initial_classes"]),
        final_states=tuple(fields["final_states"]),
        final_classes=tuple(fields["final_classes"]),
    )


def format_fis(f: FIS) -> str:
    """Render a system in the text format accepted by :func:`parse_fis`."""
    for group in (f.alphabet, f.states, f.classes):
        for tok in group:
            if not tok or any(c.isspace() for c in tok):
                raise FormatError(f"token {tok!r} cannot be serialized")
    lines = []
    for key in _FIS_KEYS:
        lines.append((key + ": " + " ".join(getattr(f, key))).rstrip())
    for t in f.transitions:
        lines.append("trans: " + " ".join(t))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# the frontier engine

_START = (None, (), None, False)


class _Engine:
    """A system compiled to integer tables for frontier propagation.

    A frontier is ``(pending, souths, east, used)``:

    * ``pending`` -- remaining north states of the current row (the
      previous row's south states), or ``None`` in the first row where
      every cell may draw any initial state;
    * ``souths`` -- south states emitted so far in the current row;
    * ``east`` -- class entering the next cell, ``None`` at column 0;
    * ``used`` -- whether the tracked transition fired on this path.

    At the last column of a row, frontiers whose east class is not
    final are dropped (the full east border must be final) and the
    frontier rolls over to ``(souths, (), None, used)``.  After the
    last cell a frontier accepts when every pending state is final.
    """

    def __init__(self, f: FIS):
        self.fis = f
        letter_id: dict[str, int] = {}
        for a in f.alphabet:
            letter_id.setdefault(a, len(letter_id))
        state_id: dict[str, int] = {}
        for s in f.states:
            state_id.setdefault(s, len(state_id))
        class_id: dict[str, int] = {}
        for c in f.classes:
            class_id.setdefault(c, len(class_id))
        self.letter_id = letter_id
        self.state_id = state_id
        self.class_id = class_id
        self.letter_names = list(letter_id)
        self.state_names = list(state_id)
        self.class_names = list(class_id)

        keys: list[tuple[int, int, int, int, int]] = []
        self.t_names: list[Transition] = []
        seen: set[tuple[int, int, int, int, int]] = set()
        for t in f.transitions:
            try:
                key = (state_id[t.north], class_id[t.west], letter_id[t.letter],
                       class_id[t.east], state_id[t.south])
            except KeyError:
                continue  # mentions an undeclared name, can never fire
            if key in seen:
                continue  # duplicate declarations collapse set-wise
            seen.add(key)
            keys.append(key)
            self.t_names.append(t)
        self.t_east = [k[3] for k in keys]
        self.t_south = [k[4] for k in keys]
        self.t_key: dict[tuple[int, int, int, int, int], int] = {
            k: i for i, k in enumerate(keys)}
        self.by_nw: dict[tuple[int, int], list[int]] = {}
        self.by_nwl: dict[tuple[int, int, int], list[int]] = {}
        for ti, (n, w, l, _e, _s) in enumerate(keys):
            self.by_nw.setdefault((n, w), []).append(ti)
            self.by_nwl.setdefault((n, w, l), []).append(ti)

        def ordered_ids(names: Iterable[str], table: dict[str, int]) -> tuple[int, ...]:
            out: list[int] = []
            for name in names:
                i = table.get(name)
                if i is not None and i not in out:
                    out.append(i)
            return tuple(out)

        self.init_states = ordered_ids(f.initial_states, state_id)
        self.init_classes = ordered_ids(f.initial_classes, class_id)
        self.fin_states = frozenset(state_id[s] for s in set(f.final_states) & set(state_id))
        self.fin_classes = frozenset(class_id[c] for c in set(f.final_classes) & set(class_id))

    def grid_codes(self, g: Grid) -> list[list[int]]:
        table = self.letter_id
        codes = []
        for row in g.cells:
            crow = []
            for a in row:
                if a not in table:
                    raise UnknownLetter(f"letter {a!r} is not in the alphabet")
                crow.append(table[a])
            codes.append(crow)
        return codes

    def _succ(self, f, j: int, q: int, letter, track):
        """Successor frontiers of ``f`` at column ``j``, canonical order."""
        pending, souths, east, used = f
        norths = self.init_states if pending is None else (pending[0],)
        wests = self.init_classes if east is None else (east,)
        last = j == q - 1
        out = []
        for n in norths:
            for w in wests:
                if letter is None:
                    tis = self.by_nw.get((n, w), ())
                else:
                    tis = self.by_nwl.get((n, w, letter), ())
                for ti in tis:
                    e = self.t_east[ti]
                    if last and e not in self.fin_classes:
                        continue
                    u = used or ti == track
                    s2 = souths + (self.t_south[ti],)
                    if last:
                        nf = (s2, (), None, u)
                    else:
                        nf = (None if pending is None else pending[1:], s2, e, u)
                    out.append((nf, n, w, ti))
        return out

    def _accepts(self, f, track) -> bool:
        pending, souths, east, used = f
        return (east is None and souths == () and pending is not None
                and (track is None or used)
                and all(s in self.fin_states for s in pending))

    def run_fixed(self, codes: list[list[int]], track=None):
        """Forward pass over a fixed grid, recording back-pointers.

        ``layers[p]`` maps each frontier reachable before cell ``p`` to
        the first (canonical) ``(previous frontier, north, west,
        transition index)`` that produced it.
        """
        m, q = len(codes), len(codes[0])
        layers: list[dict] = [{_START: None}]
        for i in range(m):
            for j in range(q):
                letter = codes[i][j]
                nxt: dict = {}
                for f in layers[-1]:
                    for nf, n, w, ti in self._succ(f, j, q, letter, track):
                        if nf not in nxt:
                            nxt[nf] = (f, n, w, ti)
                layers.append(nxt)
        return layers

    def run_exist(self, m: int, q: int, track=None):
        """Forward pass with the letter chosen existentially per cell."""
        layers: list[dict] = [{_START: None}]
        for i in range(m):
            for j in range(q):
                nxt: dict = {}
                for f in layers[-1]:
                    for nf, _n, _w, _ti in self._succ(f, j, q, None, track):
                        if nf not in nxt:
                            nxt[nf] = None
                layers.append(nxt)
        return layers

    def _useful(self, layers, m: int, q: int, track):
        """Frontiers from which some letter choice still reaches acceptance."""
        n = m * q
        useful: list[set] = [set() for _ in range(n + 1)]
        useful[n] = {f for f in layers[n] if self._accepts(f, track)}
        for p in range(n - 1, -1, -1):
            j = p % q
            up = useful[p + 1]
            keep = useful[p]
            for f in layers[p]:
                for nf, _n, _w, _ti in self._succ(f, j, q, None, track):
                    if nf in up:
                        keep.add(f)
                        break
        return useful

    def iter_size(self, m: int, q: int, track=None) -> Iterator[Grid]:
        """Accepted m x q grids in row-major lexicographic letter order.

        Letters are chosen inside the propagation: a depth-first walk
        over cells extends the frontier set one letter at a time and
        only descends while some frontier can still reach acceptance,
        so each yielded prefix is live and no grid is tested wholesale.
        """
        n = m * q
        layers = self.run_exist(m, q, track)
        if not any(self._accepts(f, track) for f in layers[n]):
            return
        useful = self._useful(layers, m, q, track)
        if _START not in useful[0]:
            return
        letters = self.letter_names
        chosen: list[str] = []

        def rec(p: int, fset) -> Iterator[Grid]:
            if p == n:
                yield grids.grid(chosen[r * q:(r + 1) * q] for r in range(m))
                return
            j = p % q
            up = useful[p + 1]
            for li, name in enumerate(letters):
                ns = set()
                for f in fset:
                    for nf, _n, _w, _ti in self._succ(f, j, q, li, track):
                        if nf in up:
                            ns.add(nf)
                if ns:
                    chosen.append(name)
                    yield from rec(p + 1, ns)
                    chosen.pop()

        yield from rec(0, {_START})

    def scenario_from(self, g: Grid, layers, track) -> Scenario | None:
        """Rebuild the canonical scenario from a back-pointer pass."""
        m, q = g.rows, g.cols
        n = m * q
        acc = next((f for f in layers[n] if self._accepts(f, track)), None)
        if acc is None:
            return None
        choices: list[tuple[int, int, int]] = []
        f = acc
        for p in range(n, 0, -1):
            prev, nn, ww, ti = layers[p][f]
            choices.append((nn, ww, ti))
            f = prev
        choices.reverse()
        t_names = self.t_names
        cell_runs = tuple(
            tuple(t_names[choices[i * q + j][2]] for j in range(q))
            for i in range(m))
        b_n = tuple(self.state_names[choices[j][0]] for j in range(q))
        b_w = tuple(self.class_names[choices[i * q][1]] for i in range(m))
        b_s = tuple(cell_runs[m - 1][j].south for j in range(q))
        b_e = tuple(cell_runs[i][q - 1].east for i in range(m))
        return Scenario(grid=g, cell_runs=cell_runs, b_n=b_n, b_w=b_w, b_s=b_s, b_e=b_e)


def _transition_key(eng: _Engine, t: Transition) -> int:
    t = t if isinstance(t, Transition) else Transition(*t)
    try:
        key = (eng.state_id[t.north], eng.class_id[t.west], eng.letter_id[t.letter],
               eng.class_id[t.east], eng.state_id[t.south])
        return eng.t_key[key]
    except KeyError:
        raise UnknownTransition(f"transition {t} is not declared") from None


def _recognize(f: FIS, w: Grid, using: Transition | None) -> Scenario | None:
    eng = _Engine(f)
    track = _transition_key(eng, using) if using is not None else None
    codes = eng.grid_codes(w)
    layers = eng.run_fixed(codes, track)
    return eng.scenario_from(w, layers, track)


def recognize(f: FIS, w: Grid) -> Scenario | None:
    """The canonical accepting scenario of ``f`` on ``w``, or ``None``.

    Ties between scenarios are broken by declaration order of initial
    states, initial classes and transitions, so the result is stable.
    """
    return _recognize(f, w, None)


def recognize_with_transition(f: FIS, w: Grid, t: Transition) -> Scenario | None:
    """Like :func:`recognize` but only scenarios in which ``t`` fires."""
    return _recognize(f, w, t)


def _sizes(max_rows: int, max_cols: int) -> list[tuple[int, int]]:
    sizes = [(m, q)
             for m in range(1, max_rows + 1)
             for q in range(1, max_cols + 1)]
    sizes.sort(key=lambda mq: (mq[0] * mq[1], mq[0]))
    return sizes


def iter_accepted(f: FIS, max_rows: int, max_cols: int,
                  using: Transition | None = None) -> Iterator[Grid]:
    """Accepted grids within the bounds, in canonical order.

    Canonical order is area, then row count, then row-major letter
    order by alphabet declaration.  With ``using`` set, only grids that
    admit a scenario firing that transition are yielded.
    """
    eng = _Engine(f)
    track = _transition_key(eng, using) if using is not None else None
    for m, q in _sizes(max_rows, max_cols):
        yield from eng.iter_size(m, q, track)


def enumerate_language(f: FIS, max_rows: int, max_cols: int) -> list[Grid]:
    """All accepted grids within the bounds, in canonical order."""
    return list(iter_accepted(f, max_rows, max_cols))
