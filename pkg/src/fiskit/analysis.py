"""Bounded searches and structural examination of reduction scenarios.

Emptiness and accessibility of a transition are undecidable for these
systems, so the procedures here are bounded surrogates: they search all
grid sizes up to given limits, deterministically, and report what they
find.  For systems produced by :func:`fiskit.pcp.compile_pcp` the found
scenarios have a rigid shape (two rows spelling a word equation, then
marker rows reducing it); :func:`structural_check` verifies that shape
claim by claim and :func:`finiteness_evidence` confirms that a found
witness pumps vertically, so a nonempty language is infinite.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NotAReductionFis, NotReductionScenario
from .fis import (
    FIS,
    Scenario,
    Transition,
    check_scenario,
    iter_accepted,
    recognize,
    recognize_with_transition,
)
from .grids import Grid, grid, v_compose
from .pcp import MARKER, PcpInstance, TransKind, classify_transition, compile_pcp


@dataclass(frozen=True)
class SearchBounds:
    """Inclusive limits on grid rows and columns for bounded searches."""

    max_rows: int
    max_cols: int

    def __post_init__(self) -> None:
        if self.max_rows < 1 or self.max_cols < 1:
            raise ValueError("bounds must be at least 1x1")


def bounded_emptiness(f: FIS, b: SearchBounds) -> tuple[Grid, Scenario] | None:
    """The canonically first accepted grid within bounds, with its
    scenario, or ``None`` when the language is empty within bounds.

    Canonical order: smallest area, then fewest rows, then row-major
    letters by alphabet declaration order.  Letters are chosen inside
    frontier propagation, so grids are never enumerated one by one.
    """
    for w in iter_accepted(f, b.max_rows, b.max_cols):
        return w, recognize(f, w)
    return None


def bounded_accessibility(f: FIS, t: Transition,
                          b: SearchBounds) -> tuple[Grid, Scenario] | None:
    """The canonically first accepted grid within bounds whose scenario
    uses ``t``, with such a scenario, or ``None``."""
    for w in iter_accepted(f, b.max_rows, b.max_cols, using=t):
        return w, recognize_with_transition(f, w, t)
    return None


# ---------------------------------------------------------------------------
# finiteness evidence

@dataclass(frozen=True)
class FinitenessReport:
    """Outcome of the witness-and-pump probe behind :func:`finiteness_evidence`."""

    bounds: SearchBounds
    witness: Grid | None
    pumped: Grid | None
    pumped_accepted: bool | None

    @property
    def empty_within_bounds(self) -> bool:
        return self.witness is None

    @property
    def verdict(self) -> str:
        if self.witness is None:
            return "empty within bounds"
        if self.pumped_accepted:
            return "nonempty; a padding row extends every witness, so the language is infinite"
        return "nonempty, but the padded witness was rejected"


def _is_reduction_fis(f: FIS) -> bool:
    # the shape compile_pcp guarantees and vertical padding relies on
    pad = Transition("c(0,0)", "A", MARKER, "A", "c(0,0)")
    def settled_marker(name: str) -> bool:
        parsed = _parse_m(name)
        return parsed is not None and parsed[1:] == (0, 0)
    return (
        f.initial_states == ("s",)
        and f.initial_classes == ("A",)
        and f.final_states == ("c(0,0)",)
        and len(f.final_classes) >= 1
        and f.final_classes[0] == "A"
        and all(settled_marker(c) for c in f.final_classes[1:])
        and pad in f.transitions
    )


def finiteness_evidence(f_s: FIS, b: SearchBounds) -> FinitenessReport:
    """Search for a witness and confirm it extends by one padding row.

    Only systems with the compiled-reduction shape support the padding
    law; anything else raises :class:`NotAReductionFis`.
    """
    if not _is_reduction_fis(f_s):
        raise NotAReductionFis(
            "vertical padding is only sound for compiled reduction systems")
    found = bounded_emptiness(f_s, b)
    if found is None:
        return FinitenessReport(b, None, None, None)
    w, _ = found
    pumped = v_compose(w, grid([MARKER * w.cols]))
    accepted = recognize(f_s, pumped) is not None
    return FinitenessReport(b, w, pumped, accepted)


def format_finiteness_report(rep: FinitenessReport) -> str:
    lines = [f"bounds: {rep.bounds.max_rows}x{rep.bounds.max_cols}"]
    if rep.witness is None:
        lines.append("witness: none")
    else:
        lines.append(f"witness: {rep.witness.rows}x{rep.witness.cols}")
        lines.append(f"pumped: {rep.pumped.rows}x{rep.pumped.cols}")
        lines.append(f"pumped-accepted: {'yes' if rep.pumped_accepted else 'no'}")
    lines.append(f"verdict: {rep.verdict}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# structural examination of reduction scenarios

_A_RE = re.compile(r"a\((\d+),(\d+)\)\Z")
_C_RE = re.compile(r"c\((\d+),(\d+)\)\Z")
_M_RE = re.compile(r"M\((\d+),(\d+),(\d+)\)\Z")


def _parse_a(name: str) -> tuple[int, int] | None:
    m = _A_RE.match(name)
    return (int(m.group(1)), int(m.group(2))) if m else None


def _parse_c(name: str) -> tuple[int, int] | None:
    m = _C_RE.match(name)
    return (int(m.group(1)), int(m.group(2))) if m else None


def _parse_m(name: str) -> tuple[int, int, int] | None:
    m = _M_RE.match(name)
    return tuple(int(g) for g in m.groups()) if m else None


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class StructuralReport:
    """Per-claim verdicts over one accepting scenario of a compiled
    reduction system; failing verdicts carry the witnessing positions."""

    frame: CheckResult
    spelling: CheckResult
    index_streams: CheckResult
    marker_rows: CheckResult
    carry_streams: CheckResult
    tail_rows: CheckResult
    east_border: CheckResult
    x_indices: tuple[int, ...]
    y_indices: tuple[int, ...]

    def checks(self) -> tuple[tuple[str, CheckResult], ...]:
        return (
            ("frame", self.frame),
            ("spelling", self.spelling),
            ("index-streams", self.index_streams),
            ("marker-rows", self.marker_rows),
            ("carry-streams", self.carry_streams),
            ("tail-rows", self.tail_rows),
            ("east-border", self.east_border),
        )

    @property
    def ok(self) -> bool:
        return all(c.ok for _, c in self.checks())


def _row_souths(sc: Scenario, r: int) -> tuple[str, ...]:
    return tuple(t.south for t in sc.cell_runs[r - 1])


def _x_blocks(p: PcpInstance, souths, letters) -> tuple[list[int] | None, str]:
    """Word indices spelled by the first row, from its south states."""
    xs: list[int] = []
    pos, q = 0, len(souths)
    while pos < q:
        ij = _parse_a(souths[pos])
        if ij is None or ij[1] != 1:
            return None, f"column {pos + 1}: {souths[pos]!r} does not open a word"
        i = ij[0]
        if not 1 <= i <= len(p.x):
            return None, f"column {pos + 1}: word index {i} out of range"
        word = p.x[i - 1]
        for off, ch in enumerate(word):
            if pos + off >= q:
                return None, f"column {q}: word {i} truncated at the border"
            if _parse_a(souths[pos + off]) != (i, off + 1):
                return None, (f"column {pos + off + 1}: "
                              f"{souths[pos + off]!r} breaks word {i}")
            if letters[pos + off] != ch:
                return None, (f"column {pos + off + 1}: letter "
                              f"{letters[pos + off]!r} differs from word {i}")
        xs.append(i)
        pos += len(word)
    return xs, ""


def _y_chunks(p: PcpInstance, seconds, letters) -> tuple[list[int] | None, str]:
    """Word indices spelled by the second row, from its south index stream."""
    ys: list[int] = []
    pos, q = 0, len(seconds)
    while pos < q:
        j = seconds[pos]
        if not 1 <= j <= len(p.y):
            return None, f"column {pos + 1}: word index {j} out of range"
        word = p.y[j - 1]
        if pos + len(word) > q:
            return None, f"column {q}: word {j} truncated at the border"
        if list(seconds[pos:pos + len(word)]) != [j] * len(word):
            return None, f"column {pos + 1}: index run shorter than word {j}"
        if "".join(letters[pos:pos + len(word)]) != word:
            return None, f"column {pos + 1}: letters differ from word {j}"
        ys.append(j)
        pos += len(word)
    return ys, ""


def structural_check(p: PcpInstance, sc: Scenario) -> StructuralReport:
    """Verify, claim by claim, that an accepting scenario of the
    compiled system for ``p`` has the reduction shape.

    Raises :class:`NotReductionScenario` unless ``sc`` replays as an
    accepting scenario of ``compile_pcp(p)``.
    """
    problems = check_scenario(compile_pcp(p), sc)
    if problems:
        raise NotReductionScenario("; ".join(problems[:3]))

    m, q = sc.grid.rows, sc.grid.cols
    cells = sc.grid.cells

    fails = []
    if m < 3:
        fails.append(f"only {m} rows")
    fails += [f"north border column {i + 1} is {s!r}"
              for i, s in enumerate(sc.b_n) if s != "s"]
    fails += [f"west border row {i + 1} is {c!r}"
              for i, c in enumerate(sc.b_w) if c != "A"]
    fails += [f"south border column {i + 1} is {s!r}"
              for i, s in enumerate(sc.b_s) if s != "c(0,0)"]
    frame = CheckResult(not fails, "; ".join(fails[:3]))

    xs = ys = None
    if m >= 2:
        xs, x_err = _x_blocks(p, _row_souths(sc, 1), cells[0])
        pairs = [_parse_c(s) for s in _row_souths(sc, 2)]
        if None in pairs:
            t = pairs.index(None)
            seconds, y_err = None, f"column {t + 1}: not a pair state"
        else:
            seconds = [b for _, b in pairs]
            ys, y_err = _y_chunks(p, seconds, cells[1])
        spell_fails = []
        if cells[0] != cells[1]:
            t = next(i for i in range(q) if cells[0][i] != cells[1][i])
            spell_fails.append(f"rows 1 and 2 differ at column {t + 1}")
        if xs is None:
            spell_fails.append("row 1: " + x_err)
        if ys is None:
            spell_fails.append("row 2: " + y_err)
        spelling = CheckResult(not spell_fails, "; ".join(spell_fails))
    else:
        spelling = CheckResult(False, "fewer than two rows")

    if xs is not None and ys is not None:
        firsts = [a for a, _ in pairs]
        want_first = [i for i in xs for _ in p.x[i - 1]]
        want_second = [j for j in ys for _ in p.y[j - 1]]
        if firsts != want_first:
            index_streams = CheckResult(
                False, f"first stream {firsts} differs from {want_first}")
        elif seconds != want_second:
            index_streams = CheckResult(
                False, f"second stream {seconds} differs from {want_second}")
        else:
            index_streams = CheckResult(True, "")
    else:
        index_streams = CheckResult(False, "word factorization not derivable")

    marker_fails = []
    for r in range(3, m + 1):
        for t in range(q):
            if cells[r - 1][t] != MARKER:
                marker_fails.append(f"row {r} column {t + 1}: letter "
                                    f"{cells[r - 1][t]!r}")
                continue
            kind = classify_transition(sc.cell_runs[r - 1][t])
            if kind in (TransKind.X_SPELL, TransKind.Y_SPELL):
                marker_fails.append(f"row {r} column {t + 1}: spelled, not reduced")
    marker_rows = CheckResult(not marker_fails, "; ".join(marker_fails[:3]))

    if xs is None or ys is None:
        carry_streams = CheckResult(False, "word factorization not derivable")
        tail_rows = CheckResult(False, "word factorization not derivable")
        east_border = CheckResult(False, "word factorization not derivable")
    else:
        carry_streams = _carry_streams(p, sc, xs, ys)
        k = len(xs)
        tail_fails = []
        for r in range(k + 3, m + 1):
            for t in range(q):
                if classify_transition(sc.cell_runs[r - 1][t]) is not TransKind.PAD:
                    tail_fails.append(f"row {r} column {t + 1}")
        tail_rows = CheckResult(not tail_fails, "; ".join(tail_fails[:3]))

        want_e = ("A", "A") + tuple(f"M({i},0,0)" for i in xs) \
            + ("A",) * max(0, m - len(xs) - 2)
        if sc.b_e == want_e:
            east_border = CheckResult(True, "")
        else:
            east_border = CheckResult(
                False, f"east border {sc.b_e} differs from {want_e}")

    return StructuralReport(
        frame=frame, spelling=spelling, index_streams=index_streams,
        marker_rows=marker_rows, carry_streams=carry_streams,
        tail_rows=tail_rows, east_border=east_border,
        x_indices=tuple(xs or ()), y_indices=tuple(ys or ()),
    )


def _carry_streams(p: PcpInstance, sc: Scenario,
                   xs: list[int], ys: list[int]) -> CheckResult:
    """Each marker row consumes one solution pair: the south border of
    row p+2 starts with as many zeros as letters already reduced and
    then repeats the remaining word indices, on both stream components."""
    if xs != ys:
        return CheckResult(False, f"x words {xs} differ from y words {ys}")
    k = len(xs)
    m = sc.grid.rows
    if m < k + 2:
        return CheckResult(False, f"{m} rows cannot host {k} reduction rows")
    for step in range(k + 1):
        souths = _row_souths(sc, step + 2)
        pairs = [_parse_c(s) for s in souths]
        if None in pairs:
            t = pairs.index(None)
            return CheckResult(False, f"row {step + 2} column {t + 1}: "
                                      f"{souths[t]!r} is not a pair state")
        alpha = sum(len(p.x[i - 1]) for i in xs[:step])
        beta = sum(len(p.y[j - 1]) for j in ys[:step])
        want_first = [0] * alpha + [i for i in xs[step:] for _ in p.x[i - 1]]
        want_second = [0] * beta + [j for j in ys[step:] for _ in p.y[j - 1]]
        got_first = [a for a, _ in pairs]
        got_second = [b for _, b in pairs]
        if got_first != want_first:
            return CheckResult(False, f"row {step + 2}: first stream "
                                      f"{got_first} differs from {want_first}")
        if got_second != want_second:
            return CheckResult(False, f"row {step + 2}: second stream "
                                      f"{got_second} differs from {want_second}")
    return CheckResult(True, f"k={k}")


def format_structural_report(rep: StructuralReport) -> str:
    lines = []
    for name, check in rep.checks():
        status = "pass" if check.ok else "FAIL"
        lines.append(f"{name}: {status}" + (f" {check.detail}" if check.detail
                                            and not check.ok else ""))
    if rep.x_indices:
        lines.append("x-indices: " + " ".join(map(str, rep.x_indices)))
    if rep.y_indices:
        lines.append("y-indices: " + " ".join(map(str, rep.y_indices)))
    lines.append(f"overall: {'pass' if rep.ok else 'FAIL'}")
    return "\n".join(lines) + "\n"
