"""Grid languages: recognizers, word-matching reductions, tile systems.

The package models two-dimensional words (grids), finite interactive
systems that recognize them, a compiler from word-matching instances to
such systems whose language is nonempty exactly when the instance is
solvable, the equivalent tile-system presentation, and bounded search
procedures with structural reporting on top.
"""

from .errors import (
    ColumnMismatch,
    FiskitError,
    FormatError,
    IndexOutOfRange,
    InvalidGrid,
    InvalidLetter,
    InvalidSolution,
    NotAReductionFis,
    NotReductionScenario,
    ReservedSymbolCollision,
    RowMismatch,
    UnknownLetter,
    UnknownTransition,
    WindowTooLarge,
    ZeroIteration,
)
from .grids import (
    BORDER,
    BorderedGrid,
    Grid,
    border,
    format_grid,
    grid,
    h_compose,
    h_iterate,
    parse_grid,
    subgrids,
    v_compose,
    v_iterate,
)
from .fis import (
    FIS,
    Scenario,
    Transition,
    check_scenario,
    enumerate_language,
    format_fis,
    iter_accepted,
    parse_fis,
    recognize,
    recognize_with_transition,
    render_scenario,
    unused_elements,
    validate,
)
from .pcp import (
    MARKER,
    PcpInstance,
    TransKind,
    check_solution,
    classify_transition,
    compile_pcp,
    compile_pcp_probe,
    format_pcp,
    parse_pcp,
    probe_transition,
    probe_witness,
    solve_pcp,
    witness_from_solution,
)
from .tiles import (
    LocalLanguage,
    Tile,
    TileSystem,
    fis_to_tiles,
    format_tiles,
    local_member,
    parse_tiles,
    tile,
    tiles_to_fis,
    ts_language,
    ts_recognize,
)
from .analysis import (
    CheckResult,
    FinitenessReport,
    SearchBounds,
    StructuralReport,
    bounded_accessibility,
    bounded_emptiness,
    finiteness_evidence,
    format_finiteness_report,
    format_structural_report,
    structural_check,
)
from .cli import main

__all__ = [name for name in dir() if not name.startswith("_")]
