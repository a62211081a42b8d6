# A first system: three transitions that recognize exactly the square
# grids with `a` on the diagonal, `b` above it and `c` below it.
# Run as: python3 demos/diagonal_language.py

from pathlib import Path

from fiskit import (
    enumerate_language,
    format_grid,
    parse_fis,
    parse_grid,
    recognize,
    render_scenario,
)

data = Path(__file__).parent / "data"
f = parse_fis((data / "diagonal.fis").read_text())
w = parse_grid((data / "diag3.grid").read_text())

# recognition returns the full scenario, not just a verdict
sc = recognize(f, w)
print("accepted:", sc is not None)
print()
print(render_scenario(sc))

# the drawing interleaves class columns with letter cells, and state rows
# with grid rows; the borders show the initial (top/left) and final
# (bottom/right) designations the parse had to meet.

# the bounded language: every accepted grid with at most 3 rows and columns
print("accepted grids up to 3x3:")
for g in enumerate_language(f, 3, 3):
    print(format_grid(g))

# only the three diagonal squares survive; a single misplaced letter is
# enough to strand the parse
bad = parse_grid("a b b\nc a b\nc c b\n")
print("off-diagonal variant accepted:", recognize(f, bad) is not None)
