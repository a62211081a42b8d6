# From a word-matching instance to a grid recognizer and back: solve the
# instance, build the witness grid its solution spells, compile the
# instance into a system, and check the witness structurally.
# Run as: python3 demos/word_matching_pipeline.py

from pathlib import Path

from fiskit import (
    compile_pcp,
    format_grid,
    format_structural_report,
    parse_pcp,
    recognize,
    solve_pcp,
    structural_check,
    witness_from_solution,
)

data = Path(__file__).parent / "data"
p = parse_pcp((data / "two_words.pcp").read_text())
print("pairs:", list(zip(p.x, p.y)))

# breadth-first search over index sequences; (1, 2) spells "ab"+"b" on
# one side and "a"+"bb" on the other
sol = solve_pcp(p, max_k=6)
print("solution:", sol)

# the witness grid: two rows spelling the matched word, then one marker
# row per solution index
w = witness_from_solution(p, sol)
print()
print(format_grid(w))

f = compile_pcp(p)
print("compiled system:", len(f.states), "states,",
      len(f.classes), "classes,", len(f.transitions), "transitions")

sc = recognize(f, w)
print("witness accepted:", sc is not None)

# the structural report replays the construction's bookkeeping on the scenario:
# frame borders, row spelling, index streams, marker carries, tail rows
print()
print(format_structural_report(structural_check(p, sc)), end="")
