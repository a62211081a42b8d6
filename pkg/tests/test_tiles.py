"""Tile model, local membership, the two conversions and the text format."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from conftest import make_f1
from generators import random_fis, random_tile_system
from fiskit.errors import FormatError, InvalidLetter, UnknownLetter
from fiskit.fis import enumerate_language, recognize
from fiskit.grids import BORDER, grid
from fiskit.tiles import (
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

B = BORDER


def corner_tiles(v: str) -> tuple[Tile, ...]:
    return (tile(B, B, B, v), tile(B, B, v, B), tile(B, v, B, B), tile(v, B, B, B))


@pytest.fixture
def single_cell() -> TileSystem:
    # the four bordered windows of the 1x1 grid [v], nothing else
    ll = LocalLanguage(alphabet=("v",), delta=corner_tiles("v"))
    return TileSystem(local=ll, target=("x",), mapping=(("v", "x"),))


def test_tile_shape_and_token():
    t = tile(B, "a", "b", B)
    assert (t.nw, t.ne, t.sw, t.se) == (B, "a", "b", B)
    assert t.token() == "[#,a/b,#]"
    with pytest.raises(ValueError):
        Tile((("a",), ("b",)))
    with pytest.raises(InvalidLetter):
        tile("a", "b c", "d", "e")


def test_local_language_dedups_and_checks_letters():
    t = tile(B, B, B, "v")
    ll = LocalLanguage(alphabet=("v",), delta=(t, t))
    assert ll.delta == (t,)
    with pytest.raises(ValueError):
        LocalLanguage(alphabet=("v",), delta=(tile(B, B, B, "w"),))


def test_tile_system_requires_total_projection():
    ll = LocalLanguage(alphabet=("v", "w"), delta=corner_tiles("v"))
    with pytest.raises(ValueError):
        TileSystem(local=ll, target=("x",), mapping=(("v", "x"),))
    with pytest.raises(ValueError):
        TileSystem(local=ll, target=("x",),
                   mapping=(("v", "x"), ("w", "z")))


def test_local_member_single_cell():
    ll = LocalLanguage(alphabet=("v",), delta=corner_tiles("v"))
    assert local_member(ll, grid(["v"]))
    # the vertical pair needs interior edge tiles the set lacks
    assert not local_member(ll, grid(["v", "v"]))
    with pytest.raises(UnknownLetter):
        local_member(ll, grid(["w"]))


def test_ts_recognize_single_cell(single_cell):
    assert ts_recognize(single_cell, grid(["x"]))
    assert not ts_recognize(single_cell, grid(["x", "x"]))
    assert not ts_recognize(single_cell, grid(["xx"]))
    with pytest.raises(UnknownLetter):
        ts_recognize(single_cell, grid(["y"]))


def test_ts_language_single_cell(single_cell):
    assert [g.cells for g in ts_language(single_cell, 2, 2)] == [(("x",),)]


def test_two_preimages_one_needed():
    # u tiles cannot close the east border, v tiles can; h merges them
    ll = LocalLanguage(
        alphabet=("u", "v"),
        delta=(tile(B, B, B, "u"),) + corner_tiles("v"),
    )
    ts = TileSystem(local=ll, target=("x",),
                    mapping=(("u", "x"), ("v", "x")))
    assert ts_recognize(ts, grid(["x"]))


def test_missing_corner_window_rejects():
    # without the bottom-right corner tile no bordered picture completes
    ll = LocalLanguage(alphabet=("v",), delta=corner_tiles("v")[:3])
    ts = TileSystem(local=ll, target=("x",), mapping=(("v", "x"),))
    g = grid(["x"])
    assert not local_member(ll, grid(["v"]))
    assert not ts_recognize(ts, g)
    assert recognize(tiles_to_fis(ts), g) is None


def test_fis_to_tiles_f1_shape(f1):
    ts = fis_to_tiles(f1)
    assert len(ts.local.alphabet) == 3
    assert len(ts.local.delta) == 20
    assert tile(B, B, B, B) in ts.local.delta
    assert ts.target == ("a", "b", "c")
    assert dict(ts.mapping) == {
        "(1,A,a,B,2)": "a", "(1,B,b,B,1)": "b", "(2,A,c,A,2)": "c",
    }


def test_fis_to_tiles_f1_recognition(f1, diag1, diag2, diag3):
    ts = fis_to_tiles(f1)
    for g in (diag1, diag2, diag3):
        assert ts_recognize(ts, g)
    for g in (grid(["ab"]), grid(["ba"]), grid(["a", "a"])):
        assert not ts_recognize(ts, g)


def test_fis_to_tiles_f1_language(f1):
    ts = fis_to_tiles(f1)
    assert ts_language(ts, 3, 3) == enumerate_language(f1, 3, 3)


def test_round_trip_preserves_language(f1):
    back = tiles_to_fis(fis_to_tiles(f1))
    assert enumerate_language(back, 3, 3) == enumerate_language(f1, 3, 3)


def test_fis_to_tiles_matches_oracle_on_random_systems():
    rng = random.Random(915)
    for _ in range(20):
        f = random_fis(rng)
        ts = fis_to_tiles(f)
        delta = {t.cells for t in ts.local.delta}
        for g in oracles.all_grids(f.alphabet, 2, 2):
            want = oracles.accepts(f, g)
            assert ts_recognize(ts, g) == want
            assert oracles.ts_accepts_by_preimages(
                ts.local.alphabet, dict(ts.mapping), delta, g) == want


def test_tiles_to_fis_matches_oracle_on_random_systems():
    rng = random.Random(916)
    for _ in range(20):
        ts = random_tile_system(rng)
        f = tiles_to_fis(ts)
        delta = {t.cells for t in ts.local.delta}
        for g in oracles.all_grids(ts.target, 2, 2):
            want = oracles.ts_accepts_by_preimages(
                ts.local.alphabet, dict(ts.mapping), delta, g)
            assert ts_recognize(ts, g) == want
            assert (recognize(f, g) is not None) == want


def test_ts_language_matches_tiles_to_fis_enumeration():
    rng = random.Random(917)
    for _ in range(20):
        ts = random_tile_system(rng)
        assert ts_language(ts, 3, 2) == enumerate_language(tiles_to_fis(ts), 3, 2)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.sampled_from("abc"), min_size=1, max_size=3),
                min_size=1, max_size=3).filter(
                    lambda rows: len({len(r) for r in rows}) == 1))
def test_conversion_agrees_on_arbitrary_grids(rows):
    f = make_f1()
    g = grid(rows)
    assert ts_recognize(fis_to_tiles(f), g) == (recognize(f, g) is not None)


def test_text_round_trip(single_cell):
    text = format_tiles(single_cell)
    assert parse_tiles(text) == single_cell
    assert format_tiles(parse_tiles(text)) == text


def test_parse_rejects_malformed():
    with pytest.raises(FormatError):
        parse_tiles("alphabet: v\nnonsense line\n")
    with pytest.raises(FormatError):
        parse_tiles("alphabet: v\ntarget: x\nmap: v x\ntile: v v / v\n")
    with pytest.raises(FormatError):
        parse_tiles("alphabet: v\ntarget: x\nmap: v\n")
    with pytest.raises(FormatError):
        parse_tiles("alien: v\n")
    # projection not total on the alphabet
    with pytest.raises(FormatError):
        parse_tiles("alphabet: v\ntarget: x\ntile: # # / # v\n")
