import pytest

import wellround as wr


def test_classify_presets():
    assert wr.classify("square") == "square"
    assert wr.classify("hexagonal") == "hexagonal"
    gram, kind = wr.reduce("[[5,4],[4,5]]")
    assert kind == "centred_rect"
    assert gram == {"a": "2", "b": "1", "c": "5"}


def test_formula_matches_census():
    rows = wr.census("square", 60)
    assert [r["well_rounded"] for r in rows] == wr.a_square(60)
    rows = wr.census("hexagonal", 60, threads=2)
    assert [r["well_rounded"] for r in rows] == wr.a_hex(60)
    rows = wr.census("[[2,1],[1,3]]", 60)
    assert [r["well_rounded"] for r in rows] == wr.count_well_rounded("[[2,1],[1,3]]", 60)


def test_existence_and_frames():
    assert wr.existence("{t: sqrt2, n: 3}") == "NoWellRounded"
    assert len(wr.frames("square", 1)) == 2


def test_constants():
    c = wr.constants(20000)
    assert abs(c["L1_chi4"]["value"] - 0.7853981633974483) < 1e-12


def test_errors_carry_kind():
    with pytest.raises(wr.WellroundError) as info:
        wr.classify("[[1,2],[2,1]]")
    assert info.value.kind == "NotPositiveDefinite"
    with pytest.raises(ValueError):
        wr.classify("[[1,")
