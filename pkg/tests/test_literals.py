from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realization.drinfeld import from_coords, normalize
from realization.homeo import PLHomeo
from realization.literals import (
    LiteralError,
    bundled,
    bundled_names,
    format_homeo,
    format_point,
    format_presentation,
    parse_homeo,
    parse_point,
    parse_presentation,
    parse_q,
    split_element,
)

CIRCLE = """\
flavor: simplicial
gen v dim 0
gen e dim 1   # the loop
face e 0 = v
face e 1 = v
"""


def test_split_element_reverses_the_word():
    assert split_element("s2 s0 x") == ("x", (0, 2))


@pytest.mark.parametrize("bad", ["", "s0 s1 x", "s0 s0 x", "t0 x", "s1"])
def test_split_element_rejects(bad):
    with pytest.raises(LiteralError):
        split_element(bad)


def test_parse_q_accepts_unicode_minus():
    assert parse_q("−1/2") == Q(-1, 2)
    with pytest.raises(LiteralError):
        parse_q("1/0")


def test_parse_circle():
    X = parse_presentation(CIRCLE, "S1")
    assert X.kind == "simplicial" and X.generators == {"v": 0, "e": 1}
    assert X.validate(3).ok


@pytest.mark.parametrize("name", bundled_names())
def test_bundled_round_trip(name):
    X = bundled(name)
    Y = parse_presentation(format_presentation(X), name)
    assert format_presentation(Y) == format_presentation(X)


@pytest.mark.parametrize(
    "text,line",
    [
        ("gen v dim 0\n", None),
        ("flavor: cubical\n", 1),
        ("flavor: simplicial\nflavor: cyclic\n", 2),
        ("flavor: simplicial\ngen e dim 1\nface e 0 = v\n", 3),
        ("flavor: simplicial\ngen v dim 0\nbogus\n", 3),
        ("flavor: simplicial\ngen v dim 0\ngen e dim 1\nface e 0 = v\nface e 0 = v\nface e 1 = v\n", 5),
        ("flavor: simplicial\ngen v dim 0\nface v 0 = v\n", 3),
    ],
)
def test_parse_errors_carry_lines(text, line):
    with pytest.raises(LiteralError) as exc:
        parse_presentation(text)
    assert exc.value.line == line


def test_missing_faces():
    with pytest.raises(LiteralError, match="lacks faces"):
        parse_presentation("flavor: simplicial\ngen v dim 0\ngen e dim 1\nface e 0 = v\n")


def test_cap_directive():
    X = parse_presentation("flavor: cyclic\ncap: 2\ngen v dim 0\nt v = v\n")
    assert X.cap == 2


def test_point_literal_round_trip():
    X = bundled("delta2")
    p = parse_point('@ {cuts: [1/3, 1/2], elem: "s0 v0_1"}', X)
    assert parse_point(format_point(p), X) == p


def test_circle_point_literal():
    X = bundled("lambda1")
    p = parse_point("cyclic 1 (0, 1/3)", X)
    q = parse_point(format_point(p), X)
    assert normalize(q) == normalize(p)


@given(st.fractions(0, 1, max_denominator=12), st.fractions(0, 1, max_denominator=12))
def test_simplex_shorthand_matches_coordinates(a, b):
    a, b = sorted((a, b))
    X = bundled("delta2")
    p = normalize(parse_point(f"simplex 2 ({a}, {b})", X))
    ref = normalize(from_coords("simplex", 2, [a, b]))
    assert p.X is X
    assert p.cuts == ref.cuts
    assert p.elem.dim == len(ref.elem.values) - 1


@pytest.mark.parametrize(
    "text",
    [
        "simplex 2 - (1/3, 1/2)",
        "@ {cuts: [1/2]}",
        '@ {cuts: [1/2], elem: "e", size: 3}',
        '@ {cuts: [1/2], elem: "e", shape: torus}',
        "point 1/2",
    ],
)
def test_bad_points(text):
    with pytest.raises(LiteralError):
        parse_point(text, bundled("delta2"))


def test_shorthand_needs_the_standard_object():
    with pytest.raises(LiteralError):
        parse_point("simplex 1 (1/2)", bundled("circle"))


def test_homeo_round_trip():
    a = parse_homeo("pl circle - [(0,1/2), (1/4,1/4)] length 2")
    assert isinstance(a, PLHomeo) and a.orientation == -1
    assert parse_homeo(format_homeo(a)) == a
    b = parse_homeo("pl interval [(0,0), (1/2,1/4), (1,1)]")
    assert b(Q(1, 2)) == Q(1, 4)


@pytest.mark.parametrize(
    "text",
    [
        "pl interval - [(0,0), (1,1)]",
        "pl interval [(0,0), (1/2,1), (1,1/2)]",
        "pl interval [0, 1]",
        "affine [(0,0)]",
    ],
)
def test_bad_homeos(text):
    with pytest.raises(LiteralError):
        parse_homeo(text)
