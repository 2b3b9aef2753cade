from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realization.drinfeld import (
    CapacityError,
    CircleCoords,
    CutSet,
    RealizationPoint,
    ShapeError,
    distance,
    equal,
    from_coords,
    normalize,
    push_forward,
    to_coords,
)
from realization.literals import bundled, parse_presentation, parse_point

rationals = st.fractions(min_value=0, max_value=1, max_denominator=16)


def coords(n):
    return st.lists(rationals, min_size=n, max_size=n).map(lambda xs: tuple(sorted(xs)))


def step_disagreement(x, y):
    pts = sorted({Q(0), Q(1), *x, *y})
    out = Q(0)
    for a, b in zip(pts, pts[1:]):
        t = (a + b) / 2
        if sum(v < t for v in x) != sum(v < t for v in y):
            out += b - a
    return out


def test_distance_on_the_interval():
    p, q = from_coords("simplex", 1, (Q(3, 10),)), from_coords("simplex", 1, (Q(1, 2),))
    assert distance(p, q) == Q(1, 5)


def test_disconnected_vertices_are_at_distance_one():
    X = parse_presentation("flavor: simplicial\ngen a dim 0\ngen b dim 0\n")
    p = RealizationPoint(X, CutSet.interval(), X.generator("a"))
    q = RealizationPoint(X, CutSet.interval(), X.generator("b"))
    assert distance(p, q) == 1


def test_capacity_bound():
    X = bundled("delta1")
    pts = [Q(k, 20) for k in range(1, 20)]
    p = push_forward(parse_point("simplex 1 (1/3)", X), CutSet.interval(pts + [Q(1, 3)]))
    q = parse_point("simplex 1 (1/2)", X)
    with pytest.raises(CapacityError):
        distance(p, q, bound=14)


@pytest.mark.parametrize("bad", [
    lambda: CutSet("interval", (Q(1, 2), Q(1, 3))),
    lambda: CutSet("interval", (Q(0),)),
    lambda: CutSet("circle", ()),
    lambda: CutSet("circle", (Q(1, 2),), 2, 2),
])
def test_invalid_cut_sets(bad):
    with pytest.raises(ShapeError):
        bad()


def test_periodic_frame_level():
    F = CutSet.periodic([Q(1, 3), Q(1, 2)], 3)
    assert F.points[:2] == (Q(1, 3), Q(1, 2)) and F.level == 1


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(coords(n), coords(n))))
def test_distance_is_the_disagreement_measure(xy):
    x, y = xy
    n = len(x)
    p, q = from_coords("simplex", n, x), from_coords("simplex", n, y)
    d = distance(p, q)
    assert d == step_disagreement(x, y)
    assert d <= n * max(abs(a - b) for a, b in zip(x, y))


@given(st.integers(1, 3).flatmap(coords))
def test_simplex_coordinates_round_trip(x):
    p = from_coords("simplex", len(x), x)
    assert to_coords(p) == x
    assert normalize(p) == p


@st.composite
def circle_coords(draw, n, reversible):
    s = draw(st.sampled_from([1, -1] if reversible else [1]))
    x0 = draw(st.fractions(min_value=0, max_value=Q(15, 16), max_denominator=16))
    steps = sorted(draw(st.lists(rationals, min_size=n, max_size=n)))
    return CircleCoords(tuple([x0] + [x0 + s * t for t in steps]), s)


@given(st.sampled_from(["cyclic", "dihedral"]).flatmap(
    lambda k: st.tuples(st.just(k), st.integers(0, 2).flatmap(
        lambda n: circle_coords(n, k == "dihedral")))))
def test_circle_coordinates_round_trip(case):
    kind, c = case
    p = from_coords(kind, len(c.points) - 1, c)
    back = to_coords(p)
    assert from_coords(kind, len(c.points) - 1, back) == p
    assert normalize(p) == p


@given(st.sampled_from(["delta2", "lambda1", "dih1", "circle"]), st.data())
def test_refinement_keeps_the_class(name, data):
    X = bundled(name)
    shape = "interval" if X.kind == "simplicial" else "circle"
    lo = 0 if shape == "interval" else 1
    grid = [Q(k, 12) for k in range(1 - lo, 12)]
    cuts = sorted(data.draw(st.sets(st.sampled_from(grid), min_size=lo, max_size=3)))
    F = CutSet(shape, tuple(cuts))
    p = RealizationPoint(X, F, data.draw(st.sampled_from(X.elements(F.level))))
    extra = data.draw(st.sets(st.sampled_from([Q(k, 24) for k in range(1, 24)]), min_size=1, max_size=3))
    G = F.union(CutSet(shape, tuple(sorted(extra))))
    q = push_forward(p, G)
    assert equal(p, q)
    assert normalize(q) == normalize(p)
    assert normalize(normalize(q)) == normalize(q)


def test_lone_circle_cut_is_anchored():
    X = parse_presentation("flavor: cyclic\ngen v dim 0\nt v = v\n")
    a = RealizationPoint(X, CutSet.circle([Q(1, 3)]), X.generator("v"))
    b = RealizationPoint(X, CutSet.circle([Q(3, 4)]), X.generator("v"))
    assert equal(a, b)
    assert normalize(a) == normalize(b)
    assert normalize(a).cuts.points == (0,)
