import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realization.drinfeld import equal
from realization.homeo import (
    HomeoError,
    PLHomeo,
    act,
    compose,
    cover,
    invert,
    modulus_report,
    random_homeo,
    scale,
)
from realization.literals import bundled, parse_point
from realization.sset import FlavorError
from realization.suites import random_point

seeds = st.integers(0, 10**6)


def circle_maps(seed, length=1):
    rng = random.Random(seed)
    return [random_homeo(rng, "circle", length, rng.choice([1, -1])) for _ in range(3)]


def test_interval_map_moves_the_parameter():
    X = bundled("delta1")
    a = PLHomeo.interval([(0, 0), (Q(1, 2), Q(1, 4)), (1, 1)])
    q = act(a, parse_point("simplex 1 (1/2)", X))
    assert q == parse_point("simplex 1 (1/4)", X)


def test_reflection_reverses_a_dihedral_point():
    X = bundled("dih1")
    p = parse_point("dihedral 1 (1/3, 2/3)", X)
    q = act(PLHomeo.reflection(0), p)
    assert equal(q, parse_point("dihedral 1 - (2/3, 1/3)", X))


def test_reversing_maps_need_a_dihedral_object():
    X = bundled("lambda1")
    with pytest.raises(FlavorError):
        act(PLHomeo.reflection(0), parse_point("cyclic 1 (0, 1/2)", X))


def test_identity_acts_trivially():
    X = bundled("dih1")
    p = parse_point("dihedral 1 (1/4, 1/2)", X)
    assert act(PLHomeo.identity("circle"), p) == p


def test_two_reflections_make_a_rotation():
    r = compose(PLHomeo.reflection(Q(1, 2)), PLHomeo.reflection(0))
    assert r == PLHomeo.rotation(Q(1, 2))


def test_interval_maps_fix_the_ends():
    with pytest.raises(HomeoError):
        PLHomeo.interval([(0, Q(1, 2)), (1, 1)])


@given(seeds)
def test_group_laws(seed):
    a, b, c = circle_maps(seed)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))
    assert compose(a, invert(a)).is_identity
    assert compose(invert(a), a).is_identity


@given(seeds)
def test_action_is_a_group_action(seed):
    rng = random.Random(seed)
    X = bundled("dih1")
    a, b, _ = circle_maps(seed)
    p = random_point(X, rng, 2)
    assert equal(act(compose(a, b), p), act(a, act(b, p)))
    assert equal(act(invert(a), act(a, p)), p)


@given(seeds)
def test_cover_commutes_with_the_deck_translation(seed):
    a = circle_maps(seed)[0]
    for r in (2, 3):
        c = cover(a, r)
        for x in (Q(0), Q(1, 3), Q(5, 7)):
            assert c.lift(x + 1) == c.lift(x) + a.orientation
            assert scale(c, Q(1, r)).length == 1


@given(seeds)
def test_distortion_is_bounded_by_the_slope(seed):
    rng = random.Random(seed)
    X = bundled("delta2")
    a = random_homeo(rng, "interval")
    pairs = [(random_point(X, rng, 2), random_point(X, rng, 2)) for _ in range(4)]
    rep = modulus_report(a, pairs)
    assert rep.within_slope_bound and rep.preserves_zero


def test_literal_round_trip():
    a = PLHomeo.circle([(0, Q(1, 2)), (Q(1, 4), Q(1, 4))], -1, 2)
    assert str(a) == "pl circle - [(0,1/2)] length 2"
