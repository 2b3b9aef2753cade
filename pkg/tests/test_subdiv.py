import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realization.crossed import Flavor, GroupElement, enumerate_hom
from realization.delta import OrdinalMap, all_maps, face
from realization.drinfeld import CutSet, RealizationPoint, equal, normalize
from realization.homeo import PLHomeo, compose, cover, random_homeo
from realization.literals import bundled
from realization.sset import check_relations, standard
from realization.subdiv import (
    DerivedSet,
    FixedObject,
    SubdivisionError,
    dr_generators,
    equivariance_check,
    fixed_point_homeo_check,
    fixed_points,
    lift_point,
    realize_point_map_Dr,
    sd_e_crossed,
    sd_e_map,
    sd_r_crossed,
    sd_r_map,
)
from realization.suites import derived_sample


def test_sd_r_on_a_face():
    # d^0: [0] -> [1] repeated on both halves of [3]
    assert sd_r_map(face(0, 1), 2).values == (1, 3)


def test_doubling_is_symmetric():
    f = OrdinalMap(1, 2, (0, 2))
    assert sd_e_map(f).values == (0, 2, 3, 5)


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("kind", ["C", "D"])
def test_sd_r_respects_composition(kind, r):
    fl = Flavor(kind, r)
    for m in range(2):
        for n in range(2):
            for k in range(2):
                for a in enumerate_hom(m, n, fl)[::3]:
                    for b in enumerate_hom(n, k, fl)[::3]:
                        assert sd_r_crossed(b @ a) == sd_r_crossed(b) @ sd_r_crossed(a)


def test_sd_r_sends_tau_to_tau():
    m = enumerate_hom(1, 1, Flavor("C", 2))
    t = next(x for x in m if x.phi.is_identity and x.g.power == 1)
    img = sd_r_crossed(t)
    assert img.phi.is_identity and img.g == GroupElement(3, 1, False, 1)


def test_doubling_respects_composition():
    for f in all_maps(2, 2):
        for g in all_maps(2, 1):
            assert sd_e_map(g @ f) == sd_e_map(g) @ sd_e_map(f)


def test_doubling_is_not_a_functor_on_all_of_the_dihedral_category():
    # ω d^0 = d^1 ω upstairs, but ω commutes with every f^e downstairs
    fl = Flavor("D", 2)
    w0 = next(x for x in enumerate_hom(0, 0, fl) if x.g.reflected and x.g.power == 0)
    d0 = next(x for x in enumerate_hom(0, 1, fl) if x.phi == face(0, 1) and x.g.is_identity)
    w1 = next(x for x in enumerate_hom(1, 1, fl) if x.phi.is_identity and x.g.reflected and x.g.power == 0)
    assert sd_e_crossed(w1 @ d0) != sd_e_crossed(w1) @ sd_e_crossed(d0)
    assert sd_e_map(face(0, 1)).values == (1, 2)
    assert sd_e_crossed(w0).g.reflected


def test_sde_needs_an_even_index():
    with pytest.raises(SubdivisionError):
        sd_e_crossed(enumerate_hom(0, 0, Flavor("D", 3))[0])


@pytest.mark.parametrize("kind,n", [("simplex", 2), ("cyclic", 1), ("dihedral", 1)])
@pytest.mark.parametrize("r", [2, 3])
def test_point_map_round_trips(kind, n, r):
    rng = random.Random(7 * r + n)
    Y = DerivedSet(standard(kind, n), "sd", r)
    for _ in range(30):
        p = normalize(derived_sample(Y, rng))
        q = realize_point_map_Dr(p)
        assert normalize(lift_point(q, Y)) == p


def test_interval_image_example():
    # F = {1/2} on sd_2 Δ[1]: cuts at 1/4, 1/2, 3/4
    X = standard("simplex", 1)
    Y = DerivedSet(X, "sd", 2)
    p = RealizationPoint(Y, CutSet.interval([Q(1, 2)]), Y.elements(1)[0])
    assert realize_point_map_Dr(p).cuts.points == (Q(1, 4), Q(1, 2), Q(3, 4))


def test_doubled_image_example():
    X = standard("dihedral", 1)
    Y = DerivedSet(X, "sde", 1)
    p = RealizationPoint(Y, CutSet.interval([Q(1, 3)]), Y.elements(1)[0])
    assert realize_point_map_Dr(p).cuts.points == (0, Q(1, 6), Q(1, 2), Q(5, 6))


@given(st.integers(0, 10**6))
def test_equivariance_for_covering_maps(seed):
    rng = random.Random(seed)
    X = standard("dihedral", 1)
    Y = DerivedSet(X, "sd", 2)
    alphas = [cover(random_homeo(rng, "circle", 1, o), 2) for o in (1, -1)]
    rep = equivariance_check(alphas, [derived_sample(Y, rng) for _ in range(3)])
    assert rep.ok and rep.direct_checked == rep.checked


@pytest.mark.parametrize("r", [1, 2])
def test_doubled_square_through_the_group_action(r):
    rng = random.Random(r)
    Y = DerivedSet(standard("dihedral", 1), "sde", r)
    g = dr_generators(r)
    alphas = g + [compose(*g), random_homeo(rng, "circle", 2 * r, -1)]
    rep = equivariance_check(alphas, [derived_sample(Y, rng, 1) for _ in range(6)])
    assert rep.ok and rep.direct_checked >= 18


def test_group_action_on_doubled_points_commutes_with_faces():
    Y = DerivedSet(bundled("dih1"), "sde", 2)
    for y in Y.elements(1)[::7]:
        for i in range(2):
            assert Y.face(Y.dr_act(y, 1, True), i) == Y.dr_act(Y.face(y, i), 1, True)


def test_fixed_levels_of_the_quotient():
    X = bundled("dih1_mod_d2")
    _, d = fixed_points(X, 2, "D", 3)
    _, c = fixed_points(X, 2, "C", 3)
    assert [len(d.elements(n)) for n in range(4)] == [2, 2, 2, 2]
    assert [len(c.elements(n)) for n in range(4)] == [2, 4, 6, 8]


def test_free_actions_have_no_fixed_points():
    _, obj = fixed_points(standard("dihedral", 1), 2, "D", 2)
    assert all(not obj.elements(n) for n in range(3))


def test_rotation_squared_breaks_sd3_on_fixed_points():
    obj = FixedObject(DerivedSet(bundled("dih1_mod_d2"), "sde", 2), "C")
    rep = check_relations(obj, 2)
    assert not rep.ok and rep.violations[0].relation == "SD-3"


def test_fixed_points_match_geometric_fixed_points():
    rep = fixed_point_homeo_check(bundled("dih1_mod_d2"), 2, [Q(1, 4), Q(1, 2), Q(3, 4)], 1)
    assert rep.ok
    assert rep.fixed_derived == rep.fixed_base > 0
