from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from realization.crossed import (
    CYCLIC,
    DIHEDRAL,
    Flavor,
    GroupElement,
    WordError,
    brute_force_functors,
    check_axioms,
    compose_crossed,
    enumerate_aut,
    enumerate_hom,
    from_integer_map,
    generator_letters,
    normal_form,
    omega,
    parse_word,
    relation_instances,
    tau,
    to_integer_map,
    word_model,
)
from realization.delta import face


def hom_count(m, n, kind):
    # φ∘g with g in Aut[m]: |Δ([m],[n])| rotations of the source, doubled by reflections
    return (m + 1) * comb(m + n + 1, m + 1) * (2 if kind == "D" else 1)


@pytest.mark.parametrize("n", range(6))
def test_automorphism_group_orders(n):
    assert len(enumerate_aut(n, CYCLIC)) == n + 1
    assert len(enumerate_aut(n, DIHEDRAL)) == 2 * (n + 1)


@pytest.mark.parametrize("n", range(5))
def test_tau_and_omega_generate_a_dihedral_group(n):
    t, w = tau(n), omega(n)
    assert (t * GroupElement(n, n, False, 1)).is_identity
    assert (w * w).is_identity
    assert w * t * w == t.inverse()


@pytest.mark.parametrize("r", [1, 2, 3])
@pytest.mark.parametrize("n", range(4))
def test_shift_by_one_turn_has_order_r(n, r):
    g = GroupElement(n, n + 1, False, r)
    k, h = 1, g
    while not h.is_identity:
        h, k = h * g, k + 1
    assert k == r


@pytest.mark.parametrize("kind", ["C", "D"])
@pytest.mark.parametrize("m", range(3))
@pytest.mark.parametrize("n", range(3))
def test_hom_sets_match_brute_force_and_closed_form(kind, m, n):
    fl = Flavor(kind)
    hom = enumerate_hom(m, n, fl)
    models = {to_integer_map(x) for x in hom}
    assert len(models) == len(hom) == hom_count(m, n, kind)
    assert models == brute_force_functors(m, n, fl)


def test_dihedral_endomorphisms_of_one():
    assert len(enumerate_hom(1, 1, DIHEDRAL)) == 12


@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("kind", ["C", "D"])
def test_axioms_at_desk_scale(kind, r):
    rep = check_axioms(Flavor(kind, r), 3, 3)
    assert rep.ok, rep.failures[:3]


def test_relation_names_cover_every_family():
    names = {name for name, _, _ in relation_instances(2, DIHEDRAL)}
    assert {"S-1", "S-2", "S-3", "D-1", "D-2", "SD-1", "SD-2", "SD-3", "SD-4"} <= names


def test_rotation_moves_faces():
    # τ_1 d^0 = d^1 as maps [0] -> [1]
    assert normal_form("t d0", CYCLIC, 1) == normal_form("d1", CYCLIC, 1)


def test_omega_absent_from_cyclic_words():
    with pytest.raises(WordError):
        normal_form("w d0", CYCLIC, 1)


@pytest.mark.parametrize("text", ["d0 d0 d0", "x1", "s9"])
def test_bad_words(text):
    with pytest.raises(WordError):
        parse_word(text, 1)


@st.composite
def words(draw, flavor=DIHEDRAL, max_level=3, max_len=6):
    n = draw(st.integers(0, max_level))
    word = []
    for _ in range(draw(st.integers(1, max_len))):
        choices = generator_letters(n, flavor, max_level)
        x = draw(st.sampled_from(choices))
        word.append(x)
        n = x.source
    return word


@given(words())
def test_rewriting_agrees_with_the_integer_model(word):
    assert to_integer_map(normal_form(word, DIHEDRAL)) == word_model(word, 1)


@given(words(), words())
def test_factorization_round_trips(a, b):
    for w in (a, b):
        m = normal_form(w, DIHEDRAL)
        assert from_integer_map(to_integer_map(m), DIHEDRAL) == m


@given(st.data())
def test_composition_is_associative(data):
    levels = [data.draw(st.integers(0, 2)) for _ in range(4)]
    ms = [data.draw(st.sampled_from(enumerate_hom(levels[k], levels[k + 1], DIHEDRAL))) for k in range(3)]
    a, b, c = ms[2], ms[1], ms[0]
    assert compose_crossed(compose_crossed(a, b), c) == compose_crossed(a, compose_crossed(b, c))


def test_face_embeds_as_a_crossed_morphism():
    m = normal_form("d1", CYCLIC, 2)
    assert m.phi == face(1, 2) and m.g.is_identity
