import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tripants import freegroup as fg
from tripants import pushmap as pm
from tripants.errors import NotBasis, WordParseError
from tripants.explorer import fiber_distance
from tripants.farey import project
from tripants.freegroup import FreeWord as W
from tripants.pushmap import Automorphism, PushGen
from tripants.triarc import make_tri_arc

push_words = st.text(alphabet="aAbB", max_size=12)


def test_along_a_on_base(base):
    assert pm.apply_push("a", base) == make_tri_arc("a", "abA", "aabA")
    assert pm.apply_push((PushGen.ALONG_G1,), base) == make_tri_arc("a", "abA", "aabA")


@pytest.mark.parametrize(
    "gen, triple",
    [
        # b' = a b a^-1, c' = a^2 b a^-1
        (PushGen.ALONG_G1, ("a", "abA", "aabA")),
        # c' = b a, b' = a^-1 b a
        (PushGen.ALONG_G1_INVERSE, ("a", "Aba", "ba")),
        # c' = b a, a' = b a b^-1
        (PushGen.ALONG_G2, ("baB", "b", "ba")),
        # a' = b^-1 a b, c' = b^-1 a b^2
        (PushGen.ALONG_G2_INVERSE, ("Bab", "b", "Babb")),
    ],
)
def test_four_generator_cases(base, gen, triple):
    assert pm.apply_push((gen,), base) == make_tri_arc(*triple)
    assert fiber_distance(base, pm.apply_push((gen,), base), 4) == 2


def test_generators_are_bases_fixing_one_letter():
    for g in PushGen:
        auto = pm.push_generator(g)
        assert fg.is_basis(*auto.images)
        assert fg.G1 in auto.images or fg.G2 in auto.images
        assert pm.push_generator(g.inverse()).compose(auto) == pm.IDENTITY_AUTO
    assert pm.push_generator(PushGen.ALONG_G2_INVERSE).image_g2 == fg.G2


def test_automorphism_requires_basis():
    with pytest.raises(NotBasis):
        Automorphism(W("a"), W("aa"))


def test_push_word_parsing():
    assert pm.parse_push_word("aB") == (PushGen.ALONG_G1, PushGen.ALONG_G2_INVERSE)
    with pytest.raises(WordParseError):
        pm.parse_push_word("ac")


def test_push_auto_examples():
    assert pm.push_auto("") == pm.IDENTITY_AUTO
    assert pm.push_auto("abBA") == pm.IDENTITY_AUTO
    # order matters: the group is not abelian
    assert pm.push_auto("ab") != pm.push_auto("ba")


def test_push_auto_composition_order():
    rng = random.Random(5)
    for _ in range(1000):
        t1 = "".join(rng.choice("aAbB") for _ in range(rng.randint(0, 5)))
        t2 = "".join(rng.choice("aAbB") for _ in range(rng.randint(0, 5)))
        assert pm.push_auto(t1 + t2) == pm.push_auto(t2).compose(pm.push_auto(t1))


@given(push_words)
def test_inverse_word_cancels(theta):
    assert pm.push_auto(pm.inverse_word(theta)).compose(pm.push_auto(theta)) == pm.IDENTITY_AUTO
    assert pm.push_auto(theta).compose(pm.push_auto(pm.inverse_word(theta))) == pm.IDENTITY_AUTO


@given(push_words)
def test_forget_and_basis(theta):
    auto = pm.push_auto(theta)
    assert pm.forget_check(auto)
    assert fg.is_basis(*auto.images)


def test_forget_check_examples():
    assert pm.forget_check(pm.push_generator(PushGen.ALONG_G1))
    assert pm.forget_check(pm.IDENTITY_AUTO)
    assert not pm.forget_check(Automorphism(fg.G2, fg.G1))


def test_pushes_stay_in_fiber(ball2):
    rng = random.Random(9)
    thetas = ["".join(p) for n in range(3) for p in itertools.product("aAbB", repeat=n)]
    thetas += ["".join(rng.choice("aAbB") for _ in range(rng.randint(3, 6))) for _ in range(20)]
    for t in ball2.vertices:
        assert pm.apply_push("", t) == t
        for theta in thetas:
            assert project(pm.apply_push(theta, t)) == project(t)


def test_local_generator_pushes_are_two_big_flips(ball2):
    for t in ball2.vertices:
        for g in PushGen:
            pushed = pm.apply_local_push((g,), t)
            assert project(pushed) == project(t)
            assert fiber_distance(t, pushed, 4) == 2


def test_global_generator_pushes_are_even(ball2):
    for t in ball2.vertices:
        for g in PushGen:
            d = fiber_distance(t, pm.apply_push((g,), t), 8)
            assert d is not None and d > 0 and d % 2 == 0


def test_local_push_agrees_with_global_on_base(base):
    for theta in ("a", "A", "b", "B", "abAB", "bbA"):
        assert pm.apply_local_push(theta, base) == pm.apply_push(theta, base)
