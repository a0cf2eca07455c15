import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from spincrystal import geometric_crystal as gc
from spincrystal.formula_corpus import WORD_X, X_VARS


def F(n, d=1):
    return Fraction(n, d)


_fractions = st.fractions(
    min_value=Fraction(1, 4), max_value=Fraction(4)).filter(lambda f: f != 0)


def test_frozen_string_values_at_ones():
    pt = gc.ones("x")
    assert gc.eps(0, pt) == 5
    assert gc.eps(4, pt) == 2
    assert gc.eps(1, pt) == 1


def test_frozen_weight_value():
    env = gc.ones("x").env()
    env.update(x2_2=F(2), x2_1=F(3))
    assert gc.gamma(0, gc.from_env("x", env)) == F(1, 6)


def test_frozen_zero_action_at_ones():
    out = gc.e_action(0, F(2), gc.ones("x"))
    env = out.env()
    assert env["x2_2"] == F(1, 2)
    assert env["x1_1"] == F(1, 2)
    assert env["x2_1"] == F(1, 2)


def test_frozen_twist_at_ones():
    env = gc.sigma_bar(gc.ones("x")).env()
    expected = {"y4_2": F(3), "y3_3": F(2), "y3_2": F(2), "y3_1": F(1, 4),
                "y2_2": F(2), "y2_1": F(1, 2), "y4_1": F(1, 3)}
    for name, val in expected.items():
        assert env[name] == val
    for name in set(env) - set(expected):
        assert env[name] == 1
    assert gc.twist_scale_factor(gc.ones("x")) == 1


def test_unit_parameter_is_identity():
    pt = gc.ones("x")
    for k in gc.X_DIRECTIONS:
        assert gc.e_action(k, F(1), pt) == pt


def test_zero_parameter_rejected():
    with pytest.raises(ValueError):
        gc.e_action(2, F(0), gc.ones("x"))


def test_undirected_frame_direction_rejected():
    with pytest.raises(ValueError):
        gc.gamma(1, gc.ones("y"))


@given(st.lists(_fractions, min_size=10, max_size=10), _fractions,
       _fractions)
@settings(max_examples=30, deadline=None)
def test_group_law_direction_three(vals, c1, c2):
    pt = gc.GeomPoint("x", tuple(vals))
    lhs = gc.e_action(3, c1, gc.e_action(3, c2, pt))
    assert lhs == gc.e_action(3, c1 * c2, pt)


@given(st.lists(_fractions, min_size=10, max_size=10))
@settings(max_examples=30, deadline=None)
def test_twist_roundtrip(vals):
    pt = gc.GeomPoint("x", tuple(vals))
    assert gc.sigma_bar_inv(gc.sigma_bar(pt)) == pt


@given(st.lists(_fractions, min_size=10, max_size=10), _fractions)
@settings(max_examples=30, deadline=None)
def test_closed_zero_action_equals_twist_route(vals, c):
    pt = gc.GeomPoint("x", tuple(vals))
    assert gc.e_zero_closed(c, pt) == gc.e_zero_twisted(c, pt)


def test_decorated_vector_identity_at_random_points():
    rng = random.Random(31)
    for _ in range(5):
        assert gc.verify_sigma_equation(gc.random_point(rng, "x"))


def test_generic_word_recipe_matches_specialized():
    rng = random.Random(99)
    for _ in range(5):
        pt = gc.random_point(rng, "x")
        coords = tuple(pt.env()[name] for name in X_VARS)
        c = gc.random_param(rng)
        for k in (1, 2, 3, 4, 5):
            assert gc.generic_gamma(WORD_X, coords, k) == gc.gamma(k, pt)
            assert gc.generic_eps(WORD_X, coords, k) == gc.eps(k, pt)
            moved = gc.generic_e_action(WORD_X, coords, k, c)
            specialized = gc.e_action(k, c, pt)
            assert moved == tuple(specialized.env()[n] for n in X_VARS)


def test_axiom_suite_small_run():
    report = gc.verify_axioms(gc.SampleConfig(seed=5, count=15, bound=5))
    assert report["ok"] and report["failures"] == 0
    assert set(report["relations"]) == {
        "identity_parameter_one", "parameter_group_law",
        "weight_character_shift", "string_function_shift",
        "commuting_pairs", "linked_pairs", "twist_intertwines_actions",
        "twist_intertwines_invariants", "twist_roundtrip",
        "decorated_vector_identity"}
