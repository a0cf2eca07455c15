import pytest
from hypothesis import given, settings, strategies as st

from spincrystal import cartan_core, coherent_family as cf
from spincrystal import perfect_crystal as pc


def test_tensor_requires_finite_middle():
    with pytest.raises(ValueError):
        cf.TensorElement((0,) * 6, pc.zero_limit(), (0,) * 6)


def test_tensor_string_shifts():
    b = pc.unit_minimal(5)
    lam = (1, 0, 0, 0, 0, 2)
    mu = (0, 3, 0, 0, 0, 0)
    t = cf.TensorElement(lam, b, mu)
    for k in range(6):
        assert cf.tensor_eps(k, t) == pc.eps_k(k, b) - lam[k]
        assert cf.tensor_phi(k, t) == pc.phi_k(k, b) + mu[k]
    assert cf.tensor_wt(t) == tuple(
        lam[k] + mu[k] + pc.wt_k(k, b) for k in range(6))


@given(st.lists(st.integers(0, 2), min_size=6, max_size=6))
@settings(max_examples=40, deadline=None)
def test_minimal_construction_routes_agree(a_vals):
    a = tuple(a_vals)
    if cartan_core.level(a) == 0:
        return
    assert cf.minimal_from_a(a) == pc.minimal_from_weights(a)


def test_frozen_embedding_of_lowered_spin_unit():
    b05 = pc.unit_minimal(5)
    lowered = pc.f_tilde(5, b05)
    t = cf.standard_tensor(b05, lowered)
    image = cf.embed(1, b05, t)
    expected = {(4, 4): -1, (5, 5): -1, (4, 5): 1, (5, 6): 1}
    for i in range(1, 6):
        for j in range(i, i + 5):
            assert image.b(i, j) == expected.get((i, j), 0)


def test_embed_precondition_checks():
    b05 = pc.unit_minimal(5)
    other = pc.enumerate_level(1)[1]
    t = cf.standard_tensor(b05, other)
    wrong = cf.TensorElement((0,) * 6, other, (0,) * 6)
    with pytest.raises(ValueError):
        cf.embed(1, b05, wrong)


def test_frozen_preimage_of_origin():
    l, a, inner = cf.preimage(pc.zero_limit())
    assert l == 1
    assert a == (1, 0, 0, 0, 0, 0)
    assert inner == pc.unit_minimal(0)


def test_coherence_suite_small_run():
    report = cf.verify_coherence(samples=60, seed=9, levels=(1,),
                                 level3_samples=5)
    assert report["ok"] and report["failures"] == 0
    assert report["null_audit"] > 0
