import pytest
from hypothesis import given, settings, strategies as st

from spincrystal import cartan_core, perfect_crystal as pc


def test_level_one_count_and_minimal_count():
    elems = pc.enumerate_level(1)
    assert len(elems) == 16
    assert sum(1 for e in elems if pc.is_minimal(e)) == 4


def test_enumeration_guard():
    for bad in (0, 5, -1, "2"):
        with pytest.raises(ValueError):
            pc.enumerate_level(bad)
    with pytest.raises(ValueError):
        pc.crystal_graph(4)


def test_unit_minimal_spin_node_frozen_lowering():
    b05 = pc.unit_minimal(5)
    lowered = pc.f_tilde(5, b05)
    ones = {(1, 1), (2, 2), (3, 3), (4, 5), (5, 6)}
    for i in range(1, 6):
        for j in range(i, i + 5):
            assert lowered.b(i, j) == (1 if (i, j) in ones else 0)
    assert pc.eps_k(5, b05) == 0
    assert pc.phi_k(5, b05) == 1


def test_unit_minimal_direction_one_frozen():
    b01 = pc.unit_minimal(1)
    assert pc.e_tilde(1, b01) is None
    lowered = pc.f_tilde(1, b01)
    ones = {(1, 2), (2, 5), (3, 6), (4, 7), (5, 9)}
    for i in range(1, 6):
        for j in range(i, i + 5):
            assert lowered.b(i, j) == (1 if (i, j) in ones else 0)


def test_unit_minimal_affine_node_weights():
    b00 = pc.unit_minimal(0)
    assert pc.eps_weight(b00) == cartan_core.fundamental_weight(4)
    assert pc.phi_weight(b00) == cartan_core.fundamental_weight(0)


@given(st.lists(st.integers(0, 3), min_size=6, max_size=6))
@settings(max_examples=40, deadline=None)
def test_minimal_from_weights_string_data(a_vals):
    a = tuple(a_vals)
    if cartan_core.level(a) == 0:
        return
    b0 = pc.minimal_from_weights(a)
    assert pc.is_member(b0)
    assert pc.phi_weight(b0) == a
    assert pc.eps_weight(b0) == tuple(a[cartan_core.SIGMA[k]]
                                      for k in range(6))


def test_limit_zero_element():
    zero = pc.zero_limit()
    assert pc.is_member(zero)
    for k in range(6):
        assert pc.wt_k(k, zero) == 0
    raised = pc.e_tilde(0, zero)
    assert raised is not None
    assert pc.zero_case_matches(zero) == [5]
    assert pc.f_tilde(0, raised) == zero


def test_zero_case_unique_on_enumeration():
    for elem in pc.enumerate_level(1):
        if pc.e_tilde(0, elem) is not None:
            assert len(pc.zero_case_matches(elem)) == 1
        if pc.f_tilde(0, elem) is not None:
            assert len(pc.zero_case_matches(elem, lowering=True)) == 1


def test_membership_rejects_tampering():
    good = pc.unit_minimal(0)
    rows = [list(r) for r in good.rows]
    rows[0][0] += 1
    assert not pc.is_member(pc.PCElement(tuple(map(tuple, rows)),
                                         "finite", good.l))


def test_json_roundtrip():
    for elem in pc.enumerate_level(1)[:4] + [pc.zero_limit()]:
        data = pc.element_to_dict(elem)
        assert pc.element_from_dict(data) == elem
    with pytest.raises(ValueError):
        pc.element_from_dict({"regime": "finite", "l": 1,
                              "rows": [[9] * 5] * 5})
    with pytest.raises(ValueError):
        pc.element_from_dict({"rows": "nope"})


def test_axiom_suite_level_one():
    report = pc.verify_crystal(1)
    assert report["ok"] and report["failures"] == 0
    assert report["size"] == 16
