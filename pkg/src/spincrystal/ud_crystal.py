"""Piecewise-linear crystal on Z^10 and its isomorphism with the limit regime.

The point coordinates follow the x-frame factorization order.  Every
operator here is a hand-coded piecewise-linear map; the test suites and
the verification entry points below compare them against the machine
tropicalization of the rational formulas in ``formula_corpus`` and
against transport through the triangular-array realization, so the three
derivations must agree pointwise.

The direction-0 lowering gate system exists in two variants: "transport"
(obtained by rewriting the triangular-array gates through the coordinate
change, the default) and "printed" (the alternative reading with a weak
second gate and a shifted third gate in case 4).  verify_ud_match emits
agreement evidence for both so the discrepancy is visible, not silent.
"""

import random
from typing import NamedTuple

from . import cartan_core, perfect_crystal, tropicalizer
from . import formula_corpus as corpus


class UDPoint(NamedTuple):
    x4_2: int
    x3_3: int
    x2_2: int
    x5_2: int
    x3_2: int
    x4_1: int
    x1_1: int
    x2_1: int
    x3_1: int
    x5_1: int


assert UDPoint._fields == corpus.X_VARS

DIRECTIONS = (0, 1, 2, 3, 4, 5)
ZERO_GATE_VARIANTS = ("transport", "printed")


def point_from_list(vals):
    vals = tuple(int(v) for v in vals)
    if len(vals) != 10:
        raise ValueError("expected ten integers")
    return UDPoint(*vals)


def _pos(v):
    return v if v > 0 else 0


# ------------------------------------------------------------ string data


def ud_wt_k(k, x):
    x = UDPoint(*x)
    if k == 0:
        return -x.x2_2 - x.x2_1
    if k == 1:
        return 2 * x.x1_1 - x.x2_2 - x.x2_1
    if k == 2:
        return (-x.x1_1 + 2 * x.x2_2 - x.x3_3
                + 2 * x.x2_1 - x.x3_2 - x.x3_1)
    if k == 3:
        return (-x.x2_2 + 2 * x.x3_3 - x.x4_2 - x.x2_1 + 2 * x.x3_2
                - x.x5_2 + 2 * x.x3_1 - x.x4_1 - x.x5_1)
    if k == 4:
        return -x.x3_3 + 2 * x.x4_2 - x.x3_2 - x.x3_1 + 2 * x.x4_1
    if k == 5:
        return -x.x3_3 - x.x3_2 + 2 * x.x5_2 - x.x3_1 + 2 * x.x5_1
    raise ValueError("bad direction %r" % (k,))


def ud_eps_k(k, x):
    x = UDPoint(*x)
    if k == 0:
        return max(x.x5_1,
                   x.x2_2 - x.x3_3 + x.x3_1,
                   x.x3_2 - x.x5_2 + x.x3_1,
                   x.x2_2 - x.x4_2 + x.x2_1,
                   x.x2_2 - x.x3_3 + x.x2_1 - x.x3_2 + x.x4_1)
    if k == 1:
        return -x.x1_1 + x.x2_2
    if k == 2:
        return max(-x.x2_2 + x.x3_3,
                   x.x1_1 - 2 * x.x2_2 + x.x3_3 - x.x2_1 + x.x3_2)
    if k == 3:
        return max(-x.x3_3 + x.x4_2,
                   x.x2_2 - 2 * x.x3_3 + x.x4_2 - x.x3_2 + x.x5_2,
                   x.x2_2 - 2 * x.x3_3 + x.x4_2 + x.x2_1 - 2 * x.x3_2
                   + x.x5_2 - x.x3_1 + x.x4_1)
    if k == 4:
        return max(-x.x4_2, x.x3_3 + x.x3_2 - 2 * x.x4_2 - x.x4_1)
    if k == 5:
        return max(x.x3_3 - x.x5_2,
                   x.x3_3 + x.x3_2 - 2 * x.x5_2 + x.x3_1 - x.x5_1)
    raise ValueError("bad direction %r" % (k,))


def ud_phi_k(k, x):
    return ud_wt_k(k, x) + ud_eps_k(k, x)


# -------------------------------------------------- one-parameter actions


def ud_e(k, c, x):
    """Piecewise-linear one-parameter action; c = 0 is the identity."""
    x = UDPoint(*x)
    c = int(c)
    if k == 0:
        return _zero_action(c, x)
    if k == 1:
        return x._replace(x1_1=x.x1_1 + c)
    if k == 2:
        c2 = (max(c + x.x2_2 + x.x2_1, x.x3_2 + x.x1_1)
              - max(x.x2_2 + x.x2_1, x.x3_2 + x.x1_1))
        return x._replace(x2_2=x.x2_2 + c2, x2_1=x.x2_1 + c - c2)
    if k == 3:
        s = x.x3_3 + 2 * x.x3_2 + x.x3_1
        t1 = x.x2_2 + x.x5_2 + x.x3_2 + x.x3_1
        t2 = x.x2_2 + x.x5_2 + x.x4_1 + x.x2_1
        c31 = max(c + s, t1, t2) - max(s, t1, t2)
        c32 = max(c + s, c + t1, t2) - max(c + s, t1, t2)
        return x._replace(x3_3=x.x3_3 + c31, x3_2=x.x3_2 + c32,
                          x3_1=x.x3_1 + c - c31 - c32)
    if k == 4:
        c4 = (max(c + x.x4_2 + x.x4_1, x.x3_3 + x.x3_2)
              - max(x.x4_2 + x.x4_1, x.x3_3 + x.x3_2))
        return x._replace(x4_2=x.x4_2 + c4, x4_1=x.x4_1 + c - c4)
    if k == 5:
        c5 = (max(c + x.x5_2 + x.x5_1, x.x3_2 + x.x3_1)
              - max(x.x5_2 + x.x5_1, x.x3_2 + x.x3_1))
        return x._replace(x5_2=x.x5_2 + c5, x5_1=x.x5_1 + c - c5)
    raise ValueError("bad direction %r" % (k,))


def _zero_action(c, x):
    b_br = x.x3_1 + max(x.x2_2 - x.x3_3, x.x3_2 - x.x5_2)
    c_br = x.x2_2 + x.x2_1 + max(-x.x4_2, x.x4_1 - x.x3_3 - x.x3_2)
    a_br = max(b_br, c_br)
    bottom = max(x.x5_1, a_br)
    shifted = max(c + x.x5_1, a_br)
    m = max(c + x.x5_1, c + b_br, c_br)
    n = max(m, x.x2_2 + x.x5_2 - x.x3_3 - x.x3_2 + shifted)
    mid = max(x.x2_2 + x.x5_2 - x.x3_3, x.x3_2)
    pair = max(x.x3_3 + x.x3_2, x.x4_2 + x.x4_1)
    pair_m = max(x.x4_2 + x.x4_1, -c + x.x3_3 + x.x3_2 - bottom + m)
    return UDPoint(
        x4_2=x.x4_2 - pair + pair_m,
        x3_3=-c + x.x3_3 + x.x3_2 - bottom - mid + n,
        x2_2=x.x2_2 - c,
        x5_2=-c + x.x5_2 - bottom + shifted,
        x3_2=-c + mid + m - n,
        x4_1=-c + x.x4_1 + pair - pair_m,
        x1_1=x.x1_1 - c,
        x2_1=x.x2_1 - c,
        x3_1=x.x3_1 + bottom - m,
        x5_1=x.x5_1 + bottom - shifted,
    )


# -------------------------------------------- direct branch-rule operators


def lower_moves_direct(k, x):
    """Field decrements of the direct lowering table for k in 1..5."""
    x = UDPoint(*x)
    if k == 1:
        return {"x1_1": -1}
    if k == 2:
        if x.x2_2 + x.x2_1 > x.x1_1 + x.x3_2:
            return {"x2_2": -1}
        return {"x2_1": -1}
    if k == 3:
        u = x.x3_3 + x.x3_2 - x.x2_2 - x.x5_2
        v = x.x3_2 + x.x3_1 - x.x2_1 - x.x4_1
        if u > 0 and u + v > 0:
            return {"x3_3": -1}
        if u <= 0 and v > 0:
            return {"x3_2": -1}
        if v <= 0 and u + v <= 0:
            return {"x3_1": -1}
        raise AssertionError("direction-3 branch conditions are total")
    if k == 4:
        if x.x4_2 + x.x4_1 > x.x3_3 + x.x3_2:
            return {"x4_2": -1}
        return {"x4_1": -1}
    if k == 5:
        if x.x5_2 + x.x5_1 > x.x3_2 + x.x3_1:
            return {"x5_2": -1}
        return {"x5_1": -1}
    raise ValueError("no direct lowering table for direction %r" % (k,))


# slot increments of the five direction-0 lowering cases, in field order
_ZERO_LOWER_STEPS = (
    (1, 1, 1, 1, 1, 0, 1, 1, 0, 0),
    (0, 1, 1, 1, 1, 1, 1, 1, 0, 0),
    (0, 1, 1, 1, 0, 1, 1, 1, 1, 0),
    (0, 0, 1, 1, 1, 1, 1, 1, 1, 0),
    (0, 0, 1, 0, 1, 1, 1, 1, 1, 1),
)


def zero_lower_matches(x, variant="transport"):
    """1-based indices of the direction-0 lowering gates that hold."""
    x = UDPoint(*x)
    pa = _pos(-x.x2_2 + x.x3_3 + x.x3_2 - x.x5_2)
    pb = _pos(-x.x3_3 + x.x4_2 - x.x3_2 + x.x4_1)
    gate1 = (x.x2_2 + x.x2_1 >= x.x4_2 + x.x5_1
             and x.x3_3 + x.x3_2 >= x.x4_2 + x.x4_1
             and x.x3_3 + x.x2_1 >= x.x4_2 + x.x3_1 + pa)
    gate2 = (x.x2_2 + x.x2_1 + x.x4_1 >= x.x3_3 + x.x3_2 + x.x5_1
             and x.x4_2 + x.x4_1 > x.x3_3 + x.x3_2
             and x.x2_1 + x.x4_1 >= x.x3_2 + x.x3_1 + pa)
    gate3 = (x.x2_2 + x.x3_1 >= x.x3_3 + x.x5_1
             and x.x2_2 + x.x5_2 >= x.x3_3 + x.x3_2
             and x.x4_2 + x.x3_1 > x.x3_3 + x.x2_1 + pb)
    if variant == "transport":
        gate4 = (x.x3_2 + x.x3_1 >= x.x5_2 + x.x5_1
                 and x.x3_3 + x.x3_2 > x.x2_2 + x.x5_2
                 and x.x4_2 + x.x3_2 + x.x3_1
                 > x.x2_2 + x.x2_1 + x.x5_2 + pb)
    elif variant == "printed":
        gate4 = (x.x3_2 + x.x3_1 >= x.x5_2 + x.x5_1
                 and x.x3_3 + x.x3_2 >= x.x2_2 + x.x5_2
                 and x.x4_2 + x.x3_2 + x.x3_1
                 > x.x2_2 + x.x2_1 + (x.x5_2 - x.x3_2) + pb)
    else:
        raise ValueError("unknown gate variant %r" % (variant,))
    gate5 = (x.x3_3 + x.x5_1 > x.x2_2 + x.x3_1 + pa
             and x.x4_2 + x.x5_1 > x.x2_2 + x.x2_1 + pb)
    gates = (gate1, gate2, gate3, gate4, gate5)
    return [n + 1 for n in range(5) if gates[n]]


def f_tilde_zero_direct(x, variant="transport"):
    """Direct direction-0 lowering via the gate table; None if no gate."""
    x = UDPoint(*x)
    matches = zero_lower_matches(x, variant)
    if not matches:
        return None
    steps = _ZERO_LOWER_STEPS[matches[0] - 1]
    return UDPoint(*(v + d for v, d in zip(x, steps)))


def e_tilde(k, x):
    """Raising operator; direction 0 is gated through the array realization."""
    x = UDPoint(*x)
    if k == 0:
        if not perfect_crystal.zero_case_matches(omega_inv(x)):
            return None
        return ud_e(0, 1, x)
    return ud_e(k, 1, x)


def f_tilde(k, x):
    """Lowering operator; direction 0 uses the direct gate table."""
    x = UDPoint(*x)
    if k == 0:
        return f_tilde_zero_direct(x)
    return ud_e(k, -1, x)


# ------------------------------------------------- the coordinate change


def omega(elem):
    """Prefix-sum coordinates of a limit-regime triangular array."""
    if elem.regime != "limit":
        raise ValueError("expected a limit-regime element")
    b = elem.b
    return UDPoint(
        x4_2=b(1, 1) + b(1, 2) + b(1, 3) + b(1, 4),
        x3_3=b(1, 1) + b(1, 2) + b(1, 3),
        x2_2=b(1, 1) + b(1, 2),
        x5_2=b(2, 2) + b(2, 3) + b(2, 4),
        x3_2=b(2, 2) + b(2, 3),
        x4_1=b(3, 3) + b(3, 4),
        x1_1=b(1, 1),
        x2_1=b(2, 2),
        x3_1=b(3, 3),
        x5_1=b(4, 4),
    )


def omega_inv(x):
    """Triangular array recovered from the ten prefix-sum coordinates."""
    x = UDPoint(*x)
    rows = (
        (x.x1_1, x.x2_2 - x.x1_1, x.x3_3 - x.x2_2,
         x.x4_2 - x.x3_3, -x.x4_2),
        (x.x2_1, x.x3_2 - x.x2_1, x.x5_2 - x.x3_2,
         x.x4_2 - x.x5_2, -x.x4_2),
        (x.x3_1, x.x4_1 - x.x3_1, x.x5_2 - x.x4_1,
         x.x3_3 - x.x5_2, -x.x3_3),
        (x.x5_1, x.x4_1 - x.x5_1, x.x3_2 - x.x4_1,
         x.x2_2 - x.x3_2, -x.x2_2),
        (x.x5_1, x.x3_1 - x.x5_1, x.x2_1 - x.x3_1,
         x.x1_1 - x.x2_1, -x.x1_1),
    )
    return perfect_crystal.PCElement(rows, "limit", None)


# ----------------------------------------------------- verification suites


_TROP = None


def _trop_ops():
    """Tropicalized compilations of the rational x-frame formulas."""
    global _TROP
    if _TROP is not None:
        return _TROP
    aux = {name: tropicalizer.parse(text)
           for name, text in corpus.E_AUX_X.items()}
    aux.update({name: tropicalizer.parse(text)
                for name, text in (("B", corpus.B_X), ("C", corpus.C_X),
                                   ("A", corpus.A_X))})

    def trop(expr):
        return tropicalizer.compile_trop(tropicalizer.tropicalize(expr))

    action = {}
    for k, slots in corpus.E_ACTION_X.items():
        action[k] = {
            var: trop(tropicalizer.substitute(tropicalizer.parse(text), aux))
            for var, text in slots.items()}
    _TROP = {
        "gamma": {k: trop(tropicalizer.parse(s))
                  for k, s in corpus.GAMMA_X.items()},
        "eps": {k: trop(tropicalizer.parse(s))
                for k, s in corpus.EPS_X.items()},
        "action": action,
    }
    return _TROP


def _sample_point(rng, box):
    return UDPoint(*(rng.randint(-box, box) for _ in range(10)))


def verify_ud_match(samples=10000, box=5, seed=0):
    """Compare the hand-coded piecewise-linear layer against the machine
    tropicalization of the rational layer and against array transport.

    The returned report carries per-relation counts, the first failing
    witness, and the gate-variant evidence for the direction-0 lowering.
    """
    rng = random.Random(seed)
    trop = _trop_ops()
    rel = {name: {"checked": 0, "failures": 0, "witness": None}
           for name in ("weight_vs_tropicalized", "string_vs_tropicalized",
                        "action_vs_tropicalized", "lower_table_vs_action",
                        "zero_lower_three_way")}
    evidence = {variant: {"defined_both": 0, "value_mismatch": 0,
                          "definedness_mismatch": 0}
                for variant in ZERO_GATE_VARIANTS}

    def record(name, ok, witness):
        rel[name]["checked"] += 1
        if not ok:
            rel[name]["failures"] += 1
            if rel[name]["witness"] is None:
                rel[name]["witness"] = witness

    for _ in range(samples):
        x = _sample_point(rng, box)
        c = rng.randint(-3, 3)
        env = dict(zip(corpus.X_VARS, x))
        env["c"] = c
        for k in DIRECTIONS:
            record("weight_vs_tropicalized",
                   ud_wt_k(k, x) == trop["gamma"][k](env),
                   {"k": k, "x": list(x)})
            record("string_vs_tropicalized",
                   ud_eps_k(k, x) == trop["eps"][k](env),
                   {"k": k, "x": list(x)})
            got = ud_e(k, c, x)
            slots = trop["action"][k]
            want = UDPoint(*(slots[name](env) if name in slots else env[name]
                             for name in corpus.X_VARS))
            record("action_vs_tropicalized", got == want,
                   {"k": k, "c": c, "x": list(x)})
        for k in (1, 2, 3, 4, 5):
            moves = lower_moves_direct(k, x)
            direct = x._replace(**{f: getattr(x, f) + d
                                   for f, d in moves.items()})
            record("lower_table_vs_action", direct == ud_e(k, -1, x),
                   {"k": k, "x": list(x)})

        limit_elem = omega_inv(x)
        lowered = perfect_crystal.f_tilde(0, limit_elem)
        via_array = None if lowered is None else omega(lowered)
        via_formula = ud_e(0, -1, x)
        for variant in ZERO_GATE_VARIANTS:
            direct = f_tilde_zero_direct(x, variant)
            ev = evidence[variant]
            if (direct is None) != (via_array is None):
                ev["definedness_mismatch"] += 1
            elif direct is not None:
                ev["defined_both"] += 1
                if direct != via_array or direct != via_formula:
                    ev["value_mismatch"] += 1
        default = f_tilde_zero_direct(x, "transport")
        ok = ((default is None) == (via_array is None)
              and (default is None or (default == via_array
                                       and default == via_formula)))
        record("zero_lower_three_way", ok, {"x": list(x)})

    failures = sum(r["failures"] for r in rel.values())
    return {"seed": seed, "samples": samples, "box": box,
            "relations": rel, "zero_gate_evidence": evidence,
            "failures": failures, "ok": failures == 0}


def verify_isomorphism(samples=10000, box=8, seed=0):
    """Roundtrip, intertwining, and preservation checks for the
    coordinate change between Z^10 and the limit regime."""
    rng = random.Random(seed)
    rel = {name: {"checked": 0, "failures": 0, "witness": None}
           for name in ("roundtrip", "membership", "intertwine_raise",
                        "intertwine_lower", "string_preserved",
                        "weight_preserved", "weight_step")}

    def record(name, ok, witness):
        rel[name]["checked"] += 1
        if not ok:
            rel[name]["failures"] += 1
            if rel[name]["witness"] is None:
                rel[name]["witness"] = witness

    for _ in range(samples):
        x = _sample_point(rng, box)
        b = omega_inv(x)
        record("membership", perfect_crystal.is_member(b), {"x": list(x)})
        record("roundtrip", omega(b) == x and omega_inv(omega(b)) == b,
               {"x": list(x)})
        for k in DIRECTIONS:
            be = perfect_crystal.e_tilde(k, b)
            xe = e_tilde(k, x)
            ok = ((be is None) == (xe is None)
                  and (be is None or omega(be) == xe))
            record("intertwine_raise", ok, {"k": k, "x": list(x)})
            bf = perfect_crystal.f_tilde(k, b)
            xf = f_tilde(k, x)
            ok = ((bf is None) == (xf is None)
                  and (bf is None or omega(bf) == xf))
            record("intertwine_lower", ok, {"k": k, "x": list(x)})
            record("string_preserved",
                   ud_eps_k(k, x) == perfect_crystal.eps_k(k, b)
                   and ud_phi_k(k, x) == perfect_crystal.phi_k(k, b),
                   {"k": k, "x": list(x)})
            record("weight_preserved",
                   ud_wt_k(k, x) == perfect_crystal.wt_k(k, b),
                   {"k": k, "x": list(x)})
            if xe is not None:
                ok = all(ud_wt_k(j, xe) - ud_wt_k(j, x)
                         == cartan_core.entry(j, k) for j in DIRECTIONS)
                record("weight_step", ok, {"k": k, "x": list(x)})

    failures = sum(r["failures"] for r in rel.values())
    return {"seed": seed, "samples": samples, "box": box,
            "relations": rel, "failures": failures, "ok": failures == 0}
