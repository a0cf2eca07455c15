"""Weight-shifted tensor crystals and their embeddings into the limit regime.

A tensor element sandwiches a finite crystal element between two formal
weight shifts: the operators act through the middle factor, the string
functions shift by the pairings against the outer weights, and the weight
adds all three.  Choosing the outer weights from a minimal element b0
makes the entrywise difference b - b0 an embedding into the limit regime,
and the printed max-formulas reconstruct (l, a, b) from any limit element.
"""

import random
from dataclasses import dataclass

from . import cartan_core, perfect_crystal


@dataclass(frozen=True)
class TensorElement:
    lam: tuple
    b: perfect_crystal.PCElement
    mu: tuple

    def __post_init__(self):
        lam = tuple(int(v) for v in self.lam)
        mu = tuple(int(v) for v in self.mu)
        if len(lam) != 6 or len(mu) != 6:
            raise ValueError("outer weights must have six coordinates")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        if self.b.regime != "finite":
            raise ValueError("the middle factor must be a finite element")


def tensor_e_tilde(k, t):
    out = perfect_crystal.e_tilde(k, t.b)
    if out is None:
        return None
    return TensorElement(t.lam, out, t.mu)


def tensor_f_tilde(k, t):
    out = perfect_crystal.f_tilde(k, t.b)
    if out is None:
        return None
    return TensorElement(t.lam, out, t.mu)


def tensor_eps(k, t):
    return perfect_crystal.eps_k(k, t.b) - t.lam[k]


def tensor_phi(k, t):
    return perfect_crystal.phi_k(k, t.b) + t.mu[k]


def tensor_wt(t):
    return cartan_core.add_weights(cartan_core.add_weights(t.lam, t.mu),
                                   perfect_crystal.wt(t.b))


def tensor_ops(k, t):
    """All five crystal quantities of the tensor element in direction k."""
    return {"e_tilde": tensor_e_tilde(k, t),
            "f_tilde": tensor_f_tilde(k, t),
            "eps": tensor_eps(k, t),
            "phi": tensor_phi(k, t),
            "wt": tensor_wt(t)}


def minimal_from_a(a):
    """Minimal element from its coefficient vector, entry by entry.

    This is an independent route to the same arrays as
    perfect_crystal.minimal_from_weights; the two are cross-checked in the
    test suite.
    """
    a0, a1, a2, a3, a4, a5 = (int(v) for v in a)
    if min(a0, a1, a2, a3, a4, a5) < 0:
        raise ValueError("coefficients must be nonnegative")
    rows = ((a1 + a2 + a3 + a5, a4, a3, a2, a0),
            (a2 + a3 + a5, a4, a3, a1 + a2, a0),
            (a3 + a5, a4, a2 + a3, a1, a0 + a2),
            (a5, a3 + a4, a2, a1, a0 + a2 + a3),
            (a5, a3, a2, a1, a0 + a2 + a3 + a4))
    l = cartan_core.level((a0, a1, a2, a3, a4, a5))
    if l < 1:
        raise ValueError("coefficient vector has level 0")
    return perfect_crystal.PCElement(rows, "finite", l)


def standard_tensor(b0, b):
    """Tensor element with the outer weights dictated by b0."""
    return TensorElement(perfect_crystal.eps_weight(b0), b,
                         cartan_core.negate_weight(
                             perfect_crystal.phi_weight(b0)))


def embed(l, b0, t):
    """Entrywise difference map into the limit regime."""
    if b0.regime != "finite" or b0.l != l:
        raise ValueError("base point must be finite of the stated level")
    if not perfect_crystal.is_minimal(b0):
        raise ValueError("base point must be minimal")
    if t.b.l != l or not perfect_crystal.is_member(t.b):
        raise ValueError("middle factor must lie in the level-l crystal")
    if t.lam != perfect_crystal.eps_weight(b0):
        raise ValueError("left weight must match the base point")
    if t.mu != cartan_core.negate_weight(perfect_crystal.phi_weight(b0)):
        raise ValueError("right weight must match the base point")
    rows = tuple(tuple(t.b.rows[i][j] - b0.rows[i][j] for j in range(5))
                 for i in range(5))
    return perfect_crystal.PCElement(rows, "limit", None)


def preimage(bp):
    """Reconstruct (l, a, b) with embed(l, b(a), t) hitting the given element.

    The coefficient maxima must be taken in dependency order: each line
    uses the earlier coefficients.  The zero array would give level 0,
    which indexes no crystal; it is mapped to the level-1 base point of
    direction 0 instead.
    """
    if bp.regime != "limit":
        raise ValueError("expected a limit-regime element")
    b = bp.b
    a1 = max(-b(1, 1) + b(2, 2),
             -b(1, 1) - b(1, 2) + b(2, 2) + b(2, 3),
             -b(1, 1) - b(1, 2) - b(1, 3) + b(2, 2) + b(2, 3) + b(2, 4),
             0)
    a2 = max(-b(2, 2) + b(3, 3),
             -b(2, 2) - b(2, 3) + b(3, 3) + b(3, 4),
             -b(1, 4),
             -b(2, 5) - a1,
             0)
    a3 = max(-b(3, 3) + b(4, 4),
             -b(1, 3),
             -b(2, 4),
             -b(3, 5) - a2,
             0)
    a4 = max(-b(1, 2),
             -b(2, 3),
             -b(3, 4),
             -b(4, 5) - a3,
             0)
    a5 = max(-b(1, 1) - a1 - a2 - a3,
             -b(2, 2) - a2 - a3,
             -b(3, 3) - a3,
             -b(4, 4),
             0)
    a0 = max(b(1, 1) - a2 - a3 - a4,
             b(1, 1) + b(1, 2) - a2 - a3,
             b(1, 1) + b(1, 2) + b(1, 3) - a2,
             b(1, 1) + b(1, 2) + b(1, 3) + b(1, 4),
             0)
    a = (a0, a1, a2, a3, a4, a5)
    if cartan_core.level(a) == 0:
        a = (1, 0, 0, 0, 0, 0)
    l = cartan_core.level(a)
    base = minimal_from_a(a)
    rows = tuple(tuple(bp.rows[i][j] + base.rows[i][j] for j in range(5))
                 for i in range(5))
    return l, a, perfect_crystal.PCElement(rows, "finite", l)


def _random_limit_element(rng, walk_length):
    cur = perfect_crystal.zero_limit()
    for _ in range(walk_length):
        k = rng.randrange(6)
        step = (perfect_crystal.e_tilde if rng.random() < 0.5
                else perfect_crystal.f_tilde)
        out = step(k, cur)
        if out is not None:
            cur = out
    return cur


def verify_coherence(samples=10000, seed=0, levels=(1, 2),
                     level3_samples=0):
    """Exhaustive embedding checks on small levels plus sampled
    reconstruction roundtrips on random limit elements.

    The embedding is a morphism where both sides are defined: a tensor
    operator may die by string truncation while the limit operator
    survives (counted under null_audit), but a defined tensor operator
    must map to the defined limit operator, and the string data and
    weight must transfer exactly.  level3_samples adds that many random
    (b0, b) pairs from the level-3 enumeration to the embedding checks.
    """
    rng = random.Random(seed)
    names = ("embed_member", "embed_intertwines", "embed_preserves",
             "null_respected", "reconstruction", "preimage_roundtrip")
    rel = {name: {"checked": 0, "failures": 0, "witness": None}
           for name in names}
    audited = 0

    def record(name, ok, witness):
        rel[name]["checked"] += 1
        if not ok:
            rel[name]["failures"] += 1
            if rel[name]["witness"] is None:
                rel[name]["witness"] = witness

    def check_pair(l, b0, b):
        nonlocal audited
        t = standard_tensor(b0, b)
        bp = embed(l, b0, t)
        wit = {"l": l, "b0": [list(r) for r in b0.rows],
               "b": [list(r) for r in b.rows]}
        record("embed_member", perfect_crystal.is_member(bp), wit)
        for k in range(6):
            kwit = dict(wit, k=k)
            for tensor_step, limit_step in (
                    (tensor_e_tilde, perfect_crystal.e_tilde),
                    (tensor_f_tilde, perfect_crystal.f_tilde)):
                tk = tensor_step(k, t)
                bk = limit_step(k, bp)
                if tk is None:
                    record("null_respected", True, kwit)
                    if bk is not None:
                        audited += 1
                else:
                    record("embed_intertwines",
                           bk is not None and embed(l, b0, tk) == bk,
                           kwit)
            record("embed_preserves",
                   tensor_eps(k, t) == perfect_crystal.eps_k(k, bp)
                   and tensor_phi(k, t) == perfect_crystal.phi_k(k, bp)
                   and tensor_wt(t) == perfect_crystal.wt(bp),
                   kwit)

    for l in levels:
        mins = perfect_crystal.minimal_elements(l)
        elems = perfect_crystal.enumerate_level(l)
        for b0 in mins:
            for b in elems:
                check_pair(l, b0, b)

    if level3_samples:
        mins3 = perfect_crystal.minimal_elements(3)
        elems3 = perfect_crystal.enumerate_level(3)
        for _ in range(level3_samples):
            check_pair(3, rng.choice(mins3), rng.choice(elems3))

    for _ in range(samples):
        bp = _random_limit_element(rng, rng.randint(0, 12))
        wit = {"rows": [list(r) for r in bp.rows]}
        l, a, inner = preimage(bp)
        ok = (perfect_crystal.is_member(inner)
              and cartan_core.level(a) == l
              and all(v >= 0 for v in a))
        record("reconstruction", ok, wit)
        b0 = minimal_from_a(a)
        t = standard_tensor(b0, inner)
        again = embed(l, b0, t)
        record("preimage_roundtrip",
               again == bp and preimage(again) == (l, a, inner), wit)

    failures = sum(r["failures"] for r in rel.values())
    return {"seed": seed, "samples": samples, "levels": list(levels),
            "null_audit": audited, "relations": rel,
            "failures": failures, "ok": failures == 0}
