"""Static root-system data shared by every other module.

The ambient diagram is the rank-6 affine diagram on nodes {0,...,5}: a chain
1-2-3-4 with two extra legs 0-2 and 3-5.  Node 5 is the spin node the whole
package is organised around.  Weights live in classical coordinates only:
a weight is a plain 6-tuple of integer coefficients on the fundamental
weights, indexed by node.  Everything in this module is immutable.
"""

from __future__ import annotations

INDEX = (0, 1, 2, 3, 4, 5)

# Off-diagonal -1 pairs of the symmetric Cartan matrix.
_EDGES = ((0, 2), (1, 2), (2, 3), (3, 4), (3, 5))


def _build_cartan():
    a = [[0] * 6 for _ in INDEX]
    for i in INDEX:
        a[i][i] = 2
    for i, j in _EDGES:
        a[i][j] = a[j][i] = -1
    return tuple(tuple(row) for row in a)


CARTAN = _build_cartan()

# Null-root coefficients on the simple coroots: pairing any simple root
# against this vector gives zero, which makes level() constant along roots.
C_COEFFS = (1, 1, 2, 2, 1, 1)

# Diagram rotation: 0 -> 5 -> 1 -> 4 -> 0 on the outer legs, 2 <-> 3 in the
# middle.  Order four, and it preserves the Cartan matrix.
SIGMA = (5, 4, 3, 2, 0, 1)


def entry(j: int, k: int) -> int:
    """Cartan matrix entry: pairing of coroot j with simple root k."""
    return CARTAN[j][k]


def sigma_index(k: int) -> int:
    return SIGMA[k]


def sigma_weight(weight):
    """Permute fundamental-weight coefficients by the diagram rotation."""
    out = [0] * 6
    for j in INDEX:
        out[SIGMA[j]] = weight[j]
    return tuple(out)


def fundamental_weight(k: int):
    out = [0] * 6
    out[k] = 1
    return tuple(out)


ZERO_WEIGHT = (0, 0, 0, 0, 0, 0)


def add_weights(u, v):
    return tuple(a + b for a, b in zip(u, v))


def negate_weight(u):
    return tuple(-a for a in u)


def simple_root_cl(k: int):
    """Classical image of simple root k: column k of the Cartan matrix."""
    return tuple(CARTAN[j][k] for j in INDEX)


def level(weight) -> int:
    return sum(c * w for c, w in zip(C_COEFFS, weight))


def is_dominant(weight) -> bool:
    return all(w >= 0 for w in weight)


def dominant_weights_of_level(l: int):
    """All nonnegative integer 6-tuples of the given level.

    The doubled slots (nodes 2 and 3) are walked first so the remaining
    budget splits freely over the four outer nodes.
    """
    if l < 0:
        raise ValueError("level must be nonnegative")
    out = set()
    for a2 in range(l // 2 + 1):
        for a3 in range((l - 2 * a2) // 2 + 1):
            rest = l - 2 * a2 - 2 * a3
            for a0 in range(rest + 1):
                for a1 in range(rest - a0 + 1):
                    for a4 in range(rest - a0 - a1 + 1):
                        out.add((a0, a1, a2, a3, a4, rest - a0 - a1 - a4))
    return out
