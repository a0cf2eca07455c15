"""The 16-dimensional spin representation and its one-parameter operators.

Basis vectors are sign 5-tuples (entries +1/-1) with an even number of
minus signs, listed lexicographically with ``+`` before ``-``.  Vectors
are sparse dicts mapping basis tuples to exact coefficients.

The one-parameter operator attached to a direction k acts on a basis
vector b as  c^p * b + c^(p-1) * lower(k, b)  where p is the coroot
pairing of b in direction k.  Products of these operators, evaluated on
the two seed vectors, produce the decorated vectors whose coordinates
drive the birational layer.
"""

from fractions import Fraction

from . import cartan_core
from .formula_corpus import WORD_X, X_VARS, WORD_Y, Y_VARS

PLUS = 1
MINUS = -1


def _build_basis():
    out = []
    for m in range(32):
        signs = tuple(MINUS if (m >> (4 - i)) & 1 else PLUS
                      for i in range(5))
        prod = 1
        for s in signs:
            prod *= s
        if prod == PLUS:
            out.append(signs)
    # enumeration above is already lexicographic with + < -
    return tuple(out)


BASIS = _build_basis()
BASIS_INDEX = {b: i for i, b in enumerate(BASIS)}

SEED_X = (PLUS, PLUS, PLUS, PLUS, PLUS)
SEED_Y = (MINUS, PLUS, PLUS, PLUS, MINUS)

# direction -> (slot pair (1-indexed), raising source, raising target)
_RAISE_RULE = {0: ((1, 2), (PLUS, PLUS), (MINUS, MINUS)),
               1: ((1, 2), (MINUS, PLUS), (PLUS, MINUS)),
               2: ((2, 3), (MINUS, PLUS), (PLUS, MINUS)),
               3: ((3, 4), (MINUS, PLUS), (PLUS, MINUS)),
               4: ((4, 5), (MINUS, PLUS), (PLUS, MINUS)),
               5: ((4, 5), (MINUS, MINUS), (PLUS, PLUS))}


def raise_basis(k, b):
    """Apply the raising generator in direction k; None if it kills b."""
    (p, q), src, dst = _RAISE_RULE[k]
    if (b[p - 1], b[q - 1]) != src:
        return None
    out = list(b)
    out[p - 1], out[q - 1] = dst
    return tuple(out)


def lower_basis(k, b):
    """Apply the lowering generator in direction k; None if it kills b."""
    (p, q), src, dst = _RAISE_RULE[k]
    if (b[p - 1], b[q - 1]) != dst:
        return None
    out = list(b)
    out[p - 1], out[q - 1] = src
    return tuple(out)


def coroot_pairing(k, b):
    """Pairing of the weight of b against the coroot of direction k."""
    (p, q), src, dst = _RAISE_RULE[k]
    pair = (b[p - 1], b[q - 1])
    if pair == dst:
        return 1
    if pair == src:
        return -1
    return 0


def weight(b):
    return tuple(coroot_pairing(k, b) for k in cartan_core.INDEX)


def _build_twist_table():
    table = {}
    for b in BASIS:
        target = cartan_core.sigma_weight(weight(b))
        matches = [v for v in BASIS if weight(v) == target]
        if len(matches) != 1:
            raise RuntimeError("weight matching failed for %r" % (b,))
        table[b] = matches[0]
    if len(set(table.values())) != len(BASIS):
        raise RuntimeError("twist table is not a bijection")
    return table


_TWIST = _build_twist_table()

# ------------------------------------------------------------ vector ops


def zero():
    return {}


def unit(b):
    if b not in BASIS_INDEX:
        raise ValueError("not a basis tuple: %r" % (b,))
    return {b: Fraction(1)}


def add(u, v):
    out = dict(u)
    for b, coef in v.items():
        s = out.get(b, 0) + coef
        if s:
            out[b] = s
        else:
            out.pop(b, None)
    return out


def scale(coef, v):
    if not coef:
        return {}
    return {b: coef * c for b, c in v.items()}


def apply_Y(k, c, vec):
    """One-parameter operator in direction k with parameter c (c != 0)."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("operator parameter must be nonzero")
    out = {}
    for b, coef in vec.items():
        p = coroot_pairing(k, b)
        out = add(out, {b: coef * c ** p})
        low = lower_basis(k, b)
        if low is not None:
            out = add(out, {low: coef * c ** (p - 1)})
    return out


def build_product(word, coords, seed):
    """Apply the operator word to a seed basis vector, rightmost first."""
    if len(word) != len(coords):
        raise ValueError("word and coordinate list differ in length")
    v = unit(seed)
    for j in reversed(range(len(word))):
        v = apply_Y(word[j], coords[j], v)
    return v


def build_V1(env):
    """Decorated vector of the x-frame at a coordinate assignment."""
    coords = [env[name] for name in X_VARS]
    return build_product(WORD_X, coords, SEED_X)


def build_V2(env):
    """Decorated vector of the y-frame at a coordinate assignment."""
    coords = [env[name] for name in Y_VARS]
    return build_product(WORD_Y, coords, SEED_Y)


def sigma_twist_basis(b):
    """Diagram-twist image of a basis vector (weight matching)."""
    return _TWIST[b]


def sigma_twist(vec):
    """Diagram twist of a vector: permutes the basis, keeps coefficients."""
    return {_TWIST[b]: coef for b, coef in vec.items()}


def format_basis(b):
    return "(" + ",".join("+" if s == PLUS else "-" for s in b) + ")"


def parse_basis(text):
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",")] if "," in body else list(body)
    if len(parts) != 5 or any(p not in "+-" for p in parts):
        raise ValueError("not a sign tuple: %r" % (text,))
    b = tuple(PLUS if p == "+" else MINUS for p in parts)
    if b not in BASIS_INDEX:
        raise ValueError("sign tuple has odd sign product: %r" % (text,))
    return b
