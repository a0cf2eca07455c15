"""Independent oracles used by the acceptance tests.

These deliberately avoid the package's own enumeration code paths: the
dimension oracle is the classical product formula over positive roots
of the rank-5 even orthogonal algebra in orthogonal coordinates, and
the weight-vector oracle is a direct brute-force count.
"""

import itertools
from fractions import Fraction


def spin_dimension(l):
    """Dimension of the highest-weight module with l times the spin
    weight: coordinates of lambda + rho are (4 + l/2, ..., 1 + l/2, l/2)."""
    lam_rho = [Fraction(4 - i) + Fraction(l, 2) for i in range(5)]
    rho = [4 - i for i in range(5)]
    dim = Fraction(1)
    for i in range(5):
        for j in range(i + 1, 5):
            dim *= Fraction(lam_rho[i] ** 2 - lam_rho[j] ** 2,
                            rho[i] ** 2 - rho[j] ** 2)
    assert dim.denominator == 1
    return int(dim)


_MARKS = (1, 1, 2, 2, 1, 1)


def level_vectors(l):
    """All nonnegative integer 6-vectors whose marked sum equals l."""
    out = []
    ranges = [range(l // m + 1) for m in _MARKS]
    for a in itertools.product(*ranges):
        if sum(m * v for m, v in zip(_MARKS, a)) == l:
            out.append(a)
    return out
