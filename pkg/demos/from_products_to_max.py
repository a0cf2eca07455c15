"""Tropicalize one rational operator slot and compare the three ways of
computing the direction-0 lowering on the integer lattice."""

from spincrystal import formula_corpus, perfect_crystal, tropicalizer
from spincrystal import ud_crystal

text = formula_corpus.E_AUX_X["c4"]
print("rational auxiliary:      ", text)
trop = tropicalizer.tropicalize(tropicalizer.parse(text))
print("piecewise-linear shadow: ", tropicalizer.trop_to_text(trop))

print()
x = ud_crystal.UDPoint(2, 1, 0, -1, 3, 0, 1, -2, 0, 1)
print("sample lattice point:", tuple(x))
print("direct gate matches: ", ud_crystal.zero_lower_matches(x))
print("direct lowering:     ", tuple(ud_crystal.f_tilde_zero_direct(x)))
print("via c = -1 action:   ", tuple(ud_crystal.ud_e(0, -1, x)))
via_array = ud_crystal.omega(
    perfect_crystal.f_tilde(0, ud_crystal.omega_inv(x)))
print("via array transport: ", tuple(via_array))

print()
report = ud_crystal.verify_ud_match(samples=2000, box=5, seed=1)
print("gate-variant evidence over", report["samples"], "samples:")
for variant, counts in report["zero_gate_evidence"].items():
    print("  %-10s %s" % (variant, counts))
