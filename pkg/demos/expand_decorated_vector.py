"""Build the decorated spin vector at a rational point and watch the
twist identity carry it onto the second frame."""

from fractions import Fraction

from spincrystal import geometric_crystal, spin_module

pt = geometric_crystal.ones("x")
env = pt.env()
env["x2_2"] = Fraction(3, 2)
env["x5_1"] = Fraction(2)
pt = geometric_crystal.from_env("x", env)

vec = spin_module.build_V1(pt.env())
print("decorated vector coefficients at the sample point:")
for b in spin_module.BASIS:
    print("  %s  ->  %s" % (spin_module.format_basis(b), vec[b]))

print()
print("twist scale factor a(x) =", geometric_crystal.twist_scale_factor(pt))
print("twist identity holds:", geometric_crystal.verify_sigma_equation(pt))

print()
print("strings at the point: ", end="")
print({k: geometric_crystal.eps(k, pt)
       for k in geometric_crystal.X_DIRECTIONS})
