"""Polarization: expand curvature along affine families and force identities.

The pinching family (x + t a)/sqrt(1-t^2) stays a unit vector while t runs
toward the isotropic direction x + a.  The numerator of its holomorphic
curvature is a degree-4 polynomial in t; a two-sided bound |H| <= c squeezes
that polynomial under c*(1-t^2)^2, which forces it to vanish at t = +-1 and
again after dividing the envelope out.  Those four scalars are the forced
identities.

Run:  python demos/03_polarization.py
"""

from fractions import Fraction

from curvlab import (bound_forced_identities, complexified_family_expansion,
                     expand, gram_schmidt_tuple, holomorphic_family_expansion,
                     make_space, model_complex_space_form,
                     model_constant_sectional, random_tensor)
from curvlab.polarization import VectorFamily

sp = make_space(2, 1)
x, a = gram_schmidt_tuple(sp, seed=3, pattern=(1, -1), antiholomorphic=True)

print("constant model, c = 3: numerator along x + t a")
p = holomorphic_family_expansion(model_constant_sectional(sp, 3), x, a)
print("  coefficients:", p.coeffs, " (= 3*(1-t^2)^2)")
print("  forced-identity scalars:", bound_forced_identities(p))

print("\ngeneric tensor: same family")
R = random_tensor(sp, seed=11)
p = holomorphic_family_expansion(R, x, a)
print("  coefficients:", p.coeffs)
print("  forced-identity scalars:", bound_forced_identities(p))
print("  nonzero scalars certify that no two-sided bound on H can hold")

# The expansion engine takes arbitrary per-slot families; coefficient k sums
# the evaluations picking the direction vector in exactly k slots, and the
# polynomial agrees with direct evaluation at every t.
fam = VectorFamily.affine(x, a)
J = sp.apply_J
famJ = VectorFamily.affine(J(x), J(a))
poly = expand(R, fam, famJ, famJ, fam)
t = Fraction(2, 5)
import numpy as np
u = np.asarray(x) + t * np.asarray(a)
print("\ninterpolation check at t = 2/5:", poly(t) == R.eval(u, J(u), J(u), u))

# Definite metrics use families x + i t y in the complexification; only even
# powers of t survive in the real part.
sp0 = make_space(2, 0)
x0, y0 = gram_schmidt_tuple(sp0, seed=4, pattern=(1, 1), antiholomorphic=True)
q = complexified_family_expansion(model_complex_space_form(sp0, 4), x0, y0)
print("\ndefinite model, c = 4: real part along x + i t y:", q.coeffs)
print("forced-identity scalars:", bound_forced_identities(q))
