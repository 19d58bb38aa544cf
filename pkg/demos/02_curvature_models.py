"""The sectional-curvature zoo on model tensors.

Run:  python demos/02_curvature_models.py
"""

import random
from fractions import Fraction

from curvlab import (biholomorphic, gram_schmidt_tuple, holomorphic_sectional,
                     make_space, model_complex_space_form,
                     model_constant_sectional, normalized_biholomorphic,
                     random_tensor, sectional, sectional_c)
from curvlab.spaces import ComplexVector

sp = make_space(3, 1)

# The constant-curvature model c*pi1 has sectional curvature c on every
# nondegenerate plane, real or complexified.
Rc = model_constant_sectional(sp, 3)
x, y, a = gram_schmidt_tuple(sp, seed=1, pattern=(1, 1, -1), antiholomorphic=True)
print("c*pi1, c = 3:")
print("  K(x,y)      =", sectional(Rc, x, y))
print("  K(x,a)      =", sectional(Rc, x, a), "   (mixed-signature plane, ratio convention)")
print("  K_C(x, y+ia)=", sectional_c(Rc, x, ComplexVector(y, a)))
print("  H(x)        =", holomorphic_sectional(Rc, x))

# The model with constant holomorphic curvature c separates the three
# notions: H = c, antiholomorphic K = c/4, biholomorphic = c/2 after the
# signature normalization (the raw value flips sign on (+,-) pairs).
Rsf = model_complex_space_form(sp, 4)
print("\nholomorphic model, c = 4:")
print("  H(x)                     =", holomorphic_sectional(Rsf, x))
print("  H(a)                     =", holomorphic_sectional(Rsf, a))
print("  K(x,y) antiholomorphic   =", sectional(Rsf, x, y))
print("  K(x,a) antiholomorphic   =", sectional(Rsf, x, a))
print("  raw  R(x,Jx,Jy,y)        =", biholomorphic(Rsf, x, y))
print("  raw  R(x,Jx,Ja,a)        =", biholomorphic(Rsf, x, a))
print("  normalized biholomorphic =", normalized_biholomorphic(Rsf, x, y),
      "and", normalized_biholomorphic(Rsf, x, a))

# Generic tensors have none of these constancies; sectional curvature still
# depends only on the plane, not on the spanning basis.
R = random_tensor(sp, seed=7)
rng = random.Random(0)
u = sp.vector([rng.randint(-3, 3) for _ in range(sp.n)])
v = sp.vector([rng.randint(-3, 3) for _ in range(sp.n)])
k1 = sectional(R, u, v)
import numpy as np
k2 = sectional(R, 2 * np.asarray(u) + 3 * np.asarray(v), np.asarray(u) - np.asarray(v))
print("\ngeneric tensor: K(span) =", k1, "=", k2, "(basis independent)")
