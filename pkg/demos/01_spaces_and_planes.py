"""Tour of the tangent-space model: metrics, J, planes, and exact frames.

Run:  python demos/01_spaces_and_planes.py
"""

from fractions import Fraction

from curvlab import (ComplexVector, classify_plane, gram_schmidt_tuple,
                     make_space)

# A space of complex dimension 3 whose metric has one negative 2-block:
# coordinates 1..2 carry minus signs, 3..6 plus signs, and J rotates each
# consecutive coordinate pair.
sp = make_space(3, 1)
print("metric signs:", sp.metric_signs)

e = [sp.basis_vector(i) for i in range(sp.n)]
print("g(e1,e1) =", sp.inner(e[0], e[0]), "  g(e3,e3) =", sp.inner(e[2], e[2]))
print("J e1 = [" + " ".join(str(c) for c in sp.apply_J(e[0])) + "]")

# Mixed-sign combinations are isotropic: g(e1 + e3, e1 + e3) = -1 + 1 = 0.
xi = e[0] + e[2]
print("g(e1+e3, e1+e3) =", sp.inner(xi, xi))

# Plane taxonomy.  A J-block spans a holomorphic plane; two vectors that are
# g- and J-orthogonal span an antiholomorphic one; a plane whose induced
# metric has rank 1 is weakly isotropic.
print("\nspan{e1, e2}:   ", classify_plane(sp, e[0], e[1]))
print("span{e1, e3}:   ", classify_plane(sp, e[0], e[2]))
print("span{e1+e3, e2}:", classify_plane(sp, xi, e[1]))

# The complexification uses the complex-bilinear extension of g, so real
# orthonormal pairs combine into isotropic directions y + i z:
y, z = e[2], e[4]
print("\ng_C(y+iz, y+iz) =", sp.inner_c(ComplexVector(y, z), ComplexVector(y, z)))
print("span{e1, y+iz}: ", classify_plane(sp, e[0], ComplexVector(y, z)))

# Exact orthonormal frames of any realizable signature pattern, with all
# J-cross inner products zero when the tuple is antiholomorphic.  Rational
# coordinates, exact unit norms: the frames come from products of
# Pythagorean-triple rotations.
x, yy, a = gram_schmidt_tuple(sp, seed=5, pattern=(1, 1, -1), antiholomorphic=True)
print("\nantiholomorphic triple of signature (+,+,-):")
for name, u in (("x", x), ("y", yy), ("a", a)):
    print(f"  {name} = [{' '.join(str(c) for c in u)}]")
for name, u in (("x", x), ("y", yy), ("a", a)):
    row = [str(sp.inner(u, v)) for v in (x, yy, a)]
    jrow = [str(sp.inner(u, sp.apply_J(v))) for v in (x, yy, a)]
    print(f"  g({name},.) = [{' '.join(row)}]   g({name},J.) = [{' '.join(jrow)}]")
