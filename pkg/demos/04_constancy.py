"""Constancy classifiers and the three-way equivalence on definite spaces.

Run:  python demos/04_constancy.py
"""

from curvlab import (constant_antiholomorphic, constant_biholomorphic,
                     constant_holomorphic, lemma3_check, make_space,
                     model_complex_space_form, model_constant_sectional,
                     random_tensor)

sp = make_space(3, 0)

print("holomorphic model, c = 4:")
R = model_complex_space_form(sp, 4)
for name, fn in (("holomorphic", constant_holomorphic),
                 ("antiholomorphic", constant_antiholomorphic),
                 ("biholomorphic", constant_biholomorphic)):
    v = fn(R)
    print(f"  {name:16s} -> {v.status}, value = {v.value}")

print("\ngeneric random tensor:")
R = random_tensor(sp, seed=5)
v = constant_holomorphic(R)
print("  holomorphic     ->", v.status)
(u1, _), (u2, _) = v.witness.planes
print("    witness H values:", v.witness.values[0], "vs", v.witness.values[1])
v = constant_antiholomorphic(R, probes=15)
print("  antiholomorphic ->", v.status)

# On definite spaces with complex dimension > 2, three conditions coincide:
#   a) R(x,y,z,x) = 0 on orthonormal antiholomorphic triples,
#   b) K(x,y) = K(x,z) on those triples,
#   c) the antiholomorphic sectional curvature is pointwise constant.
print("\nthree-way equivalence (definite, m = 3):")
for label, T in (("holomorphic model", model_complex_space_form(sp, 4)),
                 ("constant model", model_constant_sectional(sp, 2)),
                 ("random tensor", random_tensor(sp, 6))):
    rep = lemma3_check(T, probes=15)
    print(f"  {label:18s}: a={rep.condition_a} b={rep.condition_b} "
          f"c={rep.condition_c} agree={rep.agree}")
