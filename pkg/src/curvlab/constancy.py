"""Pointwise-constancy deciders for the three curvature notions.

Holomorphic constancy is decided exactly: H is constant iff the quartic form
X -> R(X,JX,JX,X) - c * g(X,X)^2 is the zero polynomial, which reduces to
comparing totally symmetrized coefficient tensors.  Antiholomorphic and
biholomorphic constancy are decided by exact-rational randomized probing
over orthonormal antiholomorphic tuples of every realizable signature
pattern (60 per pattern by default); a generic rational probe set witnesses
these polynomial conditions, with a measure-zero false-accept risk that the
seed-independence tests keep honest.

Biholomorphic values are compared after dividing by g(X,X)*g(Y,Y): the raw
quantity R(X,JX,JY,Y) flips sign on mixed-signature pairs even for model
tensors, so only the normalized value can be pointwise constant on an
indefinite space.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Optional

import numpy as np

from .scalars import is_exact
from .spaces import GeometryError, PseudoHermitianSpace, tuple_from_rng
from .tensors import CurvatureTensor, holomorphic_sectional, sectional

FLOAT_VERDICT_TOL = 1e-8


@dataclass(frozen=True)
class Witness:
    """Two curvature arguments whose values disagree."""

    kind: str
    planes: tuple              # tuple of vector tuples
    values: tuple              # the two differing curvature values


@dataclass(frozen=True)
class ConstancyVerdict:
    status: str                # 'constant' | 'nonconstant'
    value: object = None       # populated exactly when constant
    witness: Optional[Witness] = None

    @property
    def is_constant(self) -> bool:
        return self.status == "constant"


def _tensor_scale(R: CurvatureTensor) -> float:
    if R.is_exact:
        return 1.0
    m = float(np.abs(np.asarray(R.components, dtype=float)).max())
    return max(1.0, m)


def _make_same(R: CurvatureTensor):
    if R.is_exact:
        return lambda a, b: a == b
    tol = FLOAT_VERDICT_TOL * _tensor_scale(R)
    return lambda a, b: abs(float(a) - float(b)) <= tol


def _triple_patterns(space: PseudoHermitianSpace) -> list[tuple]:
    pats = []
    plus, minus = space.m - space.s, space.s
    if plus >= 3:
        pats.append((1, 1, 1))
    if plus >= 2 and minus >= 1:
        pats.append((1, 1, -1))
    if plus >= 1 and minus >= 2:
        pats.append((1, -1, -1))
    if minus >= 3:
        pats.append((-1, -1, -1))
    return pats


def _pair_patterns(space: PseudoHermitianSpace) -> list[tuple]:
    pats = []
    plus, minus = space.m - space.s, space.s
    if plus >= 2:
        pats.append((1, 1))
    if plus >= 1 and minus >= 1:
        pats.append((1, -1))
    if minus >= 2:
        pats.append((-1, -1))
    return pats


# -- holomorphic ------------------------------------------------------------

def _holomorphic_quartic(R: CurvatureTensor) -> np.ndarray:
    """Coefficient tensor of the quartic X -> R(X, JX, JX, X)."""
    J = R.space.J if R.is_exact else R.space.J_float
    T = np.tensordot(R.components, J, axes=([1], [0]))   # (i, q, l, j)
    T = np.tensordot(T, J, axes=([1], [0]))              # (i, l, j, k)
    return T.transpose(0, 2, 3, 1)


def _norm_square_quartic(space: PseudoHermitianSpace, exact: bool) -> np.ndarray:
    n = space.n
    if exact:
        G4 = np.empty((n, n, n, n), dtype=object)
        G4[...] = Fraction(0)
    else:
        G4 = np.zeros((n, n, n, n))
    for i in range(n):
        for j in range(n):
            G4[i, i, j, j] = G4[i, i, j, j] + space.metric_signs[i] * space.metric_signs[j]
    return G4


def _symmetrize_quartic(A: np.ndarray) -> np.ndarray:
    acc = None
    for perm in permutations(range(4)):
        term = A.transpose(perm)
        acc = term.copy() if acc is None else acc + term
    return acc


def _nonisotropic_candidates(space: PseudoHermitianSpace, rng: random.Random):
    n = space.n
    for i in range(n):
        yield space.basis_vector(i)
    for i in range(n):
        for j in range(i + 1, n):
            for coef in (1, -1, 2):
                v = space.basis_vector(i) + coef * space.basis_vector(j)
                yield v
    while True:
        yield space.vector([Fraction(rng.randint(-3, 3)) for _ in range(n)])


def constant_holomorphic(R: CurvatureTensor, samples: int = 200, seed: int = 0) -> ConstancyVerdict:
    """Decide pointwise constancy of H.

    Exact backend: polynomial-identity comparison of symmetrized quartic
    coefficient arrays (no sampling).  Float backend: `samples` deterministic
    nonisotropic probe vectors, absolute tolerance 1e-8 after normalizing
    the tensor to unit max component.
    """
    space = R.space
    rng = random.Random(seed)
    if R.is_exact:
        ref = space.basis_vector(0)
        c = holomorphic_sectional(R, ref)
        SA = _symmetrize_quartic(_holomorphic_quartic(R))
        SG = _symmetrize_quartic(_norm_square_quartic(space, exact=True))
        if (SA == SG * c).all():
            return ConstancyVerdict("constant", value=c)
        # genuinely nonconstant: hunt a differing pair of holomorphic planes
        found = None
        for v in _nonisotropic_candidates(space, rng):
            if space.inner(v, v) == 0:
                continue
            h = holomorphic_sectional(R, v)
            if h != c:
                found = (v, h)
                break
        X2, h2 = found
        return ConstancyVerdict("nonconstant", witness=Witness(
            "holomorphic", planes=((ref, space.apply_J(ref)), (X2, space.apply_J(X2))),
            values=(c, h2)))
    # float backend: deterministic sampled criterion
    same = _make_same(R)
    ref_val = None
    ref_vec = None
    count = 0
    for v in _nonisotropic_candidates(space, rng):
        g = space.inner(v, v)
        if g == 0:
            continue
        h = holomorphic_sectional(R, v)
        if ref_val is None:
            ref_vec, ref_val = v, h
        elif not same(h, ref_val):
            return ConstancyVerdict("nonconstant", witness=Witness(
                "holomorphic",
                planes=((ref_vec, space.apply_J(ref_vec)), (v, space.apply_J(v))),
                values=(ref_val, h)))
        count += 1
        if count >= samples:
            break
    return ConstancyVerdict("constant", value=ref_val)


# -- antiholomorphic --------------------------------------------------------

def _derive_plane_witness(R, same, p, q, r):
    """From R(p,q,r,p) != 0 build two antiholomorphic planes with K apart."""
    base = sectional(R, p, q)
    for t in (Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), 2, 3, -2):
        w = np.asarray(q) + t * np.asarray(r)
        den_sign = R.space.inner(w, w)
        if (den_sign == 0) if is_exact(den_sign) else abs(float(den_sign)) < 1e-12:
            continue
        k = sectional(R, p, w)
        if not same(k, base):
            return Witness("antiholomorphic", planes=((p, q), (p, w)), values=(base, k))
    return None


def constant_antiholomorphic(R: CurvatureTensor, probes: int = 60, seed: int = 0) -> ConstancyVerdict:
    """Decide pointwise constancy of the antiholomorphic sectional curvature.

    Needs m > 2.  Probes `probes` orthonormal antiholomorphic triples per
    realizable signature pattern; constancy requires every probe value of K
    to agree and every mixed evaluation R(u,v,w,u) to vanish (the latter are
    the curvature values of planes degenerating to weak isotropy).
    """
    space = R.space
    if space.m <= 2:
        raise GeometryError("antiholomorphic constancy needs complex dimension m > 2")
    rng = random.Random(seed)
    same = _make_same(R)
    zero = (lambda v: v == 0) if R.is_exact else \
        (lambda v: abs(float(v)) <= FLOAT_VERDICT_TOL * _tensor_scale(R))
    records = []          # (plane pair, K value)
    a_violation = None
    for pattern in _triple_patterns(space):
        for _ in range(probes):
            u, v, w = tuple_from_rng(space, rng, pattern, antiholomorphic=True)
            for (p, q, r) in ((u, v, w), (v, w, u), (w, u, v)):
                if a_violation is None:
                    aval = R.eval(p, q, r, p)
                    if not zero(aval):
                        a_violation = (p, q, r)
                records.append(((p, q), sectional(R, p, q)))
    (plane0, val0) = records[0]
    for plane, val in records[1:]:
        if not same(val, val0):
            return ConstancyVerdict("nonconstant", witness=Witness(
                "antiholomorphic", planes=(plane0, plane), values=(val0, val)))
    if a_violation is not None:
        wit = _derive_plane_witness(R, same, *a_violation)
        if wit is not None:
            return ConstancyVerdict("nonconstant", witness=wit)
    return ConstancyVerdict("constant", value=val0)


# -- totally real biholomorphic ---------------------------------------------

def normalized_biholomorphic(R: CurvatureTensor, X, Y):
    """R(X,JX,JY,Y) / (g(X,X) g(Y,Y)) for an antiholomorphic orthonormal pair."""
    space = R.space
    J = space.apply_J
    return R.eval(X, J(X), J(Y), Y) / (space.inner(X, X) * space.inner(Y, Y))


def constant_biholomorphic(R: CurvatureTensor, probes: int = 60, seed: int = 0) -> ConstancyVerdict:
    """Decide pointwise constancy of the totally real biholomorphic curvature.

    Needs m > 2.  Values are compared after the signature normalization of
    `normalized_biholomorphic`.
    """
    space = R.space
    if space.m <= 2:
        raise GeometryError("biholomorphic constancy needs complex dimension m > 2")
    rng = random.Random(seed)
    same = _make_same(R)
    records = []
    for pattern in _pair_patterns(space):
        for _ in range(probes):
            u, v = tuple_from_rng(space, rng, pattern, antiholomorphic=True)
            records.append(((u, v), normalized_biholomorphic(R, u, v)))
    (plane0, val0) = records[0]
    for plane, val in records[1:]:
        if not same(val, val0):
            return ConstancyVerdict("nonconstant", witness=Witness(
                "biholomorphic", planes=(plane0, plane), values=(val0, val)))
    return ConstancyVerdict("constant", value=val0)


# -- the three-way equivalence on definite spaces ----------------------------

@dataclass(frozen=True)
class EquivalenceReport:
    """Probe outcome for the a/b/c equivalence on a definite space.

    a: R(x,y,z,x) = 0 on orthonormal antiholomorphic triples;
    b: K(x,y) = K(x,z) on the same triples;
    c: the antiholomorphic constancy verdict.
    """

    condition_a: bool
    condition_b: bool
    condition_c: bool
    agree: bool
    witness_a: Optional[tuple]
    witness_b: Optional[tuple]
    verdict_c: ConstancyVerdict


def lemma3_check(R: CurvatureTensor, probes: int = 60, seed: int = 0) -> EquivalenceReport:
    """Evaluate the three equivalent conditions and assert their agreement."""
    space = R.space
    if space.is_indefinite:
        raise GeometryError("the a/b/c equivalence check is a definite-metric tool")
    if space.m <= 2:
        raise GeometryError("the a/b/c equivalence needs complex dimension m > 2")
    rng = random.Random(seed)
    same = _make_same(R)
    zero = (lambda v: v == 0) if R.is_exact else \
        (lambda v: abs(float(v)) <= FLOAT_VERDICT_TOL * _tensor_scale(R))
    a_ok, b_ok = True, True
    wit_a = wit_b = None
    for _ in range(probes):
        u, v, w = tuple_from_rng(space, rng, (1, 1, 1), antiholomorphic=True)
        for (p, q, r) in ((u, v, w), (v, w, u), (w, u, v)):
            aval = R.eval(p, q, r, p)
            if a_ok and not zero(aval):
                a_ok, wit_a = False, ((p, q, r), aval)
            k1, k2 = sectional(R, p, q), sectional(R, p, r)
            if b_ok and not same(k1, k2):
                b_ok, wit_b = False, ((p, q, r), k1, k2)
    verdict = constant_antiholomorphic(R, probes=probes, seed=seed)
    c_ok = verdict.is_constant
    return EquivalenceReport(a_ok, b_ok, c_ok, agree=(a_ok == b_ok == c_ok),
                             witness_a=wit_a, witness_b=wit_b, verdict_c=verdict)
