"""Algebraic curvature tensors and the sectional-curvature zoo.

A `CurvatureTensor` is a dense rank-4 component array R[i,j,k,l] over one
space, satisfying

    R(X,Y,Z,U) = -R(Y,X,Z,U) = -R(X,Y,U,Z) = R(Z,U,X,Y)

entrywise, with the first Bianchi identity available as an optional
projection.  All sectional curvatures are ratios against the constant
curvature form

    pi1(X,Y,Z,U) = g(X,U) g(Y,Z) - g(X,Z) g(Y,U),

which makes them basis independent and fixes the sign convention on
mixed-signature planes (an orthonormal (+,-) pair has pi1(x,a,a,x) = -1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .scalars import ExactComplex, is_exact
from .spaces import (ComplexVector, DegeneratePlaneError, DimensionMismatch,
                     GeometryError, InvariantViolation, PseudoHermitianSpace,
                     as_complex, is_float_vector)

# absolute tolerance (relative to the largest component) for float tensors
FLOAT_SYMMETRY_TOL = 1e-9


def _scale(C: np.ndarray) -> float:
    m = float(max((abs(float(x)) for x in np.asarray(C, dtype=float).flat), default=0.0))
    return max(1.0, m)


def symmetrize_components(C: np.ndarray) -> np.ndarray:
    """Project onto tensors with both antisymmetries and pair-exchange."""
    C = C - C.transpose(1, 0, 2, 3)
    C = C - C.transpose(0, 1, 3, 2)
    C = C + C.transpose(2, 3, 0, 1)
    return C / 8


def bianchi_cyclic_sum(C: np.ndarray) -> np.ndarray:
    """First-Bianchi cyclic sum over the first three slots."""
    return C + C.transpose(1, 2, 0, 3) + C.transpose(2, 0, 1, 3)


def bianchi_project(C: np.ndarray) -> np.ndarray:
    """Remove the alternating part; input must already be pair-symmetric."""
    return (2 * C - C.transpose(1, 2, 0, 3) - C.transpose(2, 0, 1, 3)) / 3


def failing_symmetries(C: np.ndarray, bianchi: bool = False) -> list[str]:
    """Names of violated tensor invariants, empty when all hold."""
    exact = C.dtype == object
    checks = [
        ("antisym-12", C + C.transpose(1, 0, 2, 3)),
        ("antisym-34", C + C.transpose(0, 1, 3, 2)),
        ("pair-exchange", C - C.transpose(2, 3, 0, 1)),
    ]
    if bianchi:
        checks.append(("bianchi", bianchi_cyclic_sum(C)))
    bad = []
    tol = 0 if exact else FLOAT_SYMMETRY_TOL * _scale(C)
    for name, diff in checks:
        if exact:
            if (diff != 0).any():
                bad.append(name)
        elif np.abs(diff).max() > tol:
            bad.append(name)
    return bad


@dataclass(frozen=True, eq=False)
class CurvatureTensor:
    """Immutable curvature tensor over a fixed space."""

    space: PseudoHermitianSpace
    components: np.ndarray
    bianchi: bool = False      # True when the Bianchi identity was enforced
    validate: bool = True      # False only for freshly projected components

    def __post_init__(self):
        n = self.space.n
        if self.components.shape != (n, n, n, n):
            raise DimensionMismatch(f"components must be {(n, n, n, n)}")
        self.components.setflags(write=False)
        if self.validate:
            bad = failing_symmetries(self.components, bianchi=self.bianchi)
            if bad:
                raise InvariantViolation(bad[0], "curvature symmetry violated")

    @property
    def is_exact(self) -> bool:
        return self.components.dtype == object

    # -- evaluation --------------------------------------------------------

    def eval(self, X, Y, Z, U):
        """Multilinear contraction R(X,Y,Z,U) on real vectors."""
        for v in (X, Y, Z, U):
            if len(v) != self.space.n:
                raise DimensionMismatch("vector length does not match tensor space")
        out = self.components
        for v in (U, Z, Y, X):
            out = np.tensordot(out, np.asarray(v), axes=([out.ndim - 1], [0]))
        return out.item()

    def eval_c(self, X, Y, Z, U):
        """Complex-multilinear extension; restricts to `eval` on real input."""
        vs = [as_complex(self.space, v) for v in (X, Y, Z, U)]
        floaty = not self.is_exact or any(is_float_vector(v) for v in (X, Y, Z, U))
        re = im = 0
        for bits in product((0, 1), repeat=4):
            parts = []
            skip = False
            for v, b in zip(vs, bits):
                p = v.im if b else v.re
                if not np.any(np.asarray(p) != 0):
                    skip = True
                    break
                parts.append(p)
            if skip:
                continue
            val = self.eval(*parts)
            k = sum(bits) % 4
            if k == 0:
                re = re + val
            elif k == 1:
                im = im + val
            elif k == 2:
                re = re - val
            else:
                im = im - val
        if floaty:
            return complex(float(re), float(im))
        return ExactComplex(Fraction(re), Fraction(im))

    def to_float(self) -> "CurvatureTensor":
        if not self.is_exact:
            return self
        return CurvatureTensor(self.space,
                               np.asarray(self.components, dtype=float),
                               bianchi=self.bianchi, validate=False)


@dataclass(frozen=True)
class CurvatureValue:
    """A curvature number tagged with the evaluation path that produced it."""

    value: object
    path: str                  # 'real' | 'complex'


def curvature_of_plane(R: "CurvatureTensor", u, v) -> CurvatureValue:
    """Sectional curvature of span{u, v}, tagged by evaluation path.

    Real input pairs go through the real contraction; anything complexified
    goes through the complex-multilinear extension.  Complex evaluations of
    real inputs carry a zero imaginary part.
    """
    if isinstance(u, ComplexVector) or isinstance(v, ComplexVector):
        return CurvatureValue(sectional_c(R, u, v), "complex")
    return CurvatureValue(sectional(R, u, v), "real")


def from_dense(space: PseudoHermitianSpace, components: np.ndarray,
               symmetrize: bool = False, bianchi_projection: bool = False) -> CurvatureTensor:
    C = components
    if symmetrize:
        C = symmetrize_components(C)
    if bianchi_projection:
        C = bianchi_project(C)
    # a projection guarantees its own invariants; validate only raw input
    return CurvatureTensor(space, C, bianchi=bianchi_projection,
                           validate=not symmetrize)


def from_components(space: PseudoHermitianSpace, entries,
                    symmetrize: bool = False, bianchi_projection: bool = False) -> CurvatureTensor:
    """Build a tensor from a sparse list of (i, j, k, l, value), 0-based.

    With `symmetrize` the input is projected onto the symmetry subspace;
    otherwise the entries must already satisfy the symmetries.
    """
    n = space.n
    entries = list(entries)
    floaty = any(isinstance(e[4], float) for e in entries)
    if floaty:
        C = np.zeros((n, n, n, n))
    else:
        C = np.empty((n, n, n, n), dtype=object)
        C[...] = Fraction(0)
    for (i, j, k, l, value) in entries:
        for idx in (i, j, k, l):
            if not 0 <= idx < n:
                raise DimensionMismatch(f"index {idx} out of range 0..{n - 1}")
        if isinstance(value, float):
            if not math.isfinite(value):
                raise GeometryError(f"non-finite component value {value!r}")
            C[i, j, k, l] = C[i, j, k, l] + value
        else:
            C[i, j, k, l] = C[i, j, k, l] + Fraction(value)
    return from_dense(space, C, symmetrize=symmetrize, bianchi_projection=bianchi_projection)


# -- the constant-curvature form and friends --------------------------------

def pi1(space: PseudoHermitianSpace, X, Y, Z, U):
    g = space.inner
    return g(X, U) * g(Y, Z) - g(X, Z) * g(Y, U)


def pi1_c(space: PseudoHermitianSpace, X, Y, Z, U):
    g = space.inner_c
    return g(X, U) * g(Y, Z) - g(X, Z) * g(Y, U)


def pi1_components(space: PseudoHermitianSpace) -> np.ndarray:
    n = space.n
    s = space.metric_signs
    C = np.empty((n, n, n, n), dtype=object)
    C[...] = Fraction(0)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            C[i, j, j, i] = Fraction(s[i] * s[j])
            C[i, j, i, j] = Fraction(-s[i] * s[j])
    return C


def _gram_rank_real(space, u, v, exact: bool) -> int:
    g = space.inner
    a, b, c = g(u, u), g(u, v), g(v, v)
    if exact:
        if a * c - b * b != 0:
            return 2
        return 1 if (a or b or c) else 0
    gram = np.array([[a, b], [b, c]], dtype=float)
    sv = np.linalg.svd(gram, compute_uv=False)
    thresh = 1e-9 * max(1.0, float(np.abs(gram).max()))
    return int((sv > thresh).sum())


def sectional(R: CurvatureTensor, u, v):
    """Sectional curvature of span{u,v}: eval(u,v,v,u) / pi1(u,v,v,u).

    Depends only on the span.  Raises DegeneratePlaneError (carrying the
    Gram rank) on weakly or totally isotropic planes.
    """
    space = R.space
    den = pi1(space, u, v, v, u)
    exact = is_exact(den)
    num = R.eval(u, v, v, u)
    if (exact and den == 0) or (not exact and abs(den) <= 1e-12 * max(1.0, abs(num))):
        rank = _gram_rank_real(space, u, v, exact)
        raise DegeneratePlaneError(
            f"plane is degenerate (gram rank {rank}); sectional curvature undefined", rank)
    return num / den


def sectional_c(R: CurvatureTensor, u, v):
    """Complexified sectional curvature of span{u,v} in the complexification."""
    space = R.space
    den = pi1_c(space, u, v, v, u)
    num = R.eval_c(u, v, v, u)
    if isinstance(den, ExactComplex):
        degenerate = not den
    else:
        degenerate = abs(den) <= 1e-12 * max(1.0, abs(num))
    if degenerate:
        raise DegeneratePlaneError("complexified plane is degenerate", 1)
    return num / den


def holomorphic_sectional(R: CurvatureTensor, X):
    """H(X): sectional curvature of the holomorphic plane span{X, JX}."""
    g = R.space.inner(X, X)
    if is_exact(g):
        isotropic = g == 0
    else:
        isotropic = abs(g) <= 1e-12
    if isotropic:
        raise DegeneratePlaneError("X is isotropic; holomorphic plane degenerate", 1)
    return sectional(R, X, R.space.apply_J(X))


def biholomorphic(R: CurvatureTensor, X, Y):
    """Totally real biholomorphic curvature R(X, JX, JY, Y).

    Requires an antiholomorphic orthonormal pair; the raw value is returned
    (its sign normalization across signatures is the caller's business).
    """
    space = R.space
    g = space.inner
    checks = [
        ("unit-X", g(X, X) * g(X, X) - 1),
        ("unit-Y", g(Y, Y) * g(Y, Y) - 1),
        ("orthogonal", g(X, Y)),
        ("antiholomorphic", g(X, space.apply_J(Y))),
    ]
    exact = all(is_exact(v) for _, v in checks)
    for name, v in checks:
        bad = (v != 0) if exact else abs(float(v)) > 1e-9
        if bad:
            raise GeometryError(
                f"biholomorphic curvature needs an antiholomorphic orthonormal pair ({name} fails)")
    return R.eval(X, space.apply_J(X), space.apply_J(Y), Y)
