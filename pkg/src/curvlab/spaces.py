"""Tangent-space model: indefinite inner product, complex structure, planes.

A `PseudoHermitianSpace` is R^{2m} carrying the diagonal inner product with
signs (-1,...,-1,+1,...,+1) (2s minus signs first) and an almost complex
structure J with J^2 = -id and g(JX, JY) = g(X, Y).  Vectors are plain numpy
arrays: dtype=object with Fraction entries in the exact backend, float64 in
the float backend.  Complexified vectors are `ComplexVector` pairs (re, im);
the complex extension of g is complex-bilinear, never sesquilinear.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .linsolve import field_rank, solve_matrix
from .scalars import ExactComplex, is_exact, rational, tiny_rational


class GeometryError(ValueError):
    """Base class for precondition violations in geometric operations."""


class DimensionMismatch(GeometryError):
    pass


class DependentVectorsError(GeometryError):
    pass


class DegeneratePlaneError(GeometryError):
    def __init__(self, message: str, gram_rank: int):
        super().__init__(message)
        self.gram_rank = gram_rank


class UnrealizablePatternError(GeometryError):
    pass


class InvariantViolation(GeometryError):
    """Raised with the name of the failing structural invariant."""

    def __init__(self, name: str, message: str):
        super().__init__(f"{name}: {message}")
        self.invariant = name


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def canonical_complex_structure(m: int) -> np.ndarray:
    """J sending e_{2k} -> e_{2k+1} -> -e_{2k} inside each 2-block (0-based)."""
    n = 2 * m
    J = np.zeros((n, n), dtype=object)
    J[:, :] = 0
    for b in range(m):
        J[2 * b + 1, 2 * b] = 1
        J[2 * b, 2 * b + 1] = -1
    return _freeze(J)


@dataclass(frozen=True, eq=False)
class PseudoHermitianSpace:
    """2m-dimensional inner-product space with compatible complex structure.

    Immutable after construction; all operations are pure functions, so
    instances can be shared freely across threads.
    """

    m: int
    s: int
    metric_signs: tuple
    J: np.ndarray

    @property
    def n(self) -> int:
        return 2 * self.m

    @property
    def is_definite(self) -> bool:
        return self.s == 0 or self.s == self.m

    @property
    def is_indefinite(self) -> bool:
        return not self.is_definite

    @cached_property
    def J_float(self) -> np.ndarray:
        return _freeze(np.array([[float(x) for x in row] for row in self.J]))

    @cached_property
    def has_canonical_J(self) -> bool:
        return bool((self.J == canonical_complex_structure(self.m)).all())

    def __post_init__(self):
        if self.m < 1:
            raise GeometryError("complex dimension m must be >= 1")
        if not 0 <= self.s <= self.m:
            raise GeometryError(f"need 0 <= s <= m, got s={self.s}, m={self.m}")
        signs = tuple(self.metric_signs)
        expected = (-1,) * (2 * self.s) + (1,) * (2 * (self.m - self.s))
        if signs != expected:
            raise InvariantViolation("signs.layout",
                                     "metric signs must be 2s entries -1 followed by +1")
        J = self.J
        if J.shape != (self.n, self.n):
            raise InvariantViolation("J.shape", f"J must be {self.n}x{self.n}")
        exact = all(is_exact(x) for x in J.flat)
        JJ = J.dot(J)
        minus_id = -np.eye(self.n)
        G = np.diag(np.array(signs, dtype=object))
        JGJ = J.T.dot(G.dot(J))
        if exact:
            if not (JJ == np.diag(np.array([-1] * self.n, dtype=object))).all():
                raise InvariantViolation("J.square", "J o J != -identity")
            if not (JGJ == G).all():
                raise InvariantViolation("J.metric-compat", "g(JX,JY) != g(X,Y)")
        else:
            if not np.allclose(np.asarray(JJ, dtype=float), minus_id, atol=1e-12):
                raise InvariantViolation("J.square", "J o J != -identity (1e-12)")
            if not np.allclose(np.asarray(JGJ, dtype=float),
                               np.asarray(G, dtype=float), atol=1e-12):
                raise InvariantViolation("J.metric-compat", "g(JX,JY) != g(X,Y) (1e-12)")

    # -- vectors ----------------------------------------------------------

    def vector(self, coords) -> np.ndarray:
        """Coerce coordinates to a vector of this space.

        Floats give a float64 vector; ints, Fractions and 'p/q' strings give
        an exact one.
        """
        coords = list(coords)
        if len(coords) != self.n:
            raise DimensionMismatch(f"expected {self.n} coordinates, got {len(coords)}")
        if any(isinstance(c, float) for c in coords):
            return _freeze(np.array([float(c) for c in coords]))
        return _freeze(np.array([rational(c) for c in coords], dtype=object))

    def basis_vector(self, i: int) -> np.ndarray:
        """e_i, 0-based.  (File formats are 1-based; the parser converts.)"""
        if not 0 <= i < self.n:
            raise DimensionMismatch(f"basis index {i} out of range 0..{self.n - 1}")
        v = np.array([Fraction(0)] * self.n, dtype=object)
        v[i] = Fraction(1)
        return _freeze(v)

    def _check_vec(self, u):
        if len(u) != self.n:
            raise DimensionMismatch(f"vector of length {len(u)} in a space of dimension {self.n}")

    # -- inner products ---------------------------------------------------

    def inner(self, u, v):
        """Indefinite inner product sum_i sign_i u_i v_i."""
        self._check_vec(u)
        self._check_vec(v)
        acc = 0
        for sg, a, b in zip(self.metric_signs, u, v):
            acc = acc + sg * a * b
        return acc

    def inner_c(self, u, v):
        """Complex-bilinear extension of `inner` (not conjugate-linear)."""
        uc = as_complex(self, u)
        vc = as_complex(self, v)
        rr = self.inner(uc.re, vc.re)
        ii = self.inner(uc.im, vc.im)
        ri = self.inner(uc.re, vc.im)
        ir = self.inner(uc.im, vc.re)
        re, im = rr - ii, ri + ir
        if is_exact(re) and is_exact(im):
            return ExactComplex(Fraction(re), Fraction(im))
        return complex(float(re), float(im))

    def apply_J(self, u):
        """Matrix action of J; extends entrywise to ComplexVector."""
        if isinstance(u, ComplexVector):
            return ComplexVector(self.apply_J(u.re), self.apply_J(u.im))
        self._check_vec(u)
        J = self.J if isinstance(u, np.ndarray) and u.dtype == object else self.J_float
        return J.dot(np.asarray(u))

    # -- planes -----------------------------------------------------------

    def classify_plane(self, u, v) -> "PlaneClass":
        return classify_plane(self, u, v)


@dataclass(frozen=True, eq=False)
class ComplexVector:
    """Complexified tangent vector re + i*im (both parts in the same space)."""

    re: np.ndarray
    im: np.ndarray

    def __post_init__(self):
        if len(self.re) != len(self.im):
            raise DimensionMismatch("re and im parts differ in length")

    def conjugate(self) -> "ComplexVector":
        return ComplexVector(self.re, -np.asarray(self.im))

    def __add__(self, other):
        return ComplexVector(self.re + other.re, self.im + other.im)

    def scaled(self, c) -> "ComplexVector":
        if isinstance(c, (ExactComplex, complex)):
            re = np.asarray(self.re) * c.real - np.asarray(self.im) * c.imag
            im = np.asarray(self.re) * c.imag + np.asarray(self.im) * c.real
            return ComplexVector(re, im)
        return ComplexVector(np.asarray(self.re) * c, np.asarray(self.im) * c)


def as_complex(space: PseudoHermitianSpace, u) -> ComplexVector:
    """Promote a real vector to a ComplexVector; pass ComplexVector through."""
    if isinstance(u, ComplexVector):
        return u
    space._check_vec(u)
    if isinstance(u, np.ndarray) and u.dtype != object:
        zero = np.zeros(space.n)
    else:
        zero = np.array([Fraction(0)] * space.n, dtype=object)
    return ComplexVector(np.asarray(u), zero)


def is_float_vector(u) -> bool:
    if isinstance(u, ComplexVector):
        return is_float_vector(u.re) or is_float_vector(u.im)
    return isinstance(u, np.ndarray) and u.dtype != object


@dataclass(frozen=True)
class PlaneClass:
    """Taxonomy of a 2-plane: holomorphy, Gram rank, signature label.

    `gram_rank == 1` is exactly the weakly isotropic case.  The signature
    label exists only for rank-2 planes whose Gram form is real; complex
    planes with non-real Gram entries get None.
    """

    holomorphy: str            # 'holomorphic' | 'antiholomorphic' | 'generic'
    gram_rank: int
    signature_label: Optional[str]

    @property
    def weakly_isotropic(self) -> bool:
        return self.gram_rank == 1


def _rank_exact(rows: Sequence[Sequence], ncols: int) -> int:
    return field_rank([list(r) for r in rows], ncols)


def _rank_float(rows, tol_scale: float = 1.0) -> int:
    a = np.array(rows, dtype=complex)
    if not a.any():
        return 0
    sv = np.linalg.svd(a, compute_uv=False)
    thresh = 1e-9 * max(1.0, float(abs(a).max())) * tol_scale
    return int((sv > thresh).sum())


def _complex_rows(vectors) -> list[list]:
    """Rows of coordinates over the exact complex field."""
    rows = []
    for w in vectors:
        if isinstance(w, ComplexVector):
            rows.append([ExactComplex(Fraction(a), Fraction(b))
                         for a, b in zip(w.re, w.im)])
        else:
            rows.append([ExactComplex(Fraction(a), Fraction(0)) for a in w])
    return rows


def _span_rank(space, vectors, exact: bool) -> int:
    if exact:
        return _rank_exact(_complex_rows(vectors), space.n)
    rows = []
    for w in vectors:
        if isinstance(w, ComplexVector):
            rows.append(np.asarray(w.re, dtype=float) + 1j * np.asarray(w.im, dtype=float))
        else:
            rows.append(np.asarray(w, dtype=float).astype(complex))
    return _rank_float(rows)


def classify_plane(space: PseudoHermitianSpace, u, v) -> PlaneClass:
    """Classify span{u, v}: holomorphy, Gram rank, and signature when real.

    Accepts real vectors or ComplexVector pairs.  Holomorphy and Gram rank
    are invariants of the span; the signature label of a complex plane is
    only reported when the Gram matrix of the *given* basis is real.
    """
    exact = not (is_float_vector(u) or is_float_vector(v))
    if _span_rank(space, [u, v], exact) < 2:
        raise DependentVectorsError("plane basis vectors are linearly dependent")

    complex_input = isinstance(u, ComplexVector) or isinstance(v, ComplexVector)
    ip = space.inner_c if complex_input else space.inner
    ju, jv = space.apply_J(u), space.apply_J(v)

    if _span_rank(space, [u, v, ju], exact) == 2 and _span_rank(space, [u, v, jv], exact) == 2:
        holomorphy = "holomorphic"
    elif _is_zero_scalar(ip(u, jv), exact):
        # g(u,Ju) = g(v,Jv) = 0 automatically; the single cross term decides
        holomorphy = "antiholomorphic"
    else:
        holomorphy = "generic"

    guu, guv, gvv = ip(u, u), ip(u, v), ip(v, v)
    if exact:
        det = guu * gvv - guv * guv
        if det != 0:
            rank = 2
        elif guu or guv or gvv:
            rank = 1
        else:
            rank = 0
    else:
        gram = np.array([[complex(guu), complex(guv)], [complex(guv), complex(gvv)]])
        rank = _rank_float(gram)

    label = None
    if rank == 2:
        entries = [guu, guv, gvv]
        if complex_input:
            real = all(_is_zero_scalar(_imag_part(x), exact) for x in entries)
            if real:
                entries = [_real_part(x) for x in entries]
            else:
                entries = None
        if entries is not None:
            a, b, c = (entries if exact
                       else [float(np.real(complex(x))) for x in entries])
            det = a * c - b * b
            if det < 0:
                label = "(+,-)"
            elif a + c > 0:
                label = "(+,+)"
            else:
                label = "(-,-)"
    return PlaneClass(holomorphy, rank, label)


def _is_zero_scalar(x, exact: bool) -> bool:
    if exact:
        return not x
    return abs(complex(x)) <= 1e-9


def _real_part(x):
    return x.real if isinstance(x, (ExactComplex, complex)) else x


def _imag_part(x):
    return x.imag if isinstance(x, (ExactComplex, complex)) else 0


def make_space(m: int, s: int, J=None) -> PseudoHermitianSpace:
    """Space of complex dimension m with s negative 2-blocks.

    With J omitted the canonical block structure is used.  A custom J is
    accepted iff it satisfies J^2 = -id and g(JX,JY) = g(X,Y); entries may
    be ints, Fractions or 'p/q' strings.
    """
    if not isinstance(m, int) or not isinstance(s, int):
        raise GeometryError("m and s must be integers")
    if m < 1 or s < 0 or s > m:
        raise GeometryError(f"need m >= 1 and 0 <= s <= m, got m={m}, s={s}")
    signs = (-1,) * (2 * s) + (1,) * (2 * (m - s))
    if J is None:
        Jm = canonical_complex_structure(m)
    else:
        rows = [list(row) for row in J]
        if any(isinstance(x, float) for row in rows for x in row):
            Jm = np.array([[float(x) for x in row] for row in rows], dtype=object)
        else:
            Jm = np.array([[rational(x) for x in row] for row in rows], dtype=object)
        if Jm.shape != (2 * m, 2 * m):
            raise InvariantViolation("J.shape", f"J must be {2*m}x{2*m}")
        Jm = _freeze(Jm)
    return PseudoHermitianSpace(m=m, s=s, metric_signs=signs, J=Jm)


# -- exact orthonormal tuples ---------------------------------------------
#
# Rational vectors cannot be rescaled to unit norm, so orthonormal tuples are
# produced as images of standard basis vectors under random exact isometries:
# products of plane rotations with Pythagorean-triple coefficients (and their
# hyperbolic counterparts across mixed-sign coordinate pairs).  Rotation
# coefficients come from a fixed small table, so entries stay short rationals
# and downstream exact elimination is cheap.  For antiholomorphic tuples the
# rotations act per J-block (complex phases and block mixes), which makes the
# isometry commute with J and preserves the J-orthogonality of the
# block-representative seeds.

_CIRCLE_PAIRS = tuple((Fraction(a, c), Fraction(b, c))
                      for a, b, c in ((3, 4, 5), (5, 12, 13), (8, 15, 17),
                                      (7, 24, 25), (20, 21, 29)))
_BOOST_PAIRS = tuple((Fraction(c, a), Fraction(b, a))
                     for a, b, c in ((3, 4, 5), (5, 12, 13), (12, 5, 13),
                                     (8, 15, 17), (15, 8, 17), (7, 24, 25),
                                     (24, 7, 25), (20, 21, 29)))


def _rotation_coeffs(rng: random.Random, same_sign: bool):
    if same_sign:
        c, s = rng.choice(_CIRCLE_PAIRS)
        if rng.getrandbits(1):
            c, s = s, c
    else:
        c, s = rng.choice(_BOOST_PAIRS)
    if rng.getrandbits(1):
        s = -s
    return c, s


def _rotate_rows(T: np.ndarray, i: int, j: int, c, s, same_sign: bool):
    ri, rj = T[i].copy(), T[j].copy()
    if same_sign:
        T[i] = c * ri - s * rj
        T[j] = s * ri + c * rj
    else:
        T[i] = c * ri + s * rj
        T[j] = s * ri + c * rj


def light_isometry(signs: Sequence[int], rng: random.Random,
                   unitary: bool = False, depth: Optional[int] = None,
                   max_boosts: int = 2) -> np.ndarray:
    """Exact isometry of diag(signs) as a product of table rotations.

    With `unitary` the sign list must consist of equal-sign coordinate pairs
    (the J-block layout); rotations are then phases inside one block or
    identical rotations across two blocks, so the result commutes with the
    canonical J.  Hyperbolic steps across mixed-sign pairs are capped at
    `max_boosts` to keep frame coordinates moderate (each boost stretches
    them by its table factor).
    """
    n = len(signs)
    T = np.empty((n, n), dtype=object)
    T[...] = Fraction(0)
    for i in range(n):
        T[i, i] = Fraction(1)
    if depth is None:
        depth = 2 * n + 4
    boosts = 0
    if unitary:
        m = n // 2
        if n % 2 or any(signs[2 * b] != signs[2 * b + 1] for b in range(m)):
            raise GeometryError("unitary rotations need equal-sign coordinate pairs")
        for _ in range(depth):
            if m == 1 or rng.random() < 0.4:
                b = rng.randrange(m)
                c, s = _rotation_coeffs(rng, True)
                _rotate_rows(T, 2 * b, 2 * b + 1, c, s, True)
            else:
                b1, b2 = rng.sample(range(m), 2)
                same = signs[2 * b1] == signs[2 * b2]
                if not same:
                    if boosts >= max_boosts:
                        continue
                    boosts += 1
                c, s = _rotation_coeffs(rng, same)
                _rotate_rows(T, 2 * b1, 2 * b2, c, s, same)
                _rotate_rows(T, 2 * b1 + 1, 2 * b2 + 1, c, s, same)
    else:
        for _ in range(depth):
            i, j = rng.sample(range(n), 2)
            same = signs[i] == signs[j]
            if not same:
                if boosts >= max_boosts:
                    continue
                boosts += 1
            c, s = _rotation_coeffs(rng, same)
            _rotate_rows(T, i, j, c, s, same)
    return T


def cayley_isometry(signs: Sequence[int], rng: random.Random, J=None) -> Optional[np.ndarray]:
    """Random exact isometry of diag(signs); commutes with J when given.

    The Cayley transform of a g-antisymmetric (optionally J-commuting)
    matrix.  Denser rationals than `light_isometry`; kept as an independent
    construction for cross-checks.  Returns None when the draw lands on a
    singular I + A (caller redraws).
    """
    n = len(signs)
    M = [[tiny_rational(rng) for _ in range(n)] for _ in range(n)]
    M = np.array(M, dtype=object)
    if J is not None:
        M = (M - J.dot(M).dot(J)) / 2          # commutant-of-J projection
    G = np.diag(np.array(list(signs), dtype=object))
    A = (M - G.dot(M.T).dot(G)) / 2            # g-antisymmetric part
    eye = np.diag(np.array([Fraction(1)] * n, dtype=object))
    sol = solve_matrix((eye + A).tolist(), (eye - A).tolist())
    if sol is None:
        return None
    return np.array(sol, dtype=object)


def _draw_isometry(signs, rng, unitary: bool = False) -> np.ndarray:
    return light_isometry(signs, rng, unitary=unitary)


def random_isometry(space: PseudoHermitianSpace, rng: random.Random,
                    unitary: bool = False) -> np.ndarray:
    """Exact rational isometry of the space; J-commuting when `unitary`."""
    if unitary and not space.has_canonical_J:
        raise GeometryError("J-commuting isometries require the canonical J")
    return _draw_isometry(space.metric_signs, rng, unitary=unitary)


def _normalize_pattern(pattern) -> tuple:
    out = []
    for p in pattern:
        if p in (1, -1):
            out.append(int(p))
        elif p in ("+", "+1"):
            out.append(1)
        elif p in ("-", "-1"):
            out.append(-1)
        else:
            raise UnrealizablePatternError(f"bad sign {p!r} in pattern")
    return tuple(out)


def tuple_from_rng(space: PseudoHermitianSpace, rng: random.Random, pattern,
                   antiholomorphic: bool = False) -> list[np.ndarray]:
    """Exact orthonormal tuple with the requested signs, drawn from `rng`."""
    pattern = _normalize_pattern(pattern)
    plus, minus = pattern.count(1), pattern.count(-1)
    if antiholomorphic:
        if not space.has_canonical_J:
            raise GeometryError("antiholomorphic tuples require the canonical J")
        if plus > space.m - space.s or minus > space.s:
            raise UnrealizablePatternError(
                f"antiholomorphic pattern {pattern} needs {plus} positive and "
                f"{minus} negative J-blocks; space has {space.m - space.s} and {space.s}")
        T = random_isometry(space, rng, unitary=True)
        next_minus, next_plus = 0, space.s
        cols = []
        for p in pattern:
            if p == 1:
                cols.append(2 * next_plus)
                next_plus += 1
            else:
                cols.append(2 * next_minus)
                next_minus += 1
    else:
        if plus > 2 * (space.m - space.s) or minus > 2 * space.s:
            raise UnrealizablePatternError(
                f"pattern {pattern} exceeds signature ({2*space.s}, {2*(space.m-space.s)})")
        T = random_isometry(space, rng, unitary=False)
        next_minus, next_plus = 0, 2 * space.s
        cols = []
        for p in pattern:
            if p == 1:
                cols.append(next_plus)
                next_plus += 1
            else:
                cols.append(next_minus)
                next_minus += 1
    return [_freeze(T[:, c].copy()) for c in cols]


def gram_schmidt_tuple(space: PseudoHermitianSpace, seed: int, pattern,
                       antiholomorphic: bool = False) -> list[np.ndarray]:
    """Deterministic orthonormal tuple: g(u_i,u_i) = requested sign exactly,
    g(u_i,u_j) = 0, and g(u_i, J u_j) = 0 for all pairs when flagged
    antiholomorphic.
    """
    return tuple_from_rng(space, random.Random(seed), pattern, antiholomorphic)
