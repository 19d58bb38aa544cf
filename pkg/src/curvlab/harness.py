"""Model tensors, hypothesis constraint systems, and theorem verification.

Quantified curvature hypotheses ("... = 0 for every antiholomorphic pair")
are linear in the tensor, so they are imposed by instantiating the condition
on seeded exact-rational probe configurations until the constraint rank is
stable for ten consecutive draws, then solving for the nullspace inside the
symmetry-reduced component space.  Boundedness statements are tested through
their dichotomy: bounds hold on constant models, and nonconstant tensors
must blow up along pinching families approaching isotropic planes.

Pinching families are evaluated through their exact polynomial coefficients
rewritten in powers of sigma = 1 - t^2.  Near t = +-1 a direct float
contraction loses all significant digits to cancellation; the sigma form is
exact for rational tensors and keeps the ladder cheap.  For float tensors
the coefficients carry the float noise floor, which bounds how small a
detected blow-up coefficient can meaningfully be.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .constancy import (constant_antiholomorphic,
                        constant_biholomorphic, constant_holomorphic)
from .linsolve import RowReducer
from .polarization import (TPolynomial, VectorFamily, bound_forced_identities,
                           complexified_family_expansion, expand)
from .scalars import rand_rational, scalar_close
from .spaces import (GeometryError, PseudoHermitianSpace, _draw_isometry,
                     random_isometry, tuple_from_rng)
from .tensors import (CurvatureTensor, from_dense, pi1_components, sectional)


class HypothesisError(GeometryError):
    """Space parameters violate a theorem's hypotheses (CLI exit code 2)."""


# -- model tensors -----------------------------------------------------------

def model_constant_sectional(space: PseudoHermitianSpace, c) -> CurvatureTensor:
    """c * pi1: every nondegenerate plane has sectional curvature c."""
    comps = pi1_components(space) * Fraction(c)
    return CurvatureTensor(space, comps, bianchi=True)


def model_complex_space_form(space: PseudoHermitianSpace, c) -> CurvatureTensor:
    """The standard tensor with H = c: (c/4)(pi1 + J-paired terms)."""
    n = space.n
    g = space.inner
    e = [space.basis_vector(i) for i in range(n)]
    JG = np.empty((n, n), dtype=object)
    for i in range(n):
        Je = space.apply_J(e[i])
        for j in range(n):
            JG[i, j] = g(Je, e[j])
    P = pi1_components(space)
    c4 = Fraction(c) / 4
    C = np.empty((n, n, n, n), dtype=object)
    for i, j, k, l in np.ndindex(C.shape):
        C[i, j, k, l] = c4 * (P[i, j, k, l] + JG[i, l] * JG[j, k]
                              - JG[i, k] * JG[j, l] - 2 * JG[i, j] * JG[k, l])
    return CurvatureTensor(space, C, bianchi=True)


def random_tensor(space: PseudoHermitianSpace, seed: int,
                  bianchi: bool = True) -> CurvatureTensor:
    """Symmetrized (and by default Bianchi-projected) seeded random tensor."""
    rng = random.Random(seed)
    n = space.n
    flat = [rand_rational(rng) for _ in range(n ** 4)]
    C = np.array(flat, dtype=object).reshape(n, n, n, n)
    return from_dense(space, C, symmetrize=True, bianchi_projection=bianchi)


# -- the symmetry-reduced component space ------------------------------------

@lru_cache(maxsize=None)
def _pair_orbits(n: int) -> tuple:
    """Orbit presentation of the pair-symmetric tensor basis.

    Basis elements are indexed by unordered pairs {P <= Q} of 2-form indices
    P = (i<j); each element touches at most 8 components with signs +-1.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    orbits = []
    for a, (i, j) in enumerate(pairs):
        for (k, l) in pairs[a:]:
            entries = [((i, j, k, l), 1), ((j, i, k, l), -1),
                       ((i, j, l, k), -1), ((j, i, l, k), 1)]
            if (i, j) != (k, l):
                entries += [((k, l, i, j), 1), ((l, k, i, j), -1),
                            ((k, l, j, i), -1), ((l, k, j, i), 1)]
            orbits.append(tuple(entries))
    return tuple(orbits)


def functional_row(C: np.ndarray, orbits) -> list:
    """Project a raw coefficient tensor onto the pair-symmetric basis."""
    return [sum(sign * C[idx] for idx, sign in orbit) for orbit in orbits]


def tensor_from_coefficients(space: PseudoHermitianSpace, coeffs) -> CurvatureTensor:
    n = space.n
    orbits = _pair_orbits(n)
    C = np.empty((n, n, n, n), dtype=object)
    C[...] = Fraction(0)
    for c, orbit in zip(coeffs, orbits):
        if c:
            for idx, sign in orbit:
                C[idx] = C[idx] + sign * c
    return CurvatureTensor(space, C)


def _outer4(a, b, c, d) -> np.ndarray:
    return np.multiply.outer(np.multiply.outer(np.asarray(a), np.asarray(b)),
                             np.multiply.outer(np.asarray(c), np.asarray(d)))


# -- hypothesis conditions ----------------------------------------------------
#
# Every condition functional is homogeneous in each quantified vector, so
# unit-length normalizations can be dropped when building constraint rows:
# small-integer points of the quantifier variety (found by rejection
# sampling) impose the same hyperplanes as orthonormal configurations while
# keeping elimination entries tiny.  The recheck path `condition_holds`
# deliberately uses the independent isometry-based constructions instead.

def _thmA_x_signs(space) -> list[int]:
    signs = []
    if space.m - space.s >= 2 and space.s >= 1:
        signs.append(1)
    if space.s >= 2 and space.m - space.s >= 1:
        signs.append(-1)
    return signs


def _small_int_vector(rng, n, bound=3) -> np.ndarray:
    v = np.empty(n, dtype=object)
    for i in range(n):
        v[i] = rng.randint(-bound, bound)
    return v


def _int_perp_basis(space, vectors) -> list[np.ndarray]:
    """Integer basis of the g-orthogonal complement of the given vectors."""
    n = space.n
    red = RowReducer(n)
    for v in vectors:
        red.add_row([Fraction(space.metric_signs[i] * v[i]) for i in range(n)])
    basis = []
    for vec in red.nullspace():
        lcm = 1
        for f in vec:
            lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
        ints = [int(f * lcm) for f in vec]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        out = np.empty(n, dtype=object)
        for i, x in enumerate(ints):
            out[i] = x // g if g > 1 else x
        basis.append(out)
    return basis


def _reject_combo(rng, basis, predicate, tries=400, bound=3):
    for _ in range(tries):
        w = None
        for b in basis:
            term = b * rng.randint(-bound, bound)
            w = term if w is None else w + term
        if w is not None and any(w) and predicate(w):
            return w
    return None


def _small_pair_config(space, rng, x_positive, partner_sign):
    """Integer (x, w) with g(x,w) = g(x,Jw) = 0 and Q-signs as requested."""
    for _ in range(100):
        x = _small_int_vector(rng, space.n)
        q = space.inner(x, x)
        if (q <= 0) if x_positive else (q >= 0):
            continue
        basis = _int_perp_basis(space, [x, space.apply_J(x)])
        def want(w, sign=partner_sign):
            qw = space.inner(w, w)
            return qw > 0 if sign > 0 else (qw < 0 if sign < 0 else qw == 0)
        w = _reject_combo(rng, basis, want)
        if w is not None:
            return x, w
    raise GeometryError("could not sample a probe configuration (signature too tight?)")


def _isotropic_config(space, rng, x_sign):
    """Unit X of given sign and exact isotropic xi with span{X, xi} weakly
    isotropic and antiholomorphic."""
    blocks = range(space.s, space.m) if x_sign == 1 else range(space.s)
    b0 = rng.choice(list(blocks))
    T = random_isometry(space, rng, unitary=True)
    X = T[:, 2 * b0].copy()
    comp_idx = [i for b in range(space.m) if b != b0 for i in (2 * b, 2 * b + 1)]
    sub_signs = [space.metric_signs[i] for i in comp_idx]
    S = _draw_isometry(sub_signs, rng)
    plus_b = next(b for b in range(space.s, space.m) if b != b0)
    minus_b = next(b for b in range(space.s) if b != b0)
    lp, ln = comp_idx.index(2 * plus_b), comp_idx.index(2 * minus_b)
    xi_local = S[:, lp] + S[:, ln]
    xi_amb = np.array([Fraction(0)] * space.n, dtype=object)
    for i, gi in enumerate(comp_idx):
        xi_amb[gi] = xi_local[i]
    xi = T.dot(xi_amb)
    return X, xi


def _complexified_isotropic_config(space, rng):
    """Unit x and orthonormal u, v away from span{x, Jx} (definite metric);
    xi = u + i v is isotropic and span{x, xi} is weakly isotropic
    antiholomorphic in the complexification."""
    b0 = rng.randrange(space.m)
    T = random_isometry(space, rng, unitary=True)
    x = T[:, 2 * b0].copy()
    comp_idx = [i for b in range(space.m) if b != b0 for i in (2 * b, 2 * b + 1)]
    sub_signs = [space.metric_signs[i] for i in comp_idx]
    S = _draw_isometry(sub_signs, rng)
    l1, l2 = rng.sample(range(len(comp_idx)), 2)
    def embed(col):
        amb = np.array([Fraction(0)] * space.n, dtype=object)
        for i, gi in enumerate(comp_idx):
            amb[gi] = col[i]
        return T.dot(amb)
    return x, embed(S[:, l1]), embed(S[:, l2])


@dataclass(frozen=True)
class _Condition:
    check_space: Callable[[PseudoHermitianSpace], Optional[str]]
    rows: Callable[[PseudoHermitianSpace, random.Random], list]
    holds: Callable[[CurvatureTensor, random.Random], bool]


def _eq1_rows(space, rng):
    x, a = _small_pair_config(space, rng, x_positive=True, partner_sign=-1)
    J = space.apply_J
    return [_outer4(x, J(x), J(x), a) + _outer4(x, J(x), J(a), x)]


def _eq1_holds(R, rng):
    space = R.space
    x, a = tuple_from_rng(space, rng, (1, -1), antiholomorphic=True)
    J = space.apply_J
    return R.eval(x, J(x), J(x), a) + R.eval(x, J(x), J(a), x) == 0


def _lemma2_rows(space, rng):
    x, y = _small_pair_config(space, rng, x_positive=True, partner_sign=1)
    J = space.apply_J
    return [_outer4(x, J(x), J(x), y) + _outer4(x, J(x), J(y), x)]


def _lemma2_holds(R, rng):
    x, y = tuple_from_rng(R.space, rng, (1, 1), antiholomorphic=True)
    J = R.space.apply_J
    return R.eval(x, J(x), J(x), y) + R.eval(x, J(x), J(y), x) == 0


def _make_isotropic_rows(functional):
    def rows(space, rng):
        out = []
        for x_sign in _thmA_x_signs(space):
            X, xi = _small_pair_config(space, rng, x_positive=(x_sign == 1),
                                       partner_sign=0)
            out.append(functional(space, X, xi))
        return out
    return rows


def _thmA_functional(space, X, xi):
    return _outer4(X, xi, xi, X)


def _thm3_functional(space, X, xi):
    J = space.apply_J
    return _outer4(X, J(X), J(xi), xi)


def _thmA_holds(R, rng):
    for x_sign in _thmA_x_signs(R.space):
        X, xi = _isotropic_config(R.space, rng, x_sign)
        if R.eval(X, xi, xi, X) != 0:
            return False
    return True


def _thm3_holds(R, rng):
    J = R.space.apply_J
    for x_sign in _thmA_x_signs(R.space):
        X, xi = _isotropic_config(R.space, rng, x_sign)
        if R.eval(X, J(X), J(xi), xi) != 0:
            return False
    return True


def _thm6_config_small(space, rng):
    """Integer x and orthogonal u, v with equal norms away from span{x, Jx}."""
    for _ in range(100):
        x = _small_int_vector(rng, space.n)
        if space.inner(x, x) == 0:
            continue
        basis_u = _int_perp_basis(space, [x, space.apply_J(x)])
        u = _reject_combo(rng, basis_u, lambda w: space.inner(w, w) != 0)
        if u is None:
            continue
        basis_v = _int_perp_basis(space, [x, space.apply_J(x), u])
        alpha = space.inner(u, u)

        def equal_norm_possible(w):
            beta = space.inner(w, w)
            if beta == 0:
                return False
            prod = alpha * beta
            if prod < 0:
                return False
            return math.isqrt(prod) ** 2 == prod

        v = _reject_combo(rng, basis_v, equal_norm_possible)
        if v is None:
            continue
        beta = space.inner(v, v)
        # scale so norms match exactly: Q(beta*u) = Q(isqrt(alpha*beta)*v)
        return x, u * beta, v * math.isqrt(alpha * beta)
    raise GeometryError("could not sample a complexified probe configuration")


def _thm6_rows(space, rng):
    x, u, v = _thm6_config_small(space, rng)
    real = _outer4(x, u, u, x) - _outer4(x, v, v, x)
    imag = _outer4(x, u, v, x) + _outer4(x, v, u, x)
    return [real, imag]


def _thm6_holds(R, rng):
    from .spaces import ComplexVector
    x, u, v = _complexified_isotropic_config(R.space, rng)
    xi = ComplexVector(u, v)
    return not R.eval_c(x, xi, xi, x)


def _need(predicate, message):
    return None if predicate else message


CONDITIONS = {
    "eq1": _Condition(
        lambda sp: _need(sp.m > 1 and 0 < sp.s < sp.m,
                         "needs an indefinite space with m > 1"),
        _eq1_rows, _eq1_holds),
    "lemma2": _Condition(
        lambda sp: _need(sp.m - sp.s >= 2,
                         "needs at least two positive J-blocks (m - s >= 2)"),
        _lemma2_rows, _lemma2_holds),
    "thmA": _Condition(
        lambda sp: _need(sp.m > 2 and bool(_thmA_x_signs(sp)),
                         "needs m > 2 and an indefinite signature admitting "
                         "weakly isotropic antiholomorphic planes"),
        _make_isotropic_rows(_thmA_functional), _thmA_holds),
    "thm3": _Condition(
        lambda sp: _need(sp.m > 2 and bool(_thmA_x_signs(sp)),
                         "needs m > 2 and an indefinite signature admitting "
                         "weakly isotropic antiholomorphic planes"),
        _make_isotropic_rows(_thm3_functional), _thm3_holds),
    "thm6": _Condition(
        lambda sp: _need(sp.m > 2 and sp.s == 0,
                         "needs a definite space with m > 2"),
        _thm6_rows, _thm6_holds),
}


@dataclass(frozen=True, eq=False)
class ConstraintSystem:
    """Solution space of a curvature hypothesis imposed as linear constraints."""

    space: PseudoHermitianSpace
    condition_id: str
    rank: int
    solution_basis: tuple
    probes_used: int
    seed: int

    @property
    def dimension(self) -> int:
        return len(self.solution_basis)

    def random_element(self, seed: int) -> CurvatureTensor:
        rng = random.Random(seed)
        comps = None
        for B in self.solution_basis:
            term = B.components * rand_rational(rng)
            comps = term if comps is None else comps + term
        if comps is None:
            raise GeometryError("constraint system has a trivial solution space")
        return CurvatureTensor(self.space, comps)

    def condition_holds(self, R: CurvatureTensor, seed: int, count: int = 30) -> bool:
        """Recheck the named condition on fresh probe configurations."""
        rng = random.Random(seed)
        holds = CONDITIONS[self.condition_id].holds
        return all(holds(R, rng) for _ in range(count))


def impose(space: PseudoHermitianSpace, condition_id: str, seed: int = 0,
           saturation_run: int = 10) -> ConstraintSystem:
    """Impose a quantified curvature condition by rank-saturating probes.

    Fresh probe configurations are instantiated until `saturation_run`
    consecutive draws add no rank; the returned basis spans the solutions
    inside the pair-symmetric component space (no Bianchi projection).
    """
    if condition_id not in CONDITIONS:
        raise GeometryError(f"unknown condition {condition_id!r}")
    cond = CONDITIONS[condition_id]
    err = cond.check_space(space)
    if err:
        raise HypothesisError(f"{condition_id}: {err}")
    orbits = _pair_orbits(space.n)
    reducer = RowReducer(len(orbits))
    rng = random.Random(seed * 1_000_003 + 17)
    consecutive = 0
    used = 0
    cap = 10 * len(orbits) + 100
    while consecutive < saturation_run:
        grew = False
        for C in cond.rows(space, rng):
            if reducer.add_row(functional_row(C, orbits)):
                grew = True
        used += 1
        consecutive = 0 if grew else consecutive + 1
        if used > cap:
            raise GeometryError(f"rank saturation did not stabilize after {cap} probes")
    basis = tuple(tensor_from_coefficients(space, vec) for vec in reducer.nullspace())
    return ConstraintSystem(space, condition_id, reducer.rank, basis, used, seed)


# -- pinching families and the unboundedness probe ----------------------------

PROBE_KINDS = ("holomorphic", "antiholomorphic:(+,+)", "antiholomorphic:(+,-)",
               "antiholomorphic:(-,-)", "biholomorphic")


def _kind_realizable(space, kind) -> bool:
    plus, minus = space.m - space.s, space.s
    if kind == "holomorphic":
        return plus >= 1 and minus >= 1
    if kind in ("antiholomorphic:(+,+)", "antiholomorphic:(+,-)", "biholomorphic"):
        return plus >= 2 and minus >= 1
    if kind == "antiholomorphic:(-,-)":
        return minus >= 2 and plus >= 1
    raise GeometryError(f"unknown probe kind {kind!r}")


@dataclass(frozen=True)
class _Family:
    """One pinching family: numerator polynomial over sigma^multiplicity."""

    kind: str
    poly: TPolynomial
    multiplicity: int
    above_one: bool            # ladder approaches t = 1 from above
    base: np.ndarray
    direction: np.ndarray
    partner: Optional[np.ndarray]   # second spanning vector when not J-implied

    def spanning_pair(self, space, t):
        u = np.asarray(self.base) + t * np.asarray(self.direction)
        v = space.apply_J(u) if self.partner is None else self.partner
        return u, v


def _family_for(R, kind, tup) -> _Family:
    space = R.space
    J = space.apply_J
    if kind == "holomorphic":
        x, a = tup
        fam = VectorFamily.affine(x, a)
        famJ = VectorFamily.affine(J(x), J(a))
        p = expand(R, fam, famJ, famJ, fam)
        return _Family(kind, p, 2, False, x, a, None)
    if kind in ("antiholomorphic:(+,+)", "antiholomorphic:(+,-)"):
        x, y, a = tup
        fam = VectorFamily.affine(x, a)
        cy = VectorFamily.constant(y)
        p = expand(R, fam, cy, cy, fam)
        return _Family(kind, p, 1, kind.endswith("(+,-)"), x, a, y)
    if kind == "antiholomorphic:(-,-)":
        a1, a2, x = tup
        fam = VectorFamily.affine(a1, x)
        c2 = VectorFamily.constant(a2)
        p = expand(R, fam, c2, c2, fam)
        return _Family(kind, p, 1, False, a1, x, a2)
    if kind == "biholomorphic":
        x, y, a = tup
        fam = VectorFamily.affine(x, a)
        famJ = VectorFamily.affine(J(x), J(a))
        p = expand(R, fam, famJ, VectorFamily.constant(J(y)), VectorFamily.constant(y))
        return _Family(kind, p, 1, False, x, a, y)
    raise GeometryError(f"unknown probe kind {kind!r}")


def _tuple_for_kind(space, rng, kind):
    if kind == "holomorphic":
        return tuple_from_rng(space, rng, (1, -1), antiholomorphic=True)
    if kind == "antiholomorphic:(-,-)":
        return tuple_from_rng(space, rng, (-1, -1, 1), antiholomorphic=True)
    return tuple_from_rng(space, rng, (1, 1, -1), antiholomorphic=True)


def _sigma_coefficients(p: TPolynomial):
    """Rewrite p(t) = E(sigma) + t * O(sigma), sigma = 1 - t^2 (degree <= 4)."""
    a = list(p.coeffs) + [0] * (5 - len(p.coeffs))
    E = (a[0] + a[2] + a[4], -a[2] - 2 * a[4], a[4])
    O = (a[1] + a[3], -a[3])
    return E, O


def _family_value(fam: _Family, k: int):
    """Family value at the k-th ladder rung, evaluated cancellation-free.

    Exact Fraction arithmetic end to end: t = 1 -+ 2^-k and sigma = 1 - t^2
    are exact rationals, so bounded families report their true maximum and
    blow-up detection never rides on float cancellation noise.
    """
    step = Fraction(1, 2 ** k)
    if fam.above_one:
        t = 1 + step
        sigma = -step * (2 + step)
    else:
        t = 1 - step
        sigma = step * (2 - step)
    E, O = _sigma_coefficients(fam.poly)
    m = fam.multiplicity
    value = 0
    for j, e in enumerate(E):
        value = value + e * sigma ** (j - m)
    odd = 0
    for j, o in enumerate(O):
        odd = odd + o * sigma ** (j - m)
    value = value + t * odd
    return t, value


@dataclass(frozen=True)
class BoundWitness:
    """A plane and parameter where a pinching family exceeded the threshold."""

    kind: str
    u: np.ndarray              # first spanning vector, base + t*direction
    v: np.ndarray              # second spanning vector
    t: object
    value: object
    threshold: float

    def reverify(self, R: CurvatureTensor):
        """Recompute the curvature at the stored plane by direct evaluation."""
        space = R.space
        if self.kind == "biholomorphic":
            num = R.eval(self.u, space.apply_J(self.u), space.apply_J(self.v), self.v)
            return num / (space.inner(self.u, self.u) * space.inner(self.v, self.v))
        return sectional(R, self.u, self.v)


@dataclass(frozen=True)
class ProbeReport:
    exceeded: bool
    witness: Optional[BoundWitness]
    max_abs: float
    max_kind: Optional[str]
    evaluations: int
    threshold: float


def probe_unboundedness(R: CurvatureTensor, threshold: float = 1e6,
                        budget: tuple = (64, 40), seed: int = 0,
                        kinds=None) -> ProbeReport:
    """Push pinching families toward isotropic planes, hunting |value| > threshold.

    Returns the first threshold crossing as a re-verifiable witness, or a
    bounded-so-far report with the maximum found.  Requires an indefinite
    space: definite metrics admit no isotropic limit directions.
    """
    space = R.space
    if space.is_definite:
        raise GeometryError("unboundedness probing needs an indefinite space")
    if kinds is None:
        kinds = [k for k in PROBE_KINDS if _kind_realizable(space, k)]
    else:
        for k in kinds:
            if not _kind_realizable(space, k):
                raise GeometryError(f"probe kind {k!r} not realizable on this signature")
    probes, rungs = budget
    max_abs, max_kind = 0.0, None
    evaluations = 0
    for p_idx in range(probes):
        rng = random.Random(seed * 1_000_003 + p_idx)
        for kind in kinds:
            fam = _family_for(R, kind, _tuple_for_kind(space, rng, kind))
            for k in range(1, rungs + 1):
                t, value = _family_value(fam, k)
                evaluations += 1
                fval = float(value)
                if abs(fval) > max_abs:
                    max_abs, max_kind = abs(fval), kind
                if abs(fval) > threshold:
                    u, v = fam.spanning_pair(space, t)
                    witness = BoundWitness(kind, u, v, t, value, threshold)
                    return ProbeReport(True, witness, max_abs, max_kind,
                                       evaluations, threshold)
    return ProbeReport(False, None, max_abs, max_kind, evaluations, threshold)


# -- end-to-end theorem verification ------------------------------------------

@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    m: int
    s: int
    trials: int
    seed: int
    status: str                # 'pass' | 'fail'
    items: tuple
    payload: object = None     # failing (tensor, evidence) when status == 'fail'

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else str(value.numerator)
    return repr(value)


def _run_hypothesis(cond_id, classifier, label):
    def run(space, trials, seed, threshold, budget):
        system = impose(space, cond_id, seed=seed)
        items = [f"constraint rank = {system.rank}, solution dimension = {system.dimension}"]
        payload = None
        for i in range(trials):
            R = system.random_element(seed * 1_000_003 + 7 * i + 1)
            verdict = classifier(R)
            ok = verdict.is_constant
            value = f" value = {_fmt(verdict.value)}" if ok else ""
            items.append(f"trial {i}: {label} {'constant' if ok else 'NONCONSTANT'}{value}")
            if not ok and payload is None:
                payload = (R, verdict)
        return items, payload
    return run


_MODEL_EXPECTED = {
    # family kind prefix -> (constant-curvature value c=3, H-model value c=2)
    "holomorphic": (3.0, 2.0),
    "antiholomorphic": (3.0, 0.5),
    "biholomorphic": (0.0, 1.0),
}


def _run_unboundedness(kinds_of, classifier, label):
    def run(space, trials, seed, threshold, budget):
        kinds = kinds_of(space)
        items = []
        payload = None

        def bounded_check(name, R, expected):
            nonlocal payload
            rep = probe_unboundedness(R, threshold, budget, seed=seed, kinds=kinds)
            ok = not rep.exceeded and scalar_close(rep.max_abs, expected)
            items.append(f"model {name}: bounded, max = {rep.max_abs!r} "
                         f"(expected {expected!r}){'' if ok else ' MISMATCH'}")
            if not ok and payload is None:
                payload = (R, rep)

        c3, c2 = _MODEL_EXPECTED[kinds[0].split(":")[0]]
        bounded_check("constant-curvature c=3", model_constant_sectional(space, 3), c3)
        bounded_check("holomorphic-model c=2", model_complex_space_form(space, 2), c2)

        for i in range(trials):
            R = random_tensor(space, seed * 1_000_003 + i, bianchi=True)
            verdict = classifier(R)
            if verdict.is_constant:
                rep = probe_unboundedness(R, threshold, budget, seed=seed + i, kinds=kinds)
                ok = not rep.exceeded
                items.append(f"trial {i}: {label} constant; probe bounded = {ok}")
            else:
                rep = probe_unboundedness(R, threshold, budget, seed=seed + i, kinds=kinds)
                ok = rep.exceeded
                if ok:
                    recomputed = float(rep.witness.reverify(R.to_float()))
                    stored = float(rep.witness.value)
                    ok = abs(recomputed - stored) <= 1e-6 * max(1.0, abs(stored))
                    items.append(
                        f"trial {i}: nonconstant; witness {rep.witness.kind} "
                        f"|value| = {abs(stored)!r} at t = {_fmt(rep.witness.t)}"
                        f"{' (reverified)' if ok else ' REVERIFY-FAILED'}")
                else:
                    items.append(f"trial {i}: nonconstant but NO crossing "
                                 f"(max {rep.max_abs!r})")
            if not ok and payload is None:
                payload = (R, rep)
        return items, payload
    return run


def _run_restricted_signatures(space, trials, seed, threshold, budget):
    all_kinds = [k for k in PROBE_KINDS
                 if k.startswith("antiholomorphic") and _kind_realizable(space, k)]
    items = []
    payload = None
    for kind in all_kinds:
        sub = _run_unboundedness(lambda sp, kind=kind: [kind],
                                 constant_antiholomorphic, f"[{kind}]")
        sub_items, sub_payload = sub(space, trials, seed, threshold, budget)
        items.extend(f"{kind} :: {line}" for line in sub_items)
        if sub_payload is not None and payload is None:
            payload = sub_payload
    return items, payload


def _definite_pairs(space, rng, count):
    return [tuple_from_rng(space, rng, (1, 1), antiholomorphic=True)
            for _ in range(count)]


def _run_definite_holomorphic(space, trials, seed, threshold, budget):
    items = []
    payload = None
    c = Fraction(4)
    model = model_complex_space_form(space, c)
    rng = random.Random(seed * 1_000_003 + 3)
    x, y = tuple_from_rng(space, rng, (1, 1), antiholomorphic=True)
    p = complexified_family_expansion(model, x, y)
    want = TPolynomial.of((c, 0, -2 * c, 0, c))
    ok = p == want and all(v == 0 for v in bound_forced_identities(p))
    items.append(f"model: expansion equals c*(1-t^2)^2 with c = {_fmt(c)}: {ok}")
    if not ok:
        payload = (model, p)
    for i in range(trials):
        R = random_tensor(space, seed * 1_000_003 + i, bianchi=True)
        verdict = constant_holomorphic(R)
        rng = random.Random(seed * 1_000_003 + 1000 + i)
        violations = 0
        for (px, py) in _definite_pairs(space, rng, 20):
            cons = bound_forced_identities(complexified_family_expansion(R, px, py))
            if any(v != 0 for v in cons):
                violations += 1
        if verdict.is_constant:
            ok = violations == 0
            items.append(f"trial {i}: H constant; all pairs bound-compatible = {ok}")
        else:
            ok = violations > 0
            items.append(f"trial {i}: H nonconstant; violated constraints on "
                         f"{violations}/20 pairs")
        if not ok and payload is None:
            payload = (R, verdict)
    return items, payload


def _antiholomorphic_even_expansion(R, x, y, z):
    """Real part of the complexified K numerator along y + i t z (unit x)."""
    p = expand(R, VectorFamily.constant(x), VectorFamily.imaginary(y, z),
               VectorFamily.imaginary(y, z), VectorFamily.constant(x))
    return p.real_part()


def _run_definite_antiholomorphic(space, trials, seed, threshold, budget):
    items = []
    payload = None
    c = Fraction(4)
    model = model_complex_space_form(space, c)
    rng = random.Random(seed * 1_000_003 + 5)
    x, y, z = tuple_from_rng(space, rng, (1, 1, 1), antiholomorphic=True)
    p = _antiholomorphic_even_expansion(model, x, y, z)
    ok = (p == TPolynomial.of((c / 4, 0, -c / 4))
          and all(v == 0 for v in bound_forced_identities(p, multiplicity=1)))
    items.append(f"model: K family reduces to (c/4)*(1-t^2): {ok}")
    if not ok:
        payload = (model, p)
    for i in range(trials):
        R = random_tensor(space, seed * 1_000_003 + i, bianchi=True)
        verdict = constant_antiholomorphic(R)
        rng = random.Random(seed * 1_000_003 + 2000 + i)
        violations = 0
        for _ in range(20):
            tx, ty, tz = tuple_from_rng(space, rng, (1, 1, 1), antiholomorphic=True)
            p = _antiholomorphic_even_expansion(R, tx, ty, tz)
            if any(v != 0 for v in bound_forced_identities(p, multiplicity=1)):
                violations += 1
        if verdict.is_constant:
            ok = violations == 0
            items.append(f"trial {i}: K constant; all triples bound-compatible = {ok}")
        else:
            ok = violations > 0
            items.append(f"trial {i}: K nonconstant; violated constraints on "
                         f"{violations}/20 triples")
        if not ok and payload is None:
            payload = (R, verdict)
    return items, payload


_THEOREMS = {
    "lemma1": (
        lambda sp: _need(sp.m > 1 and sp.is_indefinite, "needs an indefinite space, m > 1"),
        _run_hypothesis("eq1", constant_holomorphic, "H")),
    "lemma2": (
        lambda sp: _need(sp.m > 1 and sp.s == 0, "needs a definite space, m > 1"),
        _run_hypothesis("lemma2", constant_holomorphic, "H")),
    "thmA": (
        lambda sp: _need(sp.m > 2 and bool(_thmA_x_signs(sp)),
                         "needs m > 2 and weakly isotropic antiholomorphic planes"),
        _run_hypothesis("thmA", constant_antiholomorphic, "antiholomorphic K")),
    "thm3": (
        lambda sp: _need(sp.m > 2 and bool(_thmA_x_signs(sp)),
                         "needs m > 2 and weakly isotropic antiholomorphic planes"),
        _run_hypothesis("thm3", constant_biholomorphic, "biholomorphic")),
    "thm6": (
        lambda sp: _need(sp.m > 2 and sp.s == 0, "needs a definite space, m > 2"),
        _run_hypothesis("thm6", constant_antiholomorphic, "antiholomorphic K")),
    "thm1": (
        lambda sp: _need(sp.m > 1 and sp.is_indefinite, "needs an indefinite space, m > 1"),
        _run_unboundedness(lambda sp: ["holomorphic"], constant_holomorphic, "H")),
    "thm2": (
        lambda sp: _need(sp.m > 2 and sp.is_indefinite, "needs an indefinite space, m > 2"),
        _run_unboundedness(
            lambda sp: [k for k in PROBE_KINDS
                        if k.startswith("antiholomorphic") and _kind_realizable(sp, k)],
            constant_antiholomorphic, "antiholomorphic K")),
    "thm4": (
        lambda sp: _need(sp.m > 2 and sp.is_indefinite
                         and _kind_realizable(sp, "biholomorphic"),
                         "needs an indefinite space, m > 2, with (+,+,-) triples"),
        _run_unboundedness(lambda sp: ["biholomorphic"], constant_biholomorphic,
                           "biholomorphic")),
    "remark1": (
        lambda sp: _need(sp.m > 2 and sp.is_indefinite, "needs an indefinite space, m > 2"),
        _run_restricted_signatures),
    "thm5": (
        lambda sp: _need(sp.m > 1 and sp.s == 0, "needs a definite space, m > 1"),
        _run_definite_holomorphic),
    "thm7": (
        lambda sp: _need(sp.m > 2 and sp.s == 0, "needs a definite space, m > 2"),
        _run_definite_antiholomorphic),
}

THEOREM_IDS = tuple(_THEOREMS)


def verify(theorem_id: str, space: PseudoHermitianSpace, trials: int = 20,
           seed: int = 0, threshold: float = 1e6, budget: tuple = (64, 40)) -> TheoremReport:
    """Run one catalog entry end to end and report pass/fail with evidence."""
    if theorem_id not in _THEOREMS:
        raise GeometryError(f"unknown theorem id {theorem_id!r}; "
                            f"known: {', '.join(THEOREM_IDS)}")
    pre, runner = _THEOREMS[theorem_id]
    err = pre(space)
    if err:
        raise HypothesisError(f"{theorem_id}: {err}")
    items, payload = runner(space, trials, seed, threshold, budget)
    status = "pass" if payload is None else "fail"
    return TheoremReport(theorem_id, space.m, space.s, trials, seed,
                         status, tuple(items), payload)
