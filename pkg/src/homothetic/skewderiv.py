"""Skew derivations and their extension to homothetic extensions.

An endomorphism ``α`` of ``R`` extends to ``R(σ, s)`` as
``α_S(a + ξ@sigma) = α(a) + ξw + ξς@sigma`` exactly when ``(α, w, ς)``
satisfies three conditions (i)-(iii); an ``α``-derivation ``δ`` then extends as
``δ_S(a + ξ@sigma) = δ(a) + ξe + ξμ@sigma`` exactly when ``(e, μ)`` satisfies
(a)-(c).  Both condition sets are checked here, and solved for ``w`` and ``e``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import (
    Algebra,
    Element,
    LinMap,
    _same,
    identity_map,
    zero_map,
    left_mult_matrix,
    map_from_function,
    mul,
    right_mult_matrix,
)
from .checks import (
    AlgebraMismatch,
    BadVarsigma,
    CheckResult,
    ConditionsFail,
    EndoPreconditionFailed,
    MuConstraintViolated,
    NonIdempotentVarsigma,
    NotAField,
    NotBimultiplication,
    NotRestrictable,
    NotSkewDerivation,
    all_of,
    failed,
    passed,
)
from .homext import ExtAlgebra, ExtElement, as_algebra
from .multiplier import DoubleOperator, HomotheticDatum, is_bimultiplication

DEFAULT_ENUM_CAP = 2**20


def is_endomorphism(f: LinMap) -> CheckResult:
    alg = f.domain
    basis = alg.basis_elements()
    images = [f(b) for b in basis]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            lhs, rhs = f(mul(a, b)), mul(images[i], images[j])
            if lhs != rhs:
                return failed("endomorphism", identity="α(ab) = α(a)α(b)",
                              a=alg.labels[i], b=alg.labels[j], lhs=lhs, rhs=rhs)
    return passed("endomorphism")


def leibniz_check(alpha: LinMap, delta: LinMap, name: str = "skew-Leibniz") -> CheckResult:
    """``δ(ab) = δ(a)b + α(a)δ(b)`` on basis pairs."""
    alg = delta.domain
    basis = alg.basis_elements()
    da = [delta(b) for b in basis]
    aa = [alpha(b) for b in basis]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            lhs = delta(mul(a, b))
            rhs = mul(da[i], b) + mul(aa[i], da[j])
            if lhs != rhs:
                return failed(name, identity="δ(ab) = δ(a)b + α(a)δ(b)",
                              a=alg.labels[i], b=alg.labels[j], lhs=lhs, rhs=rhs)
    return passed(name)


def is_skew_derivation(alpha: LinMap, delta: LinMap) -> CheckResult:
    if not (_same(alpha.domain, delta.domain) and _same(alpha.domain, alpha.codomain)
            and _same(delta.domain, delta.codomain)):
        raise AlgebraMismatch("α and δ must be endomorphisms of the same algebra")
    return all_of("skew derivation", [is_endomorphism(alpha), leibniz_check(alpha, delta)])


@dataclass(frozen=True)
class SkewDerivation:
    alpha: LinMap
    delta: LinMap

    def __post_init__(self):
        res = is_skew_derivation(self.alpha, self.delta)
        if not res:
            raise NotSkewDerivation(res)

    @property
    def algebra(self) -> Algebra:
        return self.alpha.domain


def _varsigma(alg: Algebra, varsigma):
    v = alg.scalars.norm(varsigma)
    if v not in (0, 1):
        raise BadVarsigma(f"ς must be 0 or 1, got {varsigma}")
    return v


def _per_basis(name, alg, lhs_fn, rhs_fn) -> CheckResult:
    for b, lab in zip(alg.basis_elements(), alg.labels):
        lhs, rhs = lhs_fn(b), rhs_fn(b)
        if lhs != rhs:
            return failed(name, a=lab, lhs=lhs, rhs=rhs)
    return passed(name)


def endo_ext_checks(datum: HomotheticDatum, alpha: LinMap, w: Element, varsigma) -> list[CheckResult]:
    alg = datum.algebra
    vs = _varsigma(alg, varsigma)
    sig, s = datum.sigma, datum.s
    i_lhs = alpha(s) - s.scale(vs)
    i_rhs = mul(w, w) + sig.a_sigma(w).scale(vs) + sig.sigma_a(w).scale(vs) - w
    cond_i = (passed("(i) α(s) - ςs = w² + ςwσ + ςσw - w") if i_lhs == i_rhs
              else failed("(i) α(s) - ςs = w² + ςwσ + ςσw - w", lhs=i_lhs, rhs=i_rhs))
    cond_ii = _per_basis(
        "(ii) α(aσ) = α(a)(ςσ + w)", alg,
        lambda a: alpha(sig.a_sigma(a)),
        lambda a: sig.a_sigma(alpha(a)).scale(vs) + mul(alpha(a), w),
    )
    cond_iii = _per_basis(
        "(iii) α(σa) = (ςσ + w)α(a)", alg,
        lambda a: alpha(sig.sigma_a(a)),
        lambda a: sig.sigma_a(alpha(a)).scale(vs) + mul(w, alpha(a)),
    )
    return [cond_i, cond_ii, cond_iii]


def check_endo_ext(datum: HomotheticDatum, alpha: LinMap, w: Element, varsigma) -> CheckResult:
    return all_of("endomorphism extension", endo_ext_checks(datum, alpha, w, varsigma))


def deriv_ext_checks(datum, alpha, w, varsigma, delta, e, mu) -> list[CheckResult]:
    """Conditions (a)-(c), preceded by the skew-Leibniz identity for ``δ``.

    Raises when the preconditions do not hold: ``ς`` not in {0, 1}, ``μ ≠ 0`` at
    ``ς = 1``, or ``(α, w, ς)`` failing the endomorphism-extension conditions.
    """
    alg = datum.algebra
    vs = _varsigma(alg, varsigma)
    mu = alg.scalars.norm(mu)
    if vs == 1 and mu:
        raise MuConstraintViolated(f"μ must vanish for ς = 1, got {alg.scalars.format(mu)}")
    endo = check_endo_ext(datum, alpha, w, vs)
    if not endo:
        raise EndoPreconditionFailed(endo)
    sig, s = datum.sigma, datum.s
    a_lhs = delta(s) - s.scale(mu)
    a_rhs = sig.a_sigma(e) + sig.sigma_a(e).scale(vs) + mul(w, e) + sig.a_sigma(w).scale(mu) - e
    name_a = "(a) δ(s) - μs = eσ + ςσe + we + μwσ - e"
    cond_a = passed(name_a) if a_lhs == a_rhs else failed(name_a, lhs=a_lhs, rhs=a_rhs)
    cond_b = _per_basis(
        "(b) δ(aσ) = δ(a)σ + α(a)(e + μσ)", alg,
        lambda a: delta(sig.a_sigma(a)),
        lambda a: sig.a_sigma(delta(a)) + mul(alpha(a), e) + sig.a_sigma(alpha(a)).scale(mu),
    )
    cond_c = _per_basis(
        "(c) δ(σa) = (w + ςσ)δ(a) + (e + μσ)a", alg,
        lambda a: delta(sig.sigma_a(a)),
        lambda a: mul(w, delta(a)) + sig.sigma_a(delta(a)).scale(vs) + mul(e, a) + sig.sigma_a(a).scale(mu),
    )
    return [leibniz_check(alpha, delta), cond_a, cond_b, cond_c]


def check_deriv_ext(datum, alpha, w, varsigma, delta, e, mu=0) -> CheckResult:
    return all_of("derivation extension", deriv_ext_checks(datum, alpha, w, varsigma, delta, e, mu))


@dataclass(frozen=True)
class Quintuple:
    """A ``(σ, s)``-compatible skew derivation ``(α, w; δ, e, μ(ς))``, verified."""

    datum: HomotheticDatum
    alpha: LinMap
    w: Element
    delta: LinMap
    e: Element
    varsigma: object
    mu: object = 0

    def __post_init__(self):
        alg = self.datum.algebra
        object.__setattr__(self, "varsigma", _varsigma(alg, self.varsigma))
        object.__setattr__(self, "mu", alg.scalars.norm(self.mu))
        endo = check_endo_ext(self.datum, self.alpha, self.w, self.varsigma)
        if not endo:
            raise ConditionsFail(endo)
        res = check_deriv_ext(self.datum, self.alpha, self.w, self.varsigma, self.delta, self.e, self.mu)
        if not res:
            raise ConditionsFail(res)

    @property
    def algebra(self) -> Algebra:
        return self.datum.algebra


def _ext_matrix(S: ExtAlgebra, f: LinMap, tail: Element, tail_xi) -> LinMap:
    A = as_algebra(S)
    zero = S.base.scalars.zero
    rows = [tuple(row) + (tail.coords[k],) for k, row in enumerate(f.matrix)]
    rows.append((zero,) * S.base.dim + (tail_xi,))
    return LinMap(A, A, tuple(rows))


def extend_endo(S: ExtAlgebra, alpha: LinMap, w: Element, varsigma, check: bool = True) -> LinMap:
    """``α_S(a + ξ@sigma) = α(a) + ξw + ξς@sigma`` as a map on ``as_algebra(S)``."""
    vs = _varsigma(S.base, varsigma)
    alpha_s = _ext_matrix(S, alpha, w, vs)
    if check:
        res = check_endo_ext(S.datum, alpha, w, vs)
        if not res:
            raise ConditionsFail(res)
        res = is_endomorphism(alpha_s)
        if not res:
            raise ConditionsFail(res)
    return alpha_s


def extend_deriv(S: ExtAlgebra, q: Quintuple, check: bool = True) -> LinMap:
    """``δ_S(a + ξ@sigma) = δ(a) + ξe + ξμ@sigma`` as a map on ``as_algebra(S)``."""
    delta_s = _ext_matrix(S, q.delta, q.e, q.mu)
    if check:
        alpha_s = extend_endo(S, q.alpha, q.w, q.varsigma)
        res = leibniz_check(alpha_s, delta_s)
        if not res:
            raise ConditionsFail(res)
    return delta_s


@dataclass(frozen=True)
class Indeterminate:
    """Returned by the solvers over Q when the solution set is not a single point."""

    affine: linalg.AffineSolutionSet
    reason: str

    def describe(self) -> str:
        return f"indeterminate ({self.reason}): {self.affine.describe()}"


def _linear_system(alg: Algebra, blocks):
    rows, rhs = [], []
    for matrix, target in blocks:
        rows.extend(matrix)
        rhs.extend(target.coords)
    return rows, rhs


def _sub_identity(m, c=1):
    return tuple(tuple(v - (c if i == k else 0) for i, v in enumerate(row)) for k, row in enumerate(m))


def _madd(*ms):
    return tuple(tuple(sum(vals) for vals in zip(*rows)) for rows in zip(*ms))


def _mscale(m, c):
    return tuple(tuple(c * v for v in row) for row in m)


def endo_linear_conditions(datum: HomotheticDatum, alpha: LinMap, varsigma) -> linalg.AffineSolutionSet:
    """The affine set of ``w`` cut out by the conditions (ii)-(iii), which are linear in ``w``."""
    alg = datum.algebra
    if not alg.scalars.is_field:
        raise NotAField(f"solvers need field scalars, got {alg.scalars}")
    vs = _varsigma(alg, varsigma)
    sig = datum.sigma
    blocks = []
    for a in alg.basis_elements():
        x = alpha(a)
        blocks.append((left_mult_matrix(x), alpha(sig.a_sigma(a)) - sig.a_sigma(x).scale(vs)))
        blocks.append((right_mult_matrix(x), alpha(sig.sigma_a(a)) - sig.sigma_a(x).scale(vs)))
    rows, rhs = _linear_system(alg, blocks)
    return linalg.solve_affine(rows, rhs, alg.scalars, alg.dim)


def solve_endo_ext(datum: HomotheticDatum, alpha: LinMap, varsigma, enum_cap: int = DEFAULT_ENUM_CAP):
    """Every ``w`` extending ``α`` at type ``ς``, in lexicographic coordinate order.

    Over Q the quadratic condition (i) is only tested when the linear conditions
    pin ``w`` down to one point; otherwise an :class:`Indeterminate` is returned.
    """
    alg = datum.algebra
    endo = is_endomorphism(alpha)
    if not endo:
        raise EndoPreconditionFailed(endo)
    affine = endo_linear_conditions(datum, alpha, varsigma)
    if not affine.consistent:
        return []
    if alg.scalars.kind == "Q" and affine.dimension > 0:
        return Indeterminate(affine, "quadratic condition (i) over an affine set of positive dimension")
    out = []
    for v in affine.members(enum_cap):
        w = alg.element(v)
        if endo_ext_checks(datum, alpha, w, varsigma)[0]:
            out.append(w)
    return out


def deriv_linear_conditions(datum, alpha, w, varsigma, delta, mu) -> linalg.AffineSolutionSet:
    alg = datum.algebra
    if not alg.scalars.is_field:
        raise NotAField(f"solvers need field scalars, got {alg.scalars}")
    vs = _varsigma(alg, varsigma)
    mu = alg.scalars.norm(mu)
    sig, s = datum.sigma, datum.s
    blocks = [(
        _sub_identity(_madd(sig.left.matrix, _mscale(sig.right.matrix, vs), left_mult_matrix(w))),
        delta(s) - s.scale(mu) - sig.a_sigma(w).scale(mu),
    )]
    for a in alg.basis_elements():
        blocks.append((left_mult_matrix(alpha(a)),
                       delta(sig.a_sigma(a)) - sig.a_sigma(delta(a)) - sig.a_sigma(alpha(a)).scale(mu)))
        blocks.append((right_mult_matrix(a),
                       delta(sig.sigma_a(a)) - mul(w, delta(a)) - sig.sigma_a(delta(a)).scale(vs)
                       - sig.sigma_a(a).scale(mu)))
    rows, rhs = _linear_system(alg, blocks)
    return linalg.solve_affine(rows, rhs, alg.scalars, alg.dim)


def solve_deriv_ext(datum, alpha, w, varsigma, delta, mu=0, enum_cap: int = DEFAULT_ENUM_CAP):
    """Every ``e`` extending ``δ`` (conditions (a)-(c) are linear in ``e``)."""
    alg = datum.algebra
    vs = _varsigma(alg, varsigma)
    if vs == 1 and alg.scalars.norm(mu):
        raise MuConstraintViolated("μ must vanish for ς = 1")
    endo = check_endo_ext(datum, alpha, w, vs)
    if not endo:
        raise EndoPreconditionFailed(endo)
    leib = is_skew_derivation(alpha, delta)
    if not leib:
        raise NotSkewDerivation(leib)
    affine = deriv_linear_conditions(datum, alpha, w, vs, delta, mu)
    if not affine.consistent:
        return []
    if alg.scalars.kind == "Q" and affine.dimension > 0:
        return Indeterminate(affine, "kernel of positive dimension")
    return [alg.element(v) for v in affine.members(enum_cap)]


@dataclass(frozen=True)
class InnerExtDerivation:
    """The inner ``α_S``-derivation at ``c = b + ζ@sigma`` and what it induces on ``R``."""

    delta_s: LinMap
    delta_r: LinMap
    e: Element
    mu: object
    w: Element
    varsigma: object


def _read_sigma_column(S: ExtAlgebra, f: LinMap):
    col = f.column(S.sigma_index)
    return S.base.element(col[:-1]), col[-1]


def _restriction(S: ExtAlgebra, f: LinMap, name: str) -> LinMap:
    R = S.base
    d = R.dim
    for i in range(d):
        if f.matrix[d][i]:
            raise NotRestrictable(failed(f"{name} preserves R", a=R.labels[i], image=f.column(i)))
    return LinMap(R, R, tuple(row[:d] for row in f.matrix[:d]))


def inner_ext_derivation(S: ExtAlgebra, alpha_s: LinMap, c: ExtElement) -> InnerExtDerivation:
    A = as_algebra(S)
    cc = c.to_algebra()
    delta_s = map_from_function(A, lambda u: mul(alpha_s(u), cc) - mul(cc, u))
    w, vs = _read_sigma_column(S, alpha_s)
    sig, s = S.datum.sigma, S.datum.s
    b, zeta = c.a, c.xi
    norm = S.base.scalars.norm
    e = (sig.sigma_a(b).scale(vs) - sig.a_sigma(b) + mul(w, b)
         + (sig.a_sigma(w) + s.scale(vs - 1)).scale(zeta))
    return InnerExtDerivation(delta_s, _restriction(S, delta_s, "δ_S"), e, norm(zeta * (vs - 1)), w, vs)


def homothetic_derivation(alpha: LinMap, sigma: DoubleOperator) -> LinMap:
    """``a ↦ α(a)σ - σa``; a skew derivation for any bimultiplication ``σ``."""
    bim = is_bimultiplication(sigma)
    if not bim:
        raise NotBimultiplication(bim)
    delta = map_from_function(alpha.domain, lambda a: sigma.a_sigma(alpha(a)) - sigma.sigma_a(a))
    res = is_skew_derivation(alpha, delta)
    if not res:
        raise NotSkewDerivation(res)
    return delta


def restrict_and_extract(S: ExtAlgebra, alpha_s: LinMap, delta_s: LinMap) -> Quintuple:
    """Recover ``(α, w; δ, e, μ(ς))`` from maps on the extension that preserve ``R``."""
    alpha = _restriction(S, alpha_s, "α_S")
    delta = _restriction(S, delta_s, "δ_S")
    w, vs = _read_sigma_column(S, alpha_s)
    if vs not in (0, 1):
        raise NonIdempotentVarsigma(failed("ς idempotent", varsigma=S.base.scalars.format(vs)))
    e, mu = _read_sigma_column(S, delta_s)
    return Quintuple(S.datum, alpha, w, delta, e, vs, mu)


def identity_quintuple(datum: HomotheticDatum) -> Quintuple:
    alg = datum.algebra
    return Quintuple(datum, identity_map(alg), alg.zero(), zero_map(alg), alg.zero(), 1, 0)
