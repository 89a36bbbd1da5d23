"""Double operators, bimultiplications, double homothetisms and homothetic data.

A double operator ``σ`` is a pair of linear maps: ``left`` sends ``a`` to
``aσ`` and ``right`` sends ``a`` to ``σa``.  All axioms are bilinear, so they
are checked on pairs of basis vectors only.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .algebra import (
    Algebra,
    Element,
    LinMap,
    _same,
    compose,
    identity_map,
    left_mult_matrix,
    map_from_function,
    mul,
    right_mult_matrix,
    zero_map,
)
from .checks import (
    AlgebraMismatch,
    CheckResult,
    CommutationFails,
    EnumerationBudgetExceeded,
    NotAField,
    NotHomothetism,
    QuadraticFails,
    failed,
    passed,
)

BIMULTIPLICATION_IDENTITIES = {
    1: "σ(ab) = (σa)b",
    2: "(ab)σ = a(bσ)",
    3: "a(σb) = (aσ)b",
    4: "σ(aσ) = (σa)σ",
}


@dataclass(frozen=True)
class DoubleOperator:
    left: LinMap
    right: LinMap

    def __post_init__(self):
        maps = (self.left, self.right)
        alg = self.left.domain
        if not all(_same(m.domain, alg) and _same(m.codomain, alg) for m in maps):
            raise AlgebraMismatch("both actions must be endomorphisms of the same algebra")

    @property
    def algebra(self) -> Algebra:
        return self.left.domain

    def a_sigma(self, a: Element) -> Element:
        return self.left(a)

    def sigma_a(self, a: Element) -> Element:
        return self.right(a)

    def __add__(self, other: DoubleOperator) -> DoubleOperator:
        return DoubleOperator(self.left + other.left, self.right + other.right)

    def __sub__(self, other: DoubleOperator) -> DoubleOperator:
        return DoubleOperator(self.left - other.left, self.right - other.right)

    def __rmul__(self, c) -> DoubleOperator:
        return DoubleOperator(c * self.left, c * self.right)

    def __mul__(self, other: DoubleOperator) -> DoubleOperator:
        return mult_product(self, other)


def inner(a: Element) -> DoubleOperator:
    """The inner homothetism ``ā``: ``bā = ba`` and ``āb = ab``."""
    alg = a.algebra
    return DoubleOperator(LinMap(alg, alg, right_mult_matrix(a)), LinMap(alg, alg, left_mult_matrix(a)))


def identity_operator(alg: Algebra) -> DoubleOperator:
    i = identity_map(alg)
    return DoubleOperator(i, i)


def zero_operator(alg: Algebra) -> DoubleOperator:
    z = zero_map(alg)
    return DoubleOperator(z, z)


def mult_product(s1: DoubleOperator, s2: DoubleOperator) -> DoubleOperator:
    """Product in the multiplier algebra: ``(s2.left ∘ s1.left, s1.right ∘ s2.right)``."""
    if not _same(s1.algebra, s2.algebra):
        raise AlgebraMismatch("double operators on different algebras")
    return DoubleOperator(compose(s2.left, s1.left), compose(s1.right, s2.right))


def operator_laws(basis, mul_fn, a_sigma, sigma_a, labels=None, homothetism=True,
                  name=None) -> CheckResult:
    """Check the bimultiplication identities (and optionally self-permutability).

    Works for any basis of any algebra given as callables, which is how the Ore
    extension's ``x̄`` and the extended ``σ̃`` are checked on monomials.
    """
    labels = labels or [str(b) for b in basis]
    name = name or ("double homothetism" if homothetism else "bimultiplication")
    sa = [sigma_a(b) for b in basis]
    as_ = [a_sigma(b) for b in basis]
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            ab = mul_fn(a, b)
            checks = (
                (1, sigma_a(ab), mul_fn(sa[i], b)),
                (2, a_sigma(ab), mul_fn(a, as_[j])),
                (3, mul_fn(a, sa[j]), mul_fn(as_[i], b)),
            )
            for idx, lhs, rhs in checks:
                if lhs != rhs:
                    return failed(name, identity=BIMULTIPLICATION_IDENTITIES[idx],
                                  index=idx, a=labels[i], b=labels[j], lhs=lhs, rhs=rhs)
    if homothetism:
        for i, a in enumerate(basis):
            lhs, rhs = sigma_a(as_[i]), a_sigma(sa[i])
            if lhs != rhs:
                return failed(name, identity=BIMULTIPLICATION_IDENTITIES[4], index=4,
                              a=labels[i], lhs=lhs, rhs=rhs)
    return passed(name, f"{len(basis)} basis elements")


def is_bimultiplication(sigma: DoubleOperator) -> CheckResult:
    alg = sigma.algebra
    return operator_laws(alg.basis_elements(), mul, sigma.a_sigma, sigma.sigma_a,
                         alg.labels, homothetism=False)


def is_double_homothetism(sigma: DoubleOperator) -> CheckResult:
    alg = sigma.algebra
    return operator_laws(alg.basis_elements(), mul, sigma.a_sigma, sigma.sigma_a,
                         alg.labels, homothetism=True)


def datum_checks(sigma: DoubleOperator, s: Element) -> list[CheckResult]:
    """The three datum conditions, each as its own result."""
    alg = sigma.algebra
    if not _same(s.algebra, alg):
        raise AlgebraMismatch("s must live in the algebra of σ")
    out = [is_double_homothetism(sigma)]
    lhs, rhs = sigma.sigma_a(s), sigma.a_sigma(s)
    out.append(passed("σs = sσ") if lhs == rhs else failed("σs = sσ", lhs=lhs, rhs=rhs))
    square = mult_product(sigma, sigma)
    target = sigma + inner(s)
    res = passed("σ² = σ + s̄")
    for b, lab in zip(alg.basis_elements(), alg.labels):
        if square.left(b) != target.left(b):
            res = failed("σ² = σ + s̄", side="a·σ²", a=lab, lhs=square.left(b), rhs=target.left(b))
            break
        if square.right(b) != target.right(b):
            res = failed("σ² = σ + s̄", side="σ²·a", a=lab, lhs=square.right(b), rhs=target.right(b))
            break
    out.append(res)
    return out


@dataclass(frozen=True)
class HomotheticDatum:
    """A verified homothetic datum ``(σ, s)``; construction raises on failure."""

    sigma: DoubleOperator
    s: Element

    def __post_init__(self):
        hom, comm, quad = datum_checks(self.sigma, self.s)
        if not hom:
            raise NotHomothetism(hom)
        if not comm:
            raise CommutationFails(comm)
        if not quad:
            raise QuadraticFails(quad)

    @property
    def algebra(self) -> Algebra:
        return self.sigma.algebra


def make_datum(sigma: DoubleOperator, s: Element | None = None) -> HomotheticDatum:
    return HomotheticDatum(sigma, s if s is not None else sigma.algebra.zero())


def _operator_from_vector(alg: Algebra, v) -> DoubleOperator:
    d = alg.dim
    left = tuple(tuple(v[k * d + i] for i in range(d)) for k in range(d))
    right = tuple(tuple(v[d * d + k * d + i] for i in range(d)) for k in range(d))
    return DoubleOperator(LinMap(alg, alg, left), LinMap(alg, alg, right))


def bimultiplication_space(alg: Algebra) -> list[DoubleOperator]:
    """A basis of the space of all bimultiplications (the multiplier algebra).

    The three identities are linear in the pair of matrices, so this is a
    kernel computation over the 2d² unknown matrix entries.
    """
    if not alg.scalars.is_field:
        raise NotAField("bimultiplication_space needs field scalars")
    d = alg.dim
    n = 2 * d * d
    basis = alg.basis_elements()
    prods = [[mul(a, b) for b in basis] for a in basis]
    rows = []

    def unit(kind, k, i):
        # index of entry (k, i) of the left (0) or right (1) matrix
        return kind * d * d + k * d + i

    for i in range(d):
        for j in range(d):
            ab = prods[i][j].coords
            # σ(b_i b_j) - (σ b_i) b_j = 0, coordinate m
            for m in range(d):
                row = [0] * n
                for t, c in enumerate(ab):
                    if c:
                        row[unit(1, m, t)] += c
                for k in range(d):
                    c = prods[k][j].coords[m]
                    if c:
                        row[unit(1, k, i)] -= c
                rows.append(row)
            # (b_i b_j)σ - b_i (b_j σ) = 0
            for m in range(d):
                row = [0] * n
                for t, c in enumerate(ab):
                    if c:
                        row[unit(0, m, t)] += c
                for k in range(d):
                    c = prods[i][k].coords[m]
                    if c:
                        row[unit(0, k, j)] -= c
                rows.append(row)
            # b_i (σ b_j) - (b_i σ) b_j = 0
            for m in range(d):
                row = [0] * n
                for k in range(d):
                    c = prods[i][k].coords[m]
                    if c:
                        row[unit(1, k, j)] += c
                    c = prods[k][j].coords[m]
                    if c:
                        row[unit(0, k, i)] -= c
                rows.append(row)
    return [_operator_from_vector(alg, v) for v in linalg.kernel(rows, alg.scalars, n)]


def idempotent_multipliers(alg: Algebra, budget: int = 2**20) -> list[DoubleOperator]:
    """All idempotent bimultiplications over a prime field, by exhaustive search
    through the multiplier algebra (at most ``budget`` candidates)."""
    if alg.scalars.kind != "F":
        raise NotAField("idempotent enumeration needs a prime field")
    space = bimultiplication_space(alg)
    p = alg.scalars.p
    if p ** len(space) > budget:
        raise EnumerationBudgetExceeded(f"{p ** len(space)} multipliers exceed budget {budget}")
    out = []
    zero = zero_operator(alg)
    for coeffs in itertools.product(range(p), repeat=len(space)):
        sigma = zero
        for c, b in zip(coeffs, space):
            if c:
                sigma = sigma + c * b
        if mult_product(sigma, sigma) == sigma:
            out.append(sigma)
    return out


def is_inner(sigma: DoubleOperator) -> Element | None:
    """An element ``a`` with ``inner(a) == σ``, or ``None``."""
    alg = sigma.algebra
    d = alg.dim
    # unknown a: both actions are linear in a
    rows, rhs = [], []
    for b in alg.basis_elements():
        lm, rm = left_mult_matrix(b), right_mult_matrix(b)
        # b·a = left_mult(b) a must equal σ.left(b); a·b = right_mult(b) a must equal σ.right(b)
        rows.extend(lm)
        rhs.extend(sigma.left(b).coords)
        rows.extend(rm)
        rhs.extend(sigma.right(b).coords)
    sol = linalg.solve_affine(rows, rhs, alg.scalars, d)
    if not sol.consistent:
        return None
    return alg.element(sol.particular)


def double_operator_from_functions(alg: Algebra, a_sigma, sigma_a) -> DoubleOperator:
    return DoubleOperator(map_from_function(alg, a_sigma), map_from_function(alg, sigma_a))
