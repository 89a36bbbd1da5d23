"""Nonunital Ore extensions ``R[x; α, δ]``.

Elements are dense coefficient lists ``a_0 + a_1 x + ... + a_n x^n``.  The
ring has no unit, so ``x`` itself is not an element; it acts through
:func:`x_left` and :func:`x_right`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .algebra import Algebra, Element, LinMap, _same, compose, identity_map, mul, zero_map
from .checks import BadShape, IndexOutOfRange, NotSkewDerivation, RingMismatch
from .skewderiv import is_skew_derivation

DEFAULT_DEGREE_CAP = 32


@dataclass(eq=False)
class OreRing:
    alpha: LinMap
    delta: LinMap
    degree_cap: int = DEFAULT_DEGREE_CAP
    check: bool = True
    _gamma: dict = field(default_factory=dict, init=False, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, init=False, repr=False)

    def __post_init__(self):
        if self.check:
            res = is_skew_derivation(self.alpha, self.delta)
            if not res:
                raise NotSkewDerivation(res)

    @property
    def algebra(self) -> Algebra:
        return self.alpha.domain

    def poly(self, coeffs) -> OrePoly:
        alg = self.algebra
        out = []
        for c in coeffs:
            out.append(c if isinstance(c, Element) else alg.element(c))
        return OrePoly(self, tuple(out))

    def zero(self) -> OrePoly:
        return OrePoly(self, ())

    def monomial(self, a: Element, n: int = 0) -> OrePoly:
        return OrePoly(self, (self.algebra.zero(),) * n + (a,))


def gamma(ring: OreRing, m: int, i: int) -> LinMap:
    """Sum of all compositions of ``i`` copies of ``α`` and ``m - i`` copies of ``δ``.

    Filled by ``Γ^m_i = α∘Γ^{m-1}_{i-1} + δ∘Γ^{m-1}_i``, memoized per ring.
    """
    if m < 0 or i < 0 or i > m:
        raise IndexOutOfRange(f"Γ^{m}_{i} needs 0 <= i <= m")
    cache = ring._gamma
    hit = cache.get((m, i))
    if hit is not None:
        return hit
    with ring._lock:
        for mm in range(m + 1):
            for ii in range(mm + 1):
                if (mm, ii) in cache:
                    continue
                if mm == 0:
                    val = identity_map(ring.algebra)
                else:
                    val = zero_map(ring.algebra)
                    if ii >= 1:
                        val = val + compose(ring.alpha, cache[mm - 1, ii - 1])
                    if ii <= mm - 1:
                        val = val + compose(ring.delta, cache[mm - 1, ii])
                cache[mm, ii] = val
    return cache[m, i]


@dataclass(frozen=True)
class OrePoly:
    ring: OreRing
    coeffs: tuple

    def __post_init__(self):
        alg = self.ring.algebra
        cs = list(self.coeffs)
        for c in cs:
            if not _same(c.algebra, alg):
                raise RingMismatch("coefficient from a different algebra")
        while cs and cs[-1].is_zero():
            cs.pop()
        if len(cs) - 1 > self.ring.degree_cap:
            raise BadShape(f"degree {len(cs) - 1} exceeds the cap {self.ring.degree_cap}")
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, n: int) -> Element:
        return self.coeffs[n] if n < len(self.coeffs) else self.ring.algebra.zero()

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other):
        if not isinstance(other, OrePoly) or self.ring is not other.ring:
            raise RingMismatch("polynomials from different Ore extensions")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.ring, tuple(self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return OrePoly(self.ring, tuple(self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self):
        return OrePoly(self.ring, tuple(-c for c in self.coeffs))

    def scale(self, c) -> OrePoly:
        return OrePoly(self.ring, tuple(a.scale(c) for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, OrePoly):
            return ore_mul(self, other)
        return self.scale(other)

    def __eq__(self, other):
        return isinstance(other, OrePoly) and self.ring is other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        terms = []
        for n, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            s = str(a)
            if " " in s and n:
                s = f"({s})"
            terms.append(s if n == 0 else f"{s}·x" if n == 1 else f"{s}·x^{n}")
        return " + ".join(terms) or "0"


def ore_mul(p: OrePoly, q: OrePoly) -> OrePoly:
    """``(a x^m)(b x^n) = Σ_i a Γ^m_i(b) x^{n+i}``, extended bilinearly."""
    p._check(q)
    ring = p.ring
    if p.is_zero() or q.is_zero():
        return ring.zero()
    alg = ring.algebra
    out = [alg.zero() for _ in range(len(p.coeffs) + len(q.coeffs) - 1)]
    for m, a in enumerate(p.coeffs):
        if a.is_zero():
            continue
        for n, b in enumerate(q.coeffs):
            if b.is_zero():
                continue
            for i in range(m + 1):
                term = mul(a, gamma(ring, m, i)(b))
                out[n + i] = out[n + i] + term
    return OrePoly(ring, tuple(out))


def x_right(p: OrePoly) -> OrePoly:
    """``p ↦ p·x``: shift every coefficient up one degree."""
    if p.is_zero():
        return p
    return OrePoly(p.ring, (p.ring.algebra.zero(),) + p.coeffs)


def x_left(p: OrePoly) -> OrePoly:
    """``p ↦ x·p``, with ``x a x^n = α(a) x^{n+1} + δ(a) x^n``."""
    ring = p.ring
    if p.is_zero():
        return p
    alg = ring.algebra
    out = [alg.zero() for _ in range(len(p.coeffs) + 1)]
    for n, a in enumerate(p.coeffs):
        out[n + 1] = out[n + 1] + ring.alpha(a)
        out[n] = out[n] + ring.delta(a)
    return OrePoly(ring, tuple(out))


def monomial_basis(ring: OreRing, degree: int) -> list[OrePoly]:
    """``b_j x^n`` for every basis vector and ``n <= degree``."""
    return [ring.monomial(b, n) for n in range(degree + 1) for b in ring.algebra.basis_elements()]


def x_operator_laws(ring: OreRing, degree: int = 6):
    """Check that ``(x_left, x_right)`` is a double homothetism on monomials of degree ``<= degree``.

    The products stay within degree ``2*degree + 2``, which must fit under the ring's cap.
    """
    from .multiplier import operator_laws

    basis = monomial_basis(ring, degree)
    labels = [f"{ring.algebra.labels[k % ring.algebra.dim]}·x^{k // ring.algebra.dim}"
              for k in range(len(basis))]
    return operator_laws(basis, ore_mul, x_right, x_left, labels, homothetism=True, name="x̄ double homothetism")
