"""Homothetic extensions ``R(σ, s) = R ⊕ F·@sigma``.

The product is ``(a, ξ)(b, ζ) = (ab + ζ·aσ + ξ·σb + ξζ·s, ξζ)``.  The extra
generator is stored as the last basis slot of :func:`as_algebra` and printed
as ``@sigma``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .algebra import Algebra, Element, _same, check_associativity, mul
from .checks import AlgebraMismatch, AssociativityViolation, CheckResult, failed, passed
from .multiplier import DoubleOperator, HomotheticDatum
from .scalars import QQ

SIGMA_LABEL = "@sigma"


def extension_table(sigma: DoubleOperator, s: Element) -> tuple:
    """Structure constants of ``R ⊕ F·@sigma`` built from any double operator and element."""
    alg = sigma.algebra
    d = alg.dim
    zero, one = alg.scalars.zero, alg.scalars.one
    basis = alg.basis_elements()

    def ext(x: Element, xi=zero):
        return tuple(x.coords) + (xi,)

    table = []
    for i in range(d + 1):
        row = []
        for j in range(d + 1):
            if i < d and j < d:
                row.append(ext(mul(basis[i], basis[j])))
            elif i < d:
                row.append(ext(sigma.a_sigma(basis[i])))
            elif j < d:
                row.append(ext(sigma.sigma_a(basis[j])))
            else:
                row.append(ext(s, one))
        table.append(tuple(row))
    return tuple(table)


def extension_algebra(sigma: DoubleOperator, s: Element, name: str | None = None,
                      check: bool = True) -> Algebra:
    """The (d+1)-dimensional algebra; raises :class:`AssociativityViolation` when
    ``(σ, s)`` is not a homothetic datum and ``check`` is set."""
    alg = sigma.algebra
    if not _same(s.algebra, alg):
        raise AlgebraMismatch("s must live in the algebra of σ")
    ext = Algebra(name or f"{alg.name}(σ,s)", alg.scalars, alg.labels + (SIGMA_LABEL,),
                  extension_table(sigma, s))
    if check:
        result = check_associativity(ext)
        if not result:
            raise AssociativityViolation(result)
    return ext


@dataclass(frozen=True)
class ExtAlgebra:
    datum: HomotheticDatum
    name: str | None = None
    _algebra: Algebra = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        alg = extension_algebra(self.datum.sigma, self.datum.s,
                                self.name or f"{self.datum.algebra.name}(σ,s)")
        object.__setattr__(self, "_algebra", alg)

    @property
    def base(self) -> Algebra:
        return self.datum.algebra

    @property
    def sigma_index(self) -> int:
        return self.base.dim

    def element(self, a: Element, xi=0) -> ExtElement:
        return ExtElement(self, a, self.base.scalars.norm(xi))

    def sigma(self) -> ExtElement:
        return self.element(self.base.zero(), 1)

    def from_coords(self, v: Element) -> ExtElement:
        if not _same(v.algebra, self._algebra):
            raise AlgebraMismatch("not an element of this extension")
        return ExtElement(self, self.base.element(v.coords[:-1]), v.coords[-1])


@dataclass(frozen=True)
class ExtElement:
    """``a + ξ·@sigma``."""

    ext: ExtAlgebra
    a: Element
    xi: object

    def __add__(self, other):
        _same_ext(self, other)
        return ExtElement(self.ext, self.a + other.a, self.ext.base.scalars.norm(self.xi + other.xi))

    def __sub__(self, other):
        _same_ext(self, other)
        return ExtElement(self.ext, self.a - other.a, self.ext.base.scalars.norm(self.xi - other.xi))

    def __neg__(self):
        return ExtElement(self.ext, -self.a, self.ext.base.scalars.norm(-self.xi))

    def __mul__(self, other):
        if isinstance(other, ExtElement):
            return ext_mul(self.ext, self, other)
        norm = self.ext.base.scalars.norm
        return ExtElement(self.ext, self.a.scale(other), norm(self.xi * other))

    def __rmul__(self, c):
        return self * c

    def coords(self) -> tuple:
        return tuple(self.a.coords) + (self.xi,)

    def to_algebra(self) -> Element:
        return Element(self.ext._algebra, self.coords())

    def __str__(self):
        parts = [] if self.a.is_zero() else [str(self.a)]
        if self.xi:
            s = self.ext.base.scalars.format(self.xi)
            parts.append(SIGMA_LABEL if s == "1" else f"{s}*{SIGMA_LABEL}")
        return " + ".join(parts) or "0"


def _same_ext(u: ExtElement, v: ExtElement):
    if not isinstance(v, ExtElement) or not (u.ext is v.ext or u.ext == v.ext):
        raise AlgebraMismatch("elements of different extensions")


def ext_mul(S: ExtAlgebra, u: ExtElement, v: ExtElement) -> ExtElement:
    _same_ext(u, v)
    if not (u.ext is S or u.ext == S):
        raise AlgebraMismatch("elements do not belong to this extension")
    sigma, s = S.datum.sigma, S.datum.s
    norm = S.base.scalars.norm
    a, xi, b, zeta = u.a, u.xi, v.a, v.xi
    out = mul(a, b)
    if zeta:
        out = out + sigma.a_sigma(a).scale(zeta)
    if xi:
        out = out + sigma.sigma_a(b).scale(xi)
    if xi and zeta:
        out = out + s.scale(xi * zeta)
    return ExtElement(S, out, norm(xi * zeta))


def iota(S: ExtAlgebra, a: Element) -> ExtElement:
    if not _same(a.algebra, S.base):
        raise AlgebraMismatch("element is not in the base algebra")
    return ExtElement(S, a, S.base.scalars.zero)


def pi(S: ExtAlgebra, u: ExtElement):
    return u.xi


def as_algebra(S: ExtAlgebra) -> Algebra:
    return S._algebra


def check_exactness(S: ExtAlgebra) -> list[CheckResult]:
    """Exactness of ``0 → R → R(σ,s) → F → 0`` and that ``ι(R)`` is an ideal."""
    R, A = S.base, as_algebra(S)
    scalars = R.scalars
    d = R.dim
    basis_R = R.basis_elements()
    basis_S = [S.from_coords(b) for b in A.basis_elements()]
    out = []

    images = [iota(S, b).coords() for b in basis_R]
    if scalars.is_field:
        inj = linalg.rank(images, scalars) == d
    else:
        inj = linalg.rank(images, QQ) == d
    out.append(passed("ι injective") if inj else failed("ι injective"))

    res = passed("ι multiplicative")
    for a in basis_R:
        for b in basis_R:
            if iota(S, a) * iota(S, b) != iota(S, mul(a, b)):
                res = failed("ι multiplicative", a=a, b=b)
    out.append(res)

    res = passed("π multiplicative and surjective")
    if pi(S, S.sigma()) != scalars.one:
        res = failed("π multiplicative and surjective", reason="π(@sigma) != 1")
    for u in basis_S:
        for v in basis_S:
            if pi(S, u * v) != scalars.norm(pi(S, u) * pi(S, v)):
                res = failed("π multiplicative and surjective", u=u, v=v)
    out.append(res)

    res = passed("π ∘ ι = 0")
    for a in basis_R:
        if pi(S, iota(S, a)):
            res = failed("π ∘ ι = 0", a=a)
    out.append(res)

    # ker π as the kernel of the 1 x (d+1) matrix, compared with im ι by echelon form
    pi_row = [[pi(S, u) for u in basis_S]]
    field_scalars = scalars if scalars.is_field else QQ
    ker = linalg.kernel(pi_row, field_scalars, d + 1)
    same = linalg.same_span(ker, images, field_scalars)
    out.append(passed("ker π = im ι") if same else failed("ker π = im ι"))

    res = passed("ι(R) is an ideal")
    for a in basis_R:
        for u in basis_S:
            for prod in (iota(S, a) * u, u * iota(S, a)):
                if prod.xi:
                    res = failed("ι(R) is an ideal", a=a, u=u, product=prod)
    out.append(res)
    return out
