"""Finite-dimensional associative algebras given by structure constants.

``sc[i][j][k]`` is the coefficient of basis vector ``k`` in ``b_i * b_j``.
No unit is assumed and the zero multiplication is allowed.  Linear maps are
stored as matrices with entry ``(k, i)`` the coefficient of output basis
vector ``k`` in the image of input basis vector ``i`` (so columns are images).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .checks import (
    AlgebraMismatch,
    AssociativityViolation,
    BadShape,
    CheckResult,
    DomainMismatch,
    failed,
    passed,
)
from .scalars import ScalarRing

DIMENSION_CAP = 64


@dataclass(frozen=True)
class Algebra:
    name: str
    scalars: ScalarRing
    labels: tuple
    sc: tuple
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        d = len(self.labels)
        if d < 1:
            raise BadShape("an algebra needs at least one basis vector")
        if len(set(self.labels)) != d:
            raise BadShape("basis labels must be distinct")
        sc = self.sc
        if len(sc) != d or any(len(row) != d or any(len(v) != d for v in row) for row in sc):
            raise BadShape(f"structure constants must have shape {d}x{d}x{d}")
        norm = self.scalars.norm
        sc = tuple(tuple(tuple(norm(c) for c in v) for v in row) for row in sc)
        object.__setattr__(self, "sc", sc)
        table = {}
        for i in range(d):
            for j in range(d):
                nz = tuple((k, c) for k, c in enumerate(sc[i][j]) if c)
                if nz:
                    table[i, j] = nz
        object.__setattr__(self, "_table", table)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def __repr__(self):
        return f"Algebra({self.name!r}, dim={self.dim}, over {self.scalars})"

    def element(self, coords) -> Element:
        coords = tuple(self.scalars.norm(c) for c in coords)
        if len(coords) != self.dim:
            raise BadShape(f"{self.name} has dimension {self.dim}, got {len(coords)} coordinates")
        return Element(self, coords)

    def zero(self) -> Element:
        return Element(self, (self.scalars.zero,) * self.dim)

    def basis(self, i: int) -> Element:
        z, one = self.scalars.zero, self.scalars.one
        return Element(self, tuple(one if k == i else z for k in range(self.dim)))

    def basis_elements(self) -> list[Element]:
        return [self.basis(i) for i in range(self.dim)]

    def by_label(self, label: str) -> Element:
        return self.basis(self.labels.index(label))

    def product_coords(self, x, y) -> tuple:
        acc = [0] * self.dim
        table = self._table
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                entry = table.get((i, j))
                if entry:
                    c0 = xi * yj
                    for k, c in entry:
                        acc[k] += c0 * c
        if self.scalars.kind == "F":
            p = self.scalars.p
            return tuple(a % p for a in acc)
        norm = self.scalars.norm
        return tuple(norm(a) for a in acc)

    def is_zero_multiplication(self) -> bool:
        return not self._table


def _same(a: Algebra, b: Algebra) -> bool:
    return a is b or a == b


@dataclass(frozen=True)
class Element:
    algebra: Algebra
    coords: tuple

    def _check(self, other: Element):
        if not isinstance(other, Element) or not _same(self.algebra, other.algebra):
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._check(other)
        norm = self.algebra.scalars.norm
        return Element(self.algebra, tuple(norm(a + b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        norm = self.algebra.scalars.norm
        return Element(self.algebra, tuple(norm(a - b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        norm = self.algebra.scalars.norm
        return Element(self.algebra, tuple(norm(-a) for a in self.coords))

    def scale(self, c) -> Element:
        norm = self.algebra.scalars.norm
        c = norm(c)
        return Element(self.algebra, tuple(norm(c * a) for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return format_coords(self.coords, self.algebra.labels, self.algebra.scalars)


def format_coords(coords, labels, scalars: ScalarRing) -> str:
    terms = []
    for c, lab in zip(coords, labels):
        if not c:
            continue
        s = scalars.format(c)
        terms.append(lab if s == "1" else f"-{lab}" if s == "-1" else f"{s}*{lab}")
    if not terms:
        return "0"
    return " + ".join(terms).replace("+ -", "- ")


def make_algebra(dim: int, sc, scalars: ScalarRing, labels=None, name: str = "A",
                 dim_cap: int = DIMENSION_CAP) -> Algebra:
    """Build an algebra and verify associativity on all ``dim**3`` basis triples.

    Raises :class:`AssociativityViolation` carrying the offending triple and
    both evaluations.
    """
    if dim > dim_cap:
        raise BadShape(f"dimension {dim} exceeds the cap {dim_cap}")
    if labels is None:
        labels = tuple(f"b{i + 1}" for i in range(dim))
    labels = tuple(labels)
    if len(labels) != dim:
        raise BadShape(f"expected {dim} basis labels, got {len(labels)}")
    try:
        sc = tuple(tuple(tuple(v) for v in row) for row in sc)
    except TypeError as exc:
        raise BadShape(f"structure constants are not a {dim}x{dim}x{dim} table") from exc
    alg = Algebra(name, scalars, labels, sc)
    result = check_associativity(alg)
    if not result:
        raise AssociativityViolation(result)
    return alg


def check_associativity(alg: Algebra) -> CheckResult:
    basis = alg.basis_elements()
    products = [[mul(x, y) for y in basis] for x in basis]
    for i, bi in enumerate(basis):
        for j in range(alg.dim):
            bij = products[i][j]
            for k, bk in enumerate(basis):
                lhs = mul(bij, bk)
                rhs = mul(bi, products[j][k])
                if lhs != rhs:
                    return failed(
                        "associativity",
                        triple=(alg.labels[i], alg.labels[j], alg.labels[k]),
                        indices=(i + 1, j + 1, k + 1),
                        lhs=lhs,
                        rhs=rhs,
                    )
    return passed("associativity", f"{alg.dim ** 3} basis triples")


def mul(x: Element, y: Element) -> Element:
    x._check(y)
    return Element(x.algebra, x.algebra.product_coords(x.coords, y.coords))


@dataclass(frozen=True)
class LinMap:
    domain: Algebra
    codomain: Algebra
    matrix: tuple

    def __post_init__(self):
        m = tuple(tuple(self.codomain.scalars.norm(v) for v in row) for row in self.matrix)
        if len(m) != self.codomain.dim or any(len(row) != self.domain.dim for row in m):
            raise BadShape(
                f"matrix must be {self.codomain.dim}x{self.domain.dim} for a map "
                f"{self.domain.name} -> {self.codomain.name}"
            )
        object.__setattr__(self, "matrix", m)

    def __call__(self, x: Element) -> Element:
        return apply(self, x)

    def column(self, i: int) -> tuple:
        return tuple(row[i] for row in self.matrix)

    def __add__(self, other):
        return lin_add(self, other)

    def __sub__(self, other):
        return lin_add(self, lin_scale(other, -1))

    def __neg__(self):
        return lin_scale(self, -1)

    def __rmul__(self, c):
        return lin_scale(self, c)

    def __matmul__(self, other):
        return compose(self, other)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.matrix)


def apply(f: LinMap, x: Element) -> Element:
    if not _same(f.domain, x.algebra):
        raise DomainMismatch(f"map on {f.domain.name} applied to an element of {x.algebra.name}")
    return Element(f.codomain, linalg.matvec(f.matrix, x.coords, f.codomain.scalars))


def compose(f: LinMap, g: LinMap) -> LinMap:
    """``f ∘ g`` (``g`` is applied first)."""
    if not _same(g.codomain, f.domain):
        raise DomainMismatch("cannot compose: codomain of g is not the domain of f")
    return LinMap(g.domain, f.codomain, linalg.matmul(f.matrix, g.matrix, f.codomain.scalars))


def lin_add(f: LinMap, g: LinMap) -> LinMap:
    if not (_same(f.domain, g.domain) and _same(f.codomain, g.codomain)):
        raise DomainMismatch("cannot add maps between different algebras")
    return LinMap(f.domain, f.codomain,
                  tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(f.matrix, g.matrix)))


def lin_scale(f: LinMap, c) -> LinMap:
    return LinMap(f.domain, f.codomain, tuple(tuple(c * a for a in row) for row in f.matrix))


def map_from_images(domain: Algebra, codomain: Algebra, images) -> LinMap:
    """The linear map sending basis vector ``i`` of ``domain`` to ``images[i]``."""
    cols = [im.coords for im in images]
    if len(cols) != domain.dim:
        raise BadShape("need one image per basis vector")
    return LinMap(domain, codomain, tuple(zip(*cols)) if cols else ())


def map_from_function(domain: Algebra, fn, codomain: Algebra | None = None) -> LinMap:
    return map_from_images(domain, codomain or domain, [fn(b) for b in domain.basis_elements()])


def identity_map(alg: Algebra) -> LinMap:
    return map_from_images(alg, alg, alg.basis_elements())


def zero_map(domain: Algebra, codomain: Algebra | None = None) -> LinMap:
    codomain = codomain or domain
    z = codomain.scalars.zero
    return LinMap(domain, codomain, tuple((z,) * domain.dim for _ in range(codomain.dim)))


def left_mult_matrix(a: Element) -> tuple:
    """Matrix of ``x ↦ a·x``."""
    return map_from_function(a.algebra, lambda x: mul(a, x)).matrix


def right_mult_matrix(a: Element) -> tuple:
    """Matrix of ``x ↦ x·a``."""
    return map_from_function(a.algebra, lambda x: mul(x, a)).matrix


def _annihilator_rows(alg: Algebra, left: bool, right: bool):
    # a ↦ a·b_j is linear in a; stack its matrices for every j
    rows = []
    for b in alg.basis_elements():
        if left:
            rows.extend(right_mult_matrix(b))
        if right:
            rows.extend(left_mult_matrix(b))
    return rows


def _kernel(alg: Algebra, rows) -> list[tuple]:
    if alg.scalars.is_field:
        return list(linalg.kernel(rows, alg.scalars, alg.dim))
    return linalg.integer_kernel(rows, alg.dim)


def annihilator(alg: Algebra) -> list[tuple]:
    """Basis of ``{a : ab = ba = 0 for all b}`` (primitive integer vectors over Z)."""
    return _kernel(alg, _annihilator_rows(alg, True, True))


def left_annihilator(alg: Algebra) -> list[tuple]:
    """Basis of ``{a : aA = 0}``."""
    return _kernel(alg, _annihilator_rows(alg, True, False))


def right_annihilator(alg: Algebra) -> list[tuple]:
    """Basis of ``{a : Aa = 0}``."""
    return _kernel(alg, _annihilator_rows(alg, False, True))


def is_nondegenerate(alg: Algebra) -> bool:
    return not left_annihilator(alg) and not right_annihilator(alg)
