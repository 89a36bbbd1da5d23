"""Exact Gaussian elimination over Q and F_p.

Matrices are sequences of rows; vectors are tuples.  Nothing here knows about
algebras -- it is the backbone of the w- and e-solvers and of the subspace
comparisons used by the exactness checks.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass

from .checks import EnumerationBudgetExceeded, NotAField
from .scalars import QQ, ScalarRing


def _require_field(scalars: ScalarRing):
    if not scalars.is_field:
        raise NotAField(f"linear solving needs a field, got {scalars}")


def rref(rows, scalars: ScalarRing):
    """Reduced row echelon form.  Returns ``(rows, pivot_columns)``; zero rows dropped."""
    _require_field(scalars)
    norm = scalars.norm
    m = [[norm(v) for v in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = scalars.inv(m[r][c])
        m[r] = [norm(v * inv) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [norm(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def rank(rows, scalars: ScalarRing) -> int:
    return len(rref(rows, scalars)[0])


def same_span(rows_a, rows_b, scalars: ScalarRing) -> bool:
    return rref(rows_a, scalars)[0] == rref(rows_b, scalars)[0]


@dataclass(frozen=True)
class AffineSolutionSet:
    """``particular + span(kernel_basis)``, or inconsistent when ``particular is None``."""

    scalars: ScalarRing
    nvars: int
    particular: tuple | None
    kernel_basis: tuple

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def dimension(self) -> int:
        return len(self.kernel_basis) if self.consistent else -1

    def member(self, coeffs) -> tuple:
        norm = self.scalars.norm
        v = list(self.particular)
        for c, k in zip(coeffs, self.kernel_basis):
            if c:
                v = [a + c * b for a, b in zip(v, k)]
        return tuple(norm(a) for a in v)

    def count(self):
        if not self.consistent:
            return 0
        if self.scalars.kind != "F":
            return 1 if not self.kernel_basis else float("inf")
        return self.scalars.p ** len(self.kernel_basis)

    def members(self, budget: int = 2**20) -> list[tuple]:
        """Every member, sorted lexicographically.  Finite fields only (or a point)."""
        if not self.consistent:
            return []
        if not self.kernel_basis:
            return [self.particular]
        if self.scalars.kind != "F":
            raise ValueError("an affine set of positive dimension over an infinite field")
        if self.count() > budget:
            raise EnumerationBudgetExceeded(
                f"{self.count()} candidates exceed the enumeration budget {budget}"
            )
        coeff_range = self.scalars.elements()
        out = [self.member(cs) for cs in itertools.product(coeff_range, repeat=len(self.kernel_basis))]
        return sorted(out)

    def describe(self) -> str:
        if not self.consistent:
            return "inconsistent"
        fmt = self.scalars.format
        part = "(" + ", ".join(fmt(v) for v in self.particular) + ")"
        if not self.kernel_basis:
            return part
        ker = "; ".join("(" + ", ".join(fmt(v) for v in k) + ")" for k in self.kernel_basis)
        return f"{part} + span[{ker}]"


def solve_affine(matrix, rhs, scalars: ScalarRing, nvars: int | None = None) -> AffineSolutionSet:
    """All solutions of ``matrix · v = rhs``.

    The particular solution sets every free variable to zero; the kernel basis
    is itself returned in reduced echelon form, so the description is canonical.
    """
    _require_field(scalars)
    matrix = [tuple(row) for row in matrix]
    if nvars is None:
        if not matrix:
            raise ValueError("nvars is required for an empty system")
        nvars = len(matrix[0])
    if len(rhs) != len(matrix):
        raise ValueError("right-hand side length does not match the number of equations")
    zero = scalars.zero
    augmented = [row + (b,) for row, b in zip(matrix, rhs)]
    red, pivots = rref(augmented, scalars) if augmented else ([], [])
    if nvars in pivots:
        return AffineSolutionSet(scalars, nvars, None, ())
    particular = [zero] * nvars
    for row, c in zip(red, pivots):
        particular[c] = row[nvars]
    free = [c for c in range(nvars) if c not in pivots]
    kernel = []
    for f in free:
        v = [zero] * nvars
        v[f] = scalars.one
        for row, c in zip(red, pivots):
            v[c] = scalars.norm(-row[f])
        kernel.append(v)
    kernel_rref, _ = rref(kernel, scalars) if kernel else ([], [])
    return AffineSolutionSet(scalars, nvars, tuple(particular), tuple(kernel_rref))


def kernel(matrix, scalars: ScalarRing, nvars: int) -> tuple:
    return solve_affine(matrix, [scalars.zero] * len(matrix), scalars, nvars).kernel_basis


def integer_kernel(matrix, nvars: int) -> list[tuple]:
    """Kernel over Z: the rational kernel scaled to primitive integer vectors."""
    from fractions import Fraction
    from math import gcd, lcm

    out = []
    for v in kernel(matrix, QQ, nvars):
        den = lcm(*(Fraction(x).denominator for x in v))
        ints = [int(x * den) for x in v]
        g = gcd(*ints) or 1
        out.append(tuple(x // g for x in ints))
    return out


def matmul(a, b, scalars: ScalarRing):
    norm = scalars.norm
    cols = list(zip(*b))
    return tuple(tuple(norm(sum(x * y for x, y in zip(row, col))) for col in cols) for row in a)


def matvec(a, v, scalars: ScalarRing) -> tuple:
    if scalars.kind == "F":
        p = scalars.p
        return tuple(sum(map(operator.mul, row, v)) % p for row in a)
    norm = scalars.norm
    return tuple(norm(sum(x * y for x, y in zip(row, v) if x and y)) for row in a)
