"""Worked examples: the algebras ℸ_n with the homothetisms ε_k, the zero
endomorphism's extensions θ^ς, right-linear derivations, and rings with zero
multiplication split into four blocks.

Audits compare the closed-form predictions for these examples with what the
solvers actually find, one row per parameter point.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from . import linalg
from .algebra import Algebra, Element, LinMap, make_algebra, zero_map
from .checks import BadFamilyParams, BadK, BadN, BadShape, NotAField, NotSkewDerivation
from .homext import ExtAlgebra
from .multiplier import DoubleOperator, HomotheticDatum, make_datum
from .scalars import ScalarRing
from .skewderiv import (
    Quintuple,
    check_endo_ext,
    is_skew_derivation,
    solve_deriv_ext,
    solve_endo_ext,
)

# ---------------------------------------------------------------- ℸ_n


def daleth_units(n: int) -> list[tuple[int, int]]:
    """Matrix units in basis order: e_11..e_1n, then e_2n..e_nn."""
    return [(1, i) for i in range(1, n + 1)] + [(j, n) for j in range(2, n + 1)]


def _unit_label(i: int, j: int, n: int) -> str:
    return f"e{i}{j}" if n < 10 else f"e{i}_{j}"


@functools.lru_cache(maxsize=64)
def daleth(n: int, scalars: ScalarRing) -> Algebra:
    """The span of the unit matrices e_1i and e_in inside n x n matrices."""
    if n < 3:
        raise BadN(f"ℸ_n needs n >= 3, got {n}")
    units = daleth_units(n)
    pos = {u: t for t, u in enumerate(units)}
    d = len(units)
    sc = [[[0] * d for _ in range(d)] for _ in range(d)]
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                sc[a][b][pos[i, l]] = 1
    return make_algebra(d, sc, scalars, [_unit_label(i, j, n) for i, j in units], name=f"daleth{n}")


def daleth_n(A: Algebra) -> int:
    return (A.dim + 1) // 2


def unit(A: Algebra, i: int, j: int) -> Element:
    n = daleth_n(A)
    return A.basis(daleth_units(n).index((i, j)))


def epsilon(A: Algebra, k: int) -> DoubleOperator:
    """``x ε_k = ξ_k e_1k`` and ``ε_k x = ξ^k e_kn``: keep one coordinate."""
    n = daleth_n(A)
    if not 2 <= k <= n - 1:
        raise BadK(f"ε_k needs 2 <= k <= n-1, got k={k}, n={n}")
    units = daleth_units(n)
    keep_left, keep_right = units.index((1, k)), units.index((k, n))

    def keep(t):
        z, one = A.scalars.zero, A.scalars.one
        return LinMap(A, A, tuple(tuple(one if r == c == t else z for c in range(A.dim)) for r in range(A.dim)))

    return DoubleOperator(keep(keep_left), keep(keep_right))


def daleth_datum(n: int, k: int, scalars: ScalarRing) -> HomotheticDatum:
    A = daleth(n, scalars)
    return make_datum(epsilon(A, k))


def rlin_derivation(A: Algebra, gammas) -> LinMap:
    """``δ(e_1i) = γ_1 e_1i`` and ``δ(e_jn) = γ_j e_jn``; a 0-skew derivation."""
    n = daleth_n(A)
    gammas = tuple(A.scalars.norm(g) for g in gammas)
    if len(gammas) != n:
        raise BadShape(f"need {n} values γ_1..γ_n, got {len(gammas)}")
    scale = [gammas[0] if i == 1 else gammas[i - 1] for i, _ in daleth_units(n)]
    delta = LinMap(A, A, tuple(tuple(scale[r] if r == c else 0 for c in range(A.dim)) for r in range(A.dim)))
    res = is_skew_derivation(zero_map(A), delta)
    if not res:
        raise NotSkewDerivation(res)
    return delta


def right_linear_maps(A: Algebra) -> list[LinMap]:
    """A basis of the maps with ``δ(ab) = δ(a)b`` (linear in the matrix entries)."""
    if not A.scalars.is_field:
        raise NotAField("right_linear_maps needs field scalars")
    d = A.dim
    basis = A.basis_elements()
    rows = []
    # entry (m, t) of δ sits at unknown m*d + t
    for i, a in enumerate(basis):
        for b in basis:
            ab = (a * b).coords
            for m in range(d):
                row = [0] * (d * d)
                for t, c in enumerate(ab):
                    if c:
                        row[m * d + t] += c
                for t in range(d):
                    c = (A.basis(t) * b).coords[m]
                    if c:
                        row[t * d + i] -= c
                rows.append(row)
    return [LinMap(A, A, tuple(tuple(v[m * d + t] for t in range(d)) for m in range(d)))
            for v in linalg.kernel(rows, A.scalars, d * d)]


# ---------------------------------------------------------------- θ families


FAMILIES = ("0", "1", "2", "3", "4")


def _params_for(n, k, family) -> dict:
    """Parameter names each family takes; the values default to 0."""
    if family == "0":
        return {"p": None, "q": None}
    if family == "1":
        return {"v": None}
    if family == "2":
        return {f"v_{j}": None for j in range(2, n + 1)}
    if family == "3":
        return {f"v_{n}": None, **{f"v^{j}": None for j in range(2, n)}}
    if family == "4":
        out = {}
        for j in range(2, n):
            if j != k:
                out[f"v_{j}"] = None
                out[f"v^{j}"] = None
        return out
    raise BadFamilyParams(f"unknown family {family!r}; expected one of {FAMILIES}")


def family_param_names(n: int, k: int, family: str) -> list[str]:
    return list(_params_for(n, k, family))


def theta_family(n: int, k: int, family: str, params: dict, scalars: ScalarRing) -> tuple[Element, int]:
    """The element ``w`` (and type ``ς``) of an extension of the zero map to ℸ_n(ε_k, 0).

    Family "0" is ``w = p e_11 + q e_nn`` at ``ς = 0``; families "1"-"4" are at
    ``ς = 1``.  Family 2 needs ``v_k = 0`` and family 3 (which carries an
    ``e_nn`` term) needs ``v^k = 0``; other values raise :class:`BadFamilyParams`.
    """
    if not 2 <= k <= n - 1:
        raise BadK(f"need 2 <= k <= n-1, got k={k}, n={n}")
    allowed = _params_for(n, k, family)
    unknown = set(params) - set(allowed)
    if unknown:
        raise BadFamilyParams(f"family {family} takes {sorted(allowed)}, got unexpected {sorted(unknown)}")
    A = daleth(n, scalars)
    v = {name: scalars.norm(params.get(name, 0)) for name in allowed}
    e = lambda i, j: unit(A, i, j)  # noqa: E731
    if family == "0":
        if v["p"] not in (0, 1) or v["q"] not in (0, 1):
            raise BadFamilyParams("p and q must be 0 or 1")
        return e(1, 1).scale(v["p"]) + e(n, n).scale(v["q"]), 0
    if family == "1":
        return e(1, k).scale(v["v"]), 1
    if family == "2":
        if v[f"v_{k}"]:
            raise BadFamilyParams(f"family 2 needs v_{k} = 0: condition (i) leaves v_k e_1k over")
        w = e(1, 1)
        for j in range(2, n + 1):
            w = w + e(1, j).scale(v[f"v_{j}"])
        return w, 1
    if family == "3":
        if v[f"v^{k}"]:
            raise BadFamilyParams(f"family 3 needs v^{k} = 0: condition (i) leaves v^k e_kn over")
        w = e(1, n).scale(v[f"v_{n}"]) + e(n, n)
        for j in range(2, n):
            w = w + e(j, n).scale(v[f"v^{j}"])
        return w, 1
    w = e(1, 1) + e(n, n)
    for j in range(2, n):
        if j == k:
            continue
        a, b = v[f"v_{j}"], v[f"v^{j}"]
        w = w + e(1, j).scale(a) - e(1, n).scale(a * b) + e(j, n).scale(b)
    return w, 1


def theta_family_as_printed(n: int, k: int, family: str, params: dict, scalars: ScalarRing) -> Element:
    """The printed closed form with no admissibility filter (family 3 without ``e_nn``)."""
    A = daleth(n, scalars)
    v = {name: scalars.norm(params.get(name, 0)) for name in _params_for(n, k, family)}
    e = lambda i, j: unit(A, i, j)  # noqa: E731
    if family == "2":
        w = e(1, 1)
        for j in range(2, n + 1):
            w = w + e(1, j).scale(v[f"v_{j}"])
        return w
    if family == "3":
        w = e(1, n).scale(v[f"v_{n}"])
        for j in range(2, n):
            w = w + e(j, n).scale(v[f"v^{j}"])
        return w
    return theta_family(n, k, family, params, scalars)[0]


def family_sweep(n: int, k: int, family: str, scalars: ScalarRing, admissible_only: bool = True):
    """All parameter dicts over a prime field, in lexicographic order."""
    names = family_param_names(n, k, family)
    values = (0, 1) if family == "0" else scalars.elements()
    for combo in itertools.product(values, repeat=len(names)):
        params = dict(zip(names, combo))
        if admissible_only:
            if family == "2" and params[f"v_{k}"]:
                continue
            if family == "3" and params[f"v^{k}"]:
                continue
        yield params


def daleth_cond(w: Element, k: int) -> bool:
    """The relations among the coordinates of ``w`` stated alongside the families.

    ``v_i = v_i v_1`` (i != k, n), ``v^j = v^j v^n`` (j != k), ``v_k v_1 = v^k v^n = 0``
    and ``v_n = v_1 v_n + Σ_{j>=2} v_j v^j``.
    """
    A = w.algebra
    n = daleth_n(A)
    norm = A.scalars.norm
    c = {u: w.coords[t] for t, u in enumerate(daleth_units(n))}
    low = {i: c[1, i] for i in range(1, n + 1)}
    up = {j: c[j, n] for j in range(2, n + 1)}
    ok = all(norm(low[i] - low[i] * low[1]) == 0 for i in range(1, n) if i != k)
    ok &= all(norm(up[j] - up[j] * up[n]) == 0 for j in range(2, n + 1) if j != k)
    ok &= norm(low[k] * low[1]) == 0 and norm(up[k] * up[n]) == 0
    ok &= norm(low[n] - low[1] * low[n] - sum(low[j] * up[j] for j in range(2, n + 1))) == 0
    return bool(ok)


# ---------------------------------------------------------------- predictions for δ


def predicted_e(n: int, k: int, family: str, params: dict, gammas, scalars: ScalarRing, mu=0):
    """The closed-form ``e`` and whether an extension is predicted to exist.

    Returns ``(exists, e_or_None)``.
    """
    A = daleth(n, scalars)
    norm = scalars.norm
    g = {i + 1: norm(x) for i, x in enumerate(gammas)}
    v = {name: norm(params.get(name, 0)) for name in _params_for(n, k, family)}
    e = lambda i, j: unit(A, i, j)  # noqa: E731
    z = A.zero()
    mu = norm(mu)
    if family == "0":
        p, q = v["p"], v["q"]
        if p and q:
            out = e(1, 1).scale(-(g[1] + mu)) + e(1, k).scale(g[k] - mu) - e(n, n).scale(g[n] + mu)
            for j in range(2, n):
                if j != k:
                    out = out - e(1, j).scale(mu)
            return True, out
        if mu:
            return False, None
        return True, e(1, 1).scale(-p * g[1]) + e(1, n).scale(g[k]) - e(n, n).scale(q * g[n])
    if family == "1":
        return True, e(1, k).scale(-g[k] * v["v"])
    if family == "2":
        if norm(g[k] * v[f"v_{k}"]):
            return False, None
        out = e(1, 1).scale(-g[1])
        for i in range(2, n + 1):
            if i != k:
                out = out - e(1, i).scale(g[i] * v[f"v_{i}"])
        return True, out
    if family == "3":
        if norm(v[f"v_{n}"] * g[n]) or any(norm(v[f"v^{j}"] * g[n]) for j in range(2, n) if j != k):
            return False, None
        return True, e(k, n).scale(-v[f"v^{k}"] * g[n])
    if family == "4":
        js = [j for j in range(2, n) if j != k]
        if any(norm(g[n] * v[f"v_{j}"] * v[f"v^{j}"]) for j in js):
            return False, None
        out = e(1, 1).scale(g[1]) + e(n, n).scale(g[n])
        for j in js:
            out = out + e(1, j).scale(g[j] * v[f"v_{j}"]) + e(j, n).scale(g[n] * v[f"v^{j}"])
        return True, -out
    return False, z


@dataclass
class AuditRow:
    params: dict
    gammas: tuple
    mu: object
    predicted_exists: bool
    predicted_e: Element | None
    solutions: list
    note: str = ""

    @property
    def agrees(self) -> bool:
        if not self.predicted_exists:
            return not self.solutions
        return len(self.solutions) == 1 and self.solutions[0] == self.predicted_e

    def to_dict(self, scalars: ScalarRing) -> dict:
        fmt = scalars.format
        return {
            "params": {k: fmt(v) for k, v in self.params.items()},
            "gammas": [fmt(x) for x in self.gammas],
            "mu": fmt(self.mu),
            "predicted": str(self.predicted_e) if self.predicted_exists else "none",
            "solver": [str(s) for s in self.solutions],
            "agrees": self.agrees,
        }


@dataclass
class FamilyAudit:
    n: int
    k: int
    family: str
    scalars: ScalarRing
    rows: list = field(default_factory=list)

    @property
    def disagreements(self) -> list:
        return [r for r in self.rows if not r.agrees]

    def obstruction_sharp(self) -> bool:
        """Solver empty exactly when the prediction says no extension exists."""
        return all(bool(r.solutions) == r.predicted_exists for r in self.rows)

    def unique_when_nonempty(self) -> bool:
        return all(len(r.solutions) <= 1 for r in self.rows)


def audit_family(n: int, k: int, family: str, scalars: ScalarRing, mus=None) -> FamilyAudit:
    """Sweep every admissible parameter point and every ``γ`` vector over a prime field."""
    if scalars.kind != "F":
        raise NotAField("family audits sweep a prime field")
    datum = daleth_datum(n, k, scalars)
    A = datum.algebra
    alpha = zero_map(A)
    audit = FamilyAudit(n, k, family, scalars)
    if mus is None:
        mus = list(scalars.elements()) if family == "0" else [0]
    for params in family_sweep(n, k, family, scalars):
        w, vs = theta_family(n, k, family, params, scalars)
        w = A.element(w.coords)
        for gammas in itertools.product(scalars.elements(), repeat=n):
            delta = rlin_derivation(A, gammas)
            for mu in mus:
                sols = solve_deriv_ext(datum, alpha, w, vs, delta, mu)
                exists, e = predicted_e(n, k, family, params, gammas, scalars, mu)
                e = A.element(e.coords) if e is not None else None
                audit.rows.append(AuditRow(params, tuple(gammas), mu, exists, e, list(sols)))
    return audit


def theta0_mu_rule(audit: FamilyAudit) -> dict:
    """For each ``(p, q, γ)``, the set of ``μ`` admitting an extension, found by the solver."""
    out = {}
    for r in audit.rows:
        key = (r.params["p"], r.params["q"], r.gammas)
        out.setdefault(key, [])
        if r.solutions:
            out[key].append(r.mu)
    return out


@dataclass
class EndoAudit:
    """``solve_endo_ext`` at ``α = 0`` on ℸ_n(ε_k, 0) compared with the families."""

    n: int
    k: int
    varsigma: int
    solutions: list
    family_members: dict  # family -> list of w
    printed_failures: dict  # family -> list of params whose printed w fails

    def covered(self) -> set:
        return {w.coords for ws in self.family_members.values() for w in ws}

    def uncovered(self) -> list:
        cov = self.covered()
        return [w for w in self.solutions if w.coords not in cov]

    def families_subset(self) -> bool:
        sol = {w.coords for w in self.solutions}
        return self.covered() <= sol


def audit_endo(n: int, k: int, varsigma: int, scalars: ScalarRing) -> EndoAudit:
    datum = daleth_datum(n, k, scalars)
    A = datum.algebra
    sols = solve_endo_ext(datum, zero_map(A), varsigma)
    fams = ("0",) if varsigma == 0 else ("1", "2", "3", "4")
    members, printed_bad = {}, {}
    for fam in fams:
        members[fam] = []
        printed_bad[fam] = []
        for params in family_sweep(n, k, fam, scalars, admissible_only=False):
            printed = A.element(theta_family_as_printed(n, k, fam, params, scalars).coords)
            if not check_endo_ext(datum, zero_map(A), printed, varsigma):
                printed_bad[fam].append(params)
            try:
                w, _ = theta_family(n, k, fam, params, scalars)
            except BadFamilyParams:
                continue
            members[fam].append(A.element(w.coords))
    return EndoAudit(n, k, varsigma, list(sols), members, printed_bad)


# ---------------------------------------------------------------- zero multiplication


@dataclass(frozen=True)
class ZeroMultSpec:
    """``R = A_1 ⊕ A_2 ⊕ A_3 ⊕ A_4`` with zero multiplication, blocks in order."""

    dims: tuple
    scalars: ScalarRing

    def __post_init__(self):
        if len(self.dims) != 4 or any(d < 0 for d in self.dims) or sum(self.dims) < 1:
            raise BadShape("need four nonnegative block dimensions with a positive sum")

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def block(self, i: int) -> range:
        start = sum(self.dims[: i - 1])
        return range(start, start + self.dims[i - 1])


def zero_mult_algebra(spec: ZeroMultSpec) -> Algebra:
    d = spec.dim
    labels = [f"a{i}_{t + 1}" for i in range(1, 5) for t in range(spec.dims[i - 1])]
    zero = [[[0] * d for _ in range(d)] for _ in range(d)]
    return make_algebra(d, zero, spec.scalars, labels, name="zeromult" + "".join(map(str, spec.dims)))


def _block_projector(A: Algebra, spec: ZeroMultSpec, blocks) -> LinMap:
    keep = {t for i in blocks for t in spec.block(i)}
    return LinMap(A, A, tuple(tuple(1 if r == c and r in keep else 0 for c in range(A.dim)) for r in range(A.dim)))


def zero_mult_example(spec: ZeroMultSpec, A: Algebra | None = None) -> tuple[Algebra, HomotheticDatum]:
    """``σa = a_1 + a_3`` and ``aσ = a_2 + a_3``, ``s = 0``."""
    A = A or zero_mult_algebra(spec)
    sigma = DoubleOperator(_block_projector(A, spec, (2, 3)), _block_projector(A, spec, (1, 3)))
    return A, make_datum(sigma)


def _assemble(A: Algebra, spec: ZeroMultSpec, pieces) -> LinMap:
    """Sum of ``ω_j M π_i`` over ``(i, j, M)``; ``M`` is a ``d_j x d_i`` matrix."""
    m = [[0] * A.dim for _ in range(A.dim)]
    for i, j, block in pieces:
        rows, cols = spec.block(j), spec.block(i)
        for r, rr in enumerate(rows):
            for c, cc in enumerate(cols):
                m[rr][cc] += block[r][c]
    return LinMap(A, A, tuple(tuple(row) for row in m))


def _ident(d):
    return [[1 if r == c else 0 for c in range(d)] for r in range(d)]


def _zero_block(spec, i, j):
    return [[0] * spec.dims[i - 1] for _ in range(spec.dims[j - 1])]


def zero_mult_endo(spec: ZeroMultSpec, A: Algebra, varsigma: int, blocks: dict) -> LinMap:
    """``α = ς Σ ω_i α_ii π_i + (1 - ς) Σ_j ω_j α_4j π_4``.

    ``blocks[(i, j)]`` is ``α_ij : A_i → A_j`` as a ``d_j x d_i`` matrix; missing ones are 0.
    """
    get = lambda i, j: blocks.get((i, j), _zero_block(spec, i, j))  # noqa: E731
    pieces = []
    for i in range(1, 5):
        pieces.append((i, i, [[varsigma * x for x in row] for row in get(i, i)]))
    for j in range(1, 5):
        pieces.append((4, j, [[(1 - varsigma) * x for x in row] for row in get(4, j)]))
    return _assemble(A, spec, pieces)


def zero_mult_w(A: Algebra, spec: ZeroMultSpec, varsigma: int, w1, w2) -> Element:
    """``w = ς(w_1 + w_2)`` from coordinates of ``w_1 ∈ A_1`` and ``w_2 ∈ A_2``."""
    coords = [0] * A.dim
    for t, x in zip(spec.block(1), w1):
        coords[t] += varsigma * x
    for t, x in zip(spec.block(2), w2):
        coords[t] += varsigma * x
    return A.element(coords)


def zero_mult_deriv(spec: ZeroMultSpec, A: Algebra, varsigma: int, mu, dblocks: dict, ablocks: dict) -> LinMap:
    """``δ = ω_2 d_22 π_2 + ω_4 d_44 π_4 + ς(ω_1 d_11 π_1 + ω_3 d_33 π_3)
    + (1-ς)(ω_3 d_23 π_2 + ω_1 d_41 π_4) + μ(ω_1π_1 + ω_3π_3 - ω_2 α_42 π_4 - ω_3 α_43 π_4)``."""
    get = lambda b, i, j: b.get((i, j), _zero_block(spec, i, j))  # noqa: E731
    sc = lambda c, m: [[c * x for x in row] for row in m]  # noqa: E731
    pieces = [
        (2, 2, get(dblocks, 2, 2)),
        (4, 4, get(dblocks, 4, 4)),
        (1, 1, sc(varsigma, get(dblocks, 1, 1))),
        (3, 3, sc(varsigma, get(dblocks, 3, 3))),
        (2, 3, sc(1 - varsigma, get(dblocks, 2, 3))),
        (4, 1, sc(1 - varsigma, get(dblocks, 4, 1))),
        (1, 1, sc(mu, _ident(spec.dims[0]))),
        (3, 3, sc(mu, _ident(spec.dims[2]))),
        (4, 2, sc(-mu, get(ablocks, 4, 2))),
        (4, 3, sc(-mu, get(ablocks, 4, 3))),
    ]
    return _assemble(A, spec, pieces)


def zero_mult_e(A: Algebra, spec: ZeroMultSpec, varsigma: int, e1, e2, e3) -> Element:
    """``e = ς e_1 + e_2 + (1 - ς) e_3``."""
    coords = [0] * A.dim
    for blk, vals, c in ((1, e1, varsigma), (2, e2, 1), (3, e3, 1 - varsigma)):
        for t, x in zip(spec.block(blk), vals):
            coords[t] += c * x
    return A.element(coords)


# ---------------------------------------------------------------- pipelines


def daleth_family1_quintuple(n: int = 3, k: int = 2, scalars: ScalarRing | None = None,
                             v=1, gammas=None) -> Quintuple:
    """``α = 0``, ``w = v e_1k``, ``δ`` right-linear, ``e = -γ_k v e_1k``, type 1."""
    from .scalars import GF

    scalars = scalars or GF(2)
    gammas = gammas if gammas is not None else (1,) * n
    datum = daleth_datum(n, k, scalars)
    A = datum.algebra
    w = unit(A, 1, k).scale(v)
    e = unit(A, 1, k).scale(-scalars.norm(gammas[k - 1]) * scalars.norm(v))
    return Quintuple(datum, zero_map(A), w, rlin_derivation(A, gammas), e, 1, 0)


def zero_mult_type1_quintuple(dims=(1, 1, 1, 1), scalars: ScalarRing | None = None) -> Quintuple:
    """``α = id`` and ``w = w_1 + w_2 ≠ 0`` (so ``α(w) ≠ 0``), with a block-diagonal ``δ``."""
    from .scalars import QQ

    scalars = scalars or QQ
    spec = ZeroMultSpec(tuple(dims), scalars)
    A, datum = zero_mult_example(spec)
    blocks = {(i, i): _ident(spec.dims[i - 1]) for i in range(1, 5)}
    alpha = zero_mult_endo(spec, A, 1, blocks)
    w = zero_mult_w(A, spec, 1, [1] * spec.dims[0], [1] * spec.dims[1])
    dblocks = {(i, i): [[c * (i + 1) for c in row] for row in _ident(spec.dims[i - 1])] for i in range(1, 5)}
    delta = zero_mult_deriv(spec, A, 1, 0, dblocks, blocks)
    e = zero_mult_e(A, spec, 1, [1] * spec.dims[0], [2] * spec.dims[1], [0] * spec.dims[2])
    return Quintuple(datum, alpha, w, delta, e, 1, 0)


def ext_of(q: Quintuple) -> ExtAlgebra:
    return ExtAlgebra(q.datum)




def zero_mult_type0_quintuple(dims=(1, 1, 1, 1), scalars: ScalarRing | None = None, mu=1) -> Quintuple:
    """``ς = 0``: ``α = Σ_j ω_j α_4j π_4`` with every ``α_4j`` an identity-like block, ``w = 0``."""
    from .scalars import QQ

    scalars = scalars or QQ
    spec = ZeroMultSpec(tuple(dims), scalars)
    A, datum = zero_mult_example(spec)
    ablocks = {(4, j): _ones(spec, 4, j) for j in range(1, 5)}
    alpha = zero_mult_endo(spec, A, 0, ablocks)
    w = zero_mult_w(A, spec, 0, [0] * spec.dims[0], [0] * spec.dims[1])
    dblocks = {(2, 2): _ident(spec.dims[1]), (4, 4): [[2 * c for c in row] for row in _ident(spec.dims[3])],
               (2, 3): _ones(spec, 2, 3), (4, 1): _ones(spec, 4, 1)}
    delta = zero_mult_deriv(spec, A, 0, mu, dblocks, ablocks)
    e = zero_mult_e(A, spec, 0, [0] * spec.dims[0], [1] * spec.dims[1], [1] * spec.dims[2])
    return Quintuple(datum, alpha, w, delta, e, 0, mu)


def _ones(spec: ZeroMultSpec, i: int, j: int) -> list:
    """``A_i → A_j`` sending every basis vector to the sum of the basis of ``A_j``."""
    return [[1] * spec.dims[i - 1] for _ in range(spec.dims[j - 1])]
