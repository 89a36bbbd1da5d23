import itertools
import random

import pytest

from homothetic import linalg
from homothetic.algebra import LinMap, mul, zero_map
from homothetic.catalog import (
    ZeroMultSpec,
    audit_endo,
    audit_family,
    daleth,
    daleth_cond,
    daleth_datum,
    daleth_units,
    family_sweep,
    predicted_e,
    rlin_derivation,
    right_linear_maps,
    theta0_mu_rule,
    theta_family,
    theta_family_as_printed,
    unit,
    zero_mult_example,
)
from homothetic.checks import BadFamilyParams, BadK, BadN
from homothetic.scalars import GF, QQ
from homothetic.skewderiv import check_endo_ext, solve_deriv_ext, solve_endo_ext


def test_daleth_shape_and_errors():
    assert daleth_units(3) == [(1, 1), (1, 2), (1, 3), (2, 3), (3, 3)]
    assert daleth(5, QQ).labels[:2] == ("e11", "e12")
    with pytest.raises(BadN):
        daleth(2, QQ)
    with pytest.raises(BadK):
        daleth_datum(4, 4, QQ)


@pytest.mark.parametrize("n", [3, 4])
def test_right_linear_maps(n):
    # by hand: δ(e_1i) = γ e_1i, while each δ(e_jn) may be any element of the last column,
    # so the space has dimension n(n-1) + 1; the diagonal family is a proper subspace
    A = daleth(n, GF(3))
    units = daleth_units(n)
    space = right_linear_maps(A)
    assert len(space) == n * (n - 1) + 1
    hand = []
    first_row = [t for t, (i, _) in enumerate(units) if i == 1]
    hand.append([[int(r == c and c in first_row) for c in range(A.dim)] for r in range(A.dim)])
    col_n = [t for t, (_, j) in enumerate(units) if j == n]
    for c in [t for t, (i, _) in enumerate(units) if i != 1]:
        for r in col_n:
            hand.append([[int(rr == r and cc == c) for cc in range(A.dim)] for rr in range(A.dim)])
    for m in hand:
        f = LinMap(A, A, tuple(tuple(row) for row in m))
        for a, b in itertools.product(A.basis_elements(), repeat=2):
            assert f(mul(a, b)) == mul(f(a), b)
    flat = lambda rows: [x for row in rows for x in row]  # noqa: E731
    assert linalg.same_span([flat(f.matrix) for f in space], [flat(m) for m in hand], A.scalars)
    fam = [rlin_derivation(A, [int(i == j) for i in range(n)]) for j in range(n)]
    assert linalg.rank([flat(f.matrix) for f in fam], A.scalars) == n
    assert linalg.rank([flat(f.matrix) for f in space + fam], A.scalars) == len(space)


def test_family_members_extend_the_zero_map():
    for p in (2, 3):
        F = GF(p)
        for n in (3, 4):
            D = daleth_datum(n, 2, F)
            A = D.algebra
            for fam in ("1", "2", "3", "4"):
                for params in family_sweep(n, 2, fam, F):
                    w, vs = theta_family(n, 2, fam, params, F)
                    assert vs == 1
                    assert check_endo_ext(D, zero_map(A), w, 1), (fam, params)
                    assert daleth_cond(w, 2)


def test_inadmissible_family_parameters():
    F = GF(2)
    with pytest.raises(BadFamilyParams):
        theta_family(3, 2, "2", {"v_2": 1}, F)
    with pytest.raises(BadFamilyParams):
        theta_family(4, 2, "3", {"v^2": 1}, F)
    # the literal family-3 element is not a solution once v^j ≠ 0 for j ≠ k
    D = daleth_datum(4, 2, F)
    w = theta_family_as_printed(4, 2, "3", {"v_4": 0, "v^2": 0, "v^3": 1}, F)
    assert not check_endo_ext(D, zero_map(D.algebra), w, 1)


def test_endo_audit_type1():
    audit = audit_endo(3, 2, 1, GF(2))
    assert len(audit.solutions) == 13
    assert audit.families_subset()
    assert len(audit.uncovered()) == 6
    assert all(daleth_cond(w, 2) for w in audit.solutions)


def test_endo_audit_type0():
    audit = audit_endo(3, 2, 0, GF(2))
    pq = {(p, q) for p in (0, 1) for q in (0, 1)}
    A = daleth(3, GF(2))
    assert {(unit(A, 1, 1).scale(p) + unit(A, 3, 3).scale(q)).coords for p, q in pq} <= {
        w.coords for w in audit.solutions}
    assert len(audit.uncovered()) == 9


@pytest.mark.parametrize("fam", ["1", "2"])
@pytest.mark.parametrize("F", [GF(2), GF(3)])
def test_families_1_2_agree_with_solver(fam, F):
    audit = audit_family(3, 2, fam, F)
    assert not audit.disagreements
    assert audit.unique_when_nonempty()


def test_family3_solver_counterexample():
    # the stated obstruction predicts nothing for v_3 γ_3 ≠ 0, yet an extension exists
    F = GF(3)
    D = daleth_datum(3, 2, F)
    A = D.algebra
    w, _ = theta_family(3, 2, "3", {"v_3": 1, "v^2": 0}, F)
    gammas = (1, 0, 1)
    exists, _ = predicted_e(3, 2, "3", {"v_3": 1, "v^2": 0}, gammas, F)
    assert not exists
    sols = solve_deriv_ext(D, zero_map(A), w, 1, rlin_derivation(A, gammas))
    assert sols == [unit(A, 1, 3).scale(-1) + unit(A, 3, 3).scale(-1)]


def test_family4_solver_counterexample():
    F = GF(2)
    params = {"v_3": 1, "v^3": 1}
    gammas = (0, 0, 0, 1)
    D = daleth_datum(4, 2, F)
    A = D.algebra
    w, _ = theta_family(4, 2, "4", params, F)
    exists, _ = predicted_e(4, 2, "4", params, gammas, F)
    assert not exists
    sols = solve_deriv_ext(D, zero_map(A), w, 1, rlin_derivation(A, gammas))
    assert sols == [unit(A, 1, 4) + unit(A, 3, 4) + unit(A, 4, 4)]


def test_theta0_mu_equals_gamma_k():
    F = GF(3)
    rule = theta0_mu_rule(audit_family(3, 2, "0", F))
    for (p, q, gammas), mus in rule.items():
        assert mus == [gammas[1]], (p, q, gammas)


# ---------------------------------------------------------------- zero multiplication


def _in_alpha_form(mat, vs):
    # ς = 1: diagonal; ς = 0: only the column of A_4 may be nonzero
    for r, c in itertools.product(range(4), repeat=2):
        if mat[r][c] and not ((vs == 1 and r == c) or (vs == 0 and c == 3)):
            return False
    return True


@pytest.mark.parametrize("vs", [0, 1])
def test_zero_mult_alpha_form_iff_extendable(vs):
    F = GF(2)
    spec = ZeroMultSpec((1, 1, 1, 1), F)
    A, D = zero_mult_example(spec)
    rng = random.Random(31 + vs)
    # every matrix of the stated form plus a seeded sample of the rest
    forms = [[[(d >> r) & 1 if r == c else 0 for c in range(4)] for r in range(4)] for d in range(16)] if vs else \
        [[[(d >> r) & 1 if c == 3 else 0 for c in range(4)] for r in range(4)] for d in range(16)]
    sample = [[[rng.randrange(2) for _ in range(4)] for _ in range(4)] for _ in range(200)]
    for mat in forms + sample:
        alpha = LinMap(A, A, tuple(tuple(row) for row in mat))
        sols = solve_endo_ext(D, alpha, vs)
        assert bool(sols) == _in_alpha_form(mat, vs)
        if sols:
            # w = ς(w_1 + w_2) with w_1, w_2 free
            want = {(a * vs, b * vs, 0, 0) for a in (0, 1) for b in (0, 1)}
            assert {w.coords for w in sols} == want


def _delta_form_remainder(mat, vs, mu, alpha):
    # subtract μ(ω1π1 + ω3π3 - ω2α42π4 - ω3α43π4) and report entries outside the allowed support
    F = GF(3)
    rest = [row[:] for row in mat]
    for r, c, v in ((0, 0, mu), (2, 2, mu), (1, 3, -mu * alpha[1][3]), (2, 3, -mu * alpha[2][3])):
        rest[r][c] = F.norm(rest[r][c] - v)
    allowed = {(1, 1), (3, 3)} | ({(0, 0), (2, 2)} if vs else {(2, 1), (0, 3)})
    return [(r, c) for r in range(4) for c in range(4) if rest[r][c] and (r, c) not in allowed]


@pytest.mark.parametrize("vs", [0, 1])
def test_zero_mult_delta_form_iff_extendable(vs):
    F = GF(3)
    spec = ZeroMultSpec((1, 1, 1, 1), F)
    A, D = zero_mult_example(spec)
    rng = random.Random(23 + vs)
    alpha_m = [[int(r == c) for c in range(4)] for r in range(4)] if vs else \
        [[0, 0, 0, 1], [0, 0, 0, 2], [0, 0, 0, 1], [0, 0, 0, 2]]
    alpha = LinMap(A, A, tuple(tuple(F.norm(x) for x in row) for row in alpha_m))
    w = A.element((vs, vs, 0, 0))
    mus = [0] if vs else [0, 1, 2]
    seen = {True: 0, False: 0}
    for trial in range(240):
        mu = mus[trial % len(mus)]
        mat = [[rng.randrange(3) for _ in range(4)] for _ in range(4)]
        if trial % 2:
            # force the allowed support so both outcomes occur
            for r, c in itertools.product(range(4), repeat=2):
                mat[r][c] = 0
            for r, c in ({(1, 1), (3, 3)} | ({(0, 0), (2, 2)} if vs else {(2, 1), (0, 3)})):
                mat[r][c] = rng.randrange(3)
            for r, c, v in ((0, 0, mu), (2, 2, mu), (1, 3, -mu * alpha_m[1][3]), (2, 3, -mu * alpha_m[2][3])):
                mat[r][c] = F.norm(mat[r][c] + v)
        delta = LinMap(A, A, tuple(tuple(row) for row in mat))
        sols = solve_deriv_ext(D, alpha, w, vs, delta, mu)
        ok = not _delta_form_remainder(mat, vs, mu, alpha_m)
        assert bool(sols) == ok, (mat, mu)
        seen[ok] += 1
        if sols:
            # e = ς e_1 + e_2 + (1 - ς) e_3 with the e_i free
            want = {(a * vs, b, c * (1 - vs), 0) for a in range(3) for b in range(3) for c in range(3)}
            assert {e.coords for e in sols} == want
    assert seen[True] and seen[False]
