import itertools

import pytest

from homothetic.algebra import identity_map, make_algebra, map_from_images, mul, zero_map, lin_add
from homothetic.catalog import daleth, daleth_datum, daleth_family1_quintuple, epsilon, unit
from homothetic.checks import BadVarsigma, ConditionsFail, MuConstraintViolated, NotBimultiplication
from homothetic.homext import ExtAlgebra, as_algebra
from homothetic.multiplier import DoubleOperator, bimultiplication_space, is_double_homothetism
from homothetic.scalars import GF, QQ
from homothetic.skewderiv import (
    Quintuple,
    check_deriv_ext,
    check_endo_ext,
    extend_deriv,
    extend_endo,
    homothetic_derivation,
    inner_ext_derivation,
    is_endomorphism,
    is_skew_derivation,
    restrict_and_extract,
    solve_deriv_ext,
    solve_endo_ext,
)

import oracles


def test_type0_zero_map_solutions_are_idempotents():
    D = daleth_datum(3, 2, GF(2))
    A = D.algebra
    got = sorted(w.coords for w in solve_endo_ext(D, zero_map(A), 0))
    assert got == sorted(oracles.daleth_idempotents(3, 2))
    assert len(got) == 13


def test_endo_conditions_iff_solver():
    D = daleth_datum(3, 2, GF(2))
    A = D.algebra
    for vs in (0, 1):
        sols = {w.coords for w in solve_endo_ext(D, zero_map(A), vs)}
        for c in itertools.product((0, 1), repeat=A.dim):
            assert bool(check_endo_ext(D, zero_map(A), A.element(c), vs)) == (c in sols)


def test_deriv_conditions_iff_solver():
    q = daleth_family1_quintuple(3, 2, GF(3), v=2, gammas=(1, 2, 1))
    A = q.algebra
    sols = solve_deriv_ext(q.datum, q.alpha, q.w, 1, q.delta)
    assert sols == [q.e]
    for c in itertools.product(range(3), repeat=A.dim):
        e = A.element(c)
        assert bool(check_deriv_ext(q.datum, q.alpha, q.w, 1, q.delta, e)) == (e == q.e)


def test_perturbing_e_breaks_quintuple():
    q = daleth_family1_quintuple(3, 2, GF(2))
    for b in q.algebra.basis_elements():
        with pytest.raises(ConditionsFail):
            Quintuple(q.datum, q.alpha, q.w, q.delta, q.e + b, 1, 0)


def test_extensions_are_endomorphism_and_skew_derivation():
    for q in (daleth_family1_quintuple(3, 2, GF(2)), daleth_family1_quintuple(4, 2, GF(3), v=2, gammas=(1, 2, 0, 1))):
        S = ExtAlgebra(q.datum)
        aS = extend_endo(S, q.alpha, q.w, q.varsigma)
        dS = extend_deriv(S, q)
        assert is_endomorphism(aS)
        assert is_skew_derivation(aS, dS)
        back = restrict_and_extract(S, aS, dS)
        assert (back.alpha, back.w, back.delta, back.e, back.varsigma, back.mu) == (
            q.alpha, q.w, q.delta, q.e, q.varsigma, q.mu)


def test_mu_constraint_and_varsigma_domain():
    q = daleth_family1_quintuple(3, 2, GF(3))
    with pytest.raises(MuConstraintViolated):
        solve_deriv_ext(q.datum, q.alpha, q.w, 1, q.delta, mu=1)
    with pytest.raises(BadVarsigma):
        solve_endo_ext(q.datum, q.alpha, 2)


def test_homothetic_derivation_on_daleth():
    # α = id, σ = ε_2: δ(a) = a e22 - e22 a
    A = daleth(3, QQ)
    d = homothetic_derivation(identity_map(A), epsilon(A, 2))
    assert d(unit(A, 1, 2)) == unit(A, 1, 2)
    assert d(unit(A, 2, 3)) == unit(A, 2, 3).scale(-1)
    for i, j in [(1, 1), (1, 3), (3, 3)]:
        assert d(unit(A, i, j)).is_zero()
    assert is_skew_derivation(identity_map(A), d)


def _nilpotent_square(F):
    # x*x = y, everything else 0; degenerate, so not every bimultiplication is a homothetism
    sc = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    sc[0][0][1] = 1
    return make_algebra(3, sc, F, ["x", "y", "z"], name="N")


def test_homothetic_derivation_for_plain_bimultiplications():
    F = GF(2)
    A = _nilpotent_square(F)
    space = bimultiplication_space(A)
    endos = []
    for cols in itertools.product(itertools.product((0, 1), repeat=3), repeat=3):
        f = map_from_images(A, A, [A.element(c) for c in cols])
        if is_endomorphism(f):
            endos.append(f)
    assert identity_map(A) in endos
    endos = [identity_map(A), zero_map(A)] + [f for f in endos if f != identity_map(A) and not f.is_zero()][:3]
    non_hom = 0
    for c in itertools.product((0, 1), repeat=len(space)):
        acc = DoubleOperator(zero_map(A), zero_map(A))
        for ci, s in zip(c, space):
            if ci:
                acc = DoubleOperator(lin_add(acc.left, s.left), lin_add(acc.right, s.right))
        if is_double_homothetism(acc):
            continue
        non_hom += 1
        for alpha in endos:
            d = homothetic_derivation(alpha, acc)
            for a, b in itertools.product(A.basis_elements(), repeat=2):
                assert d(mul(a, b)) == mul(d(a), b) + mul(alpha(a), d(b))
    assert non_hom > 0


def test_homothetic_derivation_rejects_non_bimultiplication():
    A = daleth(3, GF(2))
    bogus = DoubleOperator(identity_map(A), zero_map(A))
    with pytest.raises(NotBimultiplication):
        homothetic_derivation(identity_map(A), bogus)


def _split(S, v):
    return S.base.element(v.coords[:-1]), v.coords[-1]


@pytest.mark.parametrize("vs", [0, 1])
def test_inner_derivation_at_generator(vs):
    # c = @sigma: μ = ς - 1 and e = wσ + (ς - 1)s
    D = daleth_datum(3, 2, GF(3))
    S = ExtAlgebra(D)
    A = D.algebra
    for w in solve_endo_ext(D, zero_map(A), vs):
        aS = extend_endo(S, zero_map(A), w, vs)
        inn = inner_ext_derivation(S, aS, S.sigma())
        assert inn.mu == (vs - 1) % 3
        e_read, mu_read = _split(S, inn.delta_s(as_algebra(S).basis(S.sigma_index)))
        assert e_read == D.sigma.a_sigma(w) + D.s.scale(vs - 1)
        assert (e_read, mu_read) == (inn.e, inn.mu)
        assert is_skew_derivation(aS, inn.delta_s)


def test_inner_derivation_zero_mult_rational():
    from homothetic.catalog import zero_mult_type1_quintuple

    q = zero_mult_type1_quintuple((1, 1, 1, 1), QQ)
    S = ExtAlgebra(q.datum)
    aS = extend_endo(S, q.alpha, q.w, 1)
    A = q.algebra
    c = S.element(A.element((1, -2, 3, 5)), 4)
    inn = inner_ext_derivation(S, aS, c)
    assert is_skew_derivation(aS, inn.delta_s)
    assert inn.mu == 0
    back = restrict_and_extract(S, aS, inn.delta_s)
    assert back.e == inn.e and back.mu == 0
