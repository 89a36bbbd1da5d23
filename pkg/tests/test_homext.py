import itertools
import random

import pytest

from homothetic.catalog import ZeroMultSpec, daleth_datum, zero_mult_example
from homothetic.homext import ExtAlgebra, as_algebra, check_exactness, ext_mul, extension_algebra, iota, pi
from homothetic.algebra import check_associativity
from homothetic.scalars import GF, QQ

import oracles


@pytest.mark.parametrize("n,k", [(3, 2), (4, 3)])
def test_product_formula_on_daleth(n, k):
    # (a, ξ)(b, ζ) = (ab + ζ aσ + ξ σb + ξζ s, ξζ) with σ = e_kk and s = 0
    p = 3
    red = oracles.fp(p)
    S = ExtAlgebra(daleth_datum(n, k, GF(p)))
    A = S.base
    rng = random.Random(5)
    for _ in range(60):
        a = tuple(rng.randrange(p) for _ in range(A.dim))
        b = tuple(rng.randrange(p) for _ in range(A.dim))
        xi, zeta = rng.randrange(p), rng.randrange(p)
        da, db, ekk = oracles.to_dict(a, n), oracles.to_dict(b, n), {(k, k): 1}
        first = {}
        for part, c in ((oracles.daleth_mul(da, db, n, red), 1), (oracles.daleth_mul(da, ekk, n, red), zeta),
                        (oracles.daleth_mul(ekk, db, n, red), xi)):
            for u, v in part.items():
                first[u] = red(first.get(u, 0) + c * v)
        got = ext_mul(S, S.element(A.element(a), xi), S.element(A.element(b), zeta))
        assert got.a.coords == oracles.to_coords(first, n)
        assert got.xi == red(xi * zeta)


@pytest.mark.parametrize("F", [GF(2), GF(3), QQ])
def test_zero_mult_product_formula(F):
    # (a + kσ)(b + lσ) = k b1 + l a2 + l a3 + k b3 + kl σ
    spec = ZeroMultSpec((1, 2, 1, 1), F)
    A, D = zero_mult_example(spec)
    S = ExtAlgebra(D)
    vals = [0, 1, 2] if F != GF(2) else [0, 1]
    rng = random.Random(9)
    for _ in range(40):
        a = [rng.choice(vals) for _ in range(A.dim)]
        b = [rng.choice(vals) for _ in range(A.dim)]
        k, l = rng.choice(vals), rng.choice(vals)
        expect = [0] * A.dim
        for blk, src, c in ((1, b, k), (2, a, l), (3, a, l), (3, b, k)):
            for t in spec.block(blk):
                expect[t] += c * src[t]
        got = ext_mul(S, S.element(A.element(a), k), S.element(A.element(b), l))
        assert got.a == A.element(expect)
        assert got.xi == F.norm(k * l)


def test_as_algebra_layout_and_associativity():
    S = ExtAlgebra(daleth_datum(4, 2, GF(2)))
    B = as_algebra(S)
    assert B.dim == S.base.dim + 1
    assert B.labels[-1] == "@sigma" and S.sigma_index == B.dim - 1
    assert check_associativity(B)
    # the generator is idempotent since s = 0 and σ² = σ
    g = B.basis(S.sigma_index)
    assert S.from_coords(g) == S.sigma()
    assert ext_mul(S, S.sigma(), S.sigma()) == S.sigma()


def test_exact_sequence():
    for D in (daleth_datum(3, 2, GF(3)), zero_mult_example(ZeroMultSpec((1, 1, 1, 1), QQ))[1]):
        S = ExtAlgebra(D)
        assert all(check_exactness(S))
        A = S.base
        for a in A.basis_elements():
            assert pi(S, iota(S, a)) == 0


def test_extension_algebra_direct_table():
    D = daleth_datum(3, 2, GF(2))
    B = extension_algebra(D.sigma, D.s)
    S = ExtAlgebra(D)
    B2 = as_algebra(S)
    for x, y in itertools.product(range(B.dim), repeat=2):
        assert B.sc[x][y] == B2.sc[x][y]
