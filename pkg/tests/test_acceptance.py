"""Acceptance suite: one PASS/FAIL line per criterion.

Run with pytest, or directly with ``python3 tests/test_acceptance.py`` for the
summary alone.  Every comparison is exact.
"""

from __future__ import annotations

import itertools
import random
import subprocess
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import oracles  # noqa: E402
from homothetic.algebra import Algebra, LinMap, check_associativity, identity_map, make_algebra, map_from_function, mul, zero_map  # noqa: E402
from homothetic.bridge import (  # noqa: E402
    BridgeContext,
    OreHomElement,
    audit_gamma_bar,
    gamma_bar,
    p_split,
    phi,
    pi_prime,
    probe_type0,
    verify_diagram,
)
from homothetic.catalog import (  # noqa: E402
    ZeroMultSpec,
    audit_family,
    daleth,
    daleth_cond,
    daleth_datum,
    daleth_family1_quintuple,
    family_sweep,
    theta_family,
    unit,
    zero_mult_example,
    zero_mult_type0_quintuple,
    zero_mult_type1_quintuple,
)
from homothetic.cli import example_document, run  # noqa: E402
from homothetic.dsl import parse, serialize  # noqa: E402
from homothetic.homext import SIGMA_LABEL, ExtAlgebra, extension_table  # noqa: E402
from homothetic.multiplier import DoubleOperator, bimultiplication_space, datum_checks, is_double_homothetism  # noqa: E402
from homothetic.ore import OreRing, gamma, ore_mul, x_operator_laws  # noqa: E402
from homothetic.scalars import GF, QQ  # noqa: E402
from homothetic.skewderiv import extend_endo, homothetic_derivation, inner_ext_derivation, is_skew_derivation, solve_endo_ext  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"
F2, F3 = GF(2), GF(3)


# ---------------------------------------------------------------- 1. datum <=> associativity


def _bump(matrix, r, c, scalars):
    rows = [list(row) for row in matrix]
    rows[r][c] = scalars.norm(rows[r][c] + 1)
    return tuple(tuple(row) for row in rows)


def _mutations(sigma: DoubleOperator, s):
    A = sigma.algebra
    F = A.scalars
    for r, c in itertools.product(range(A.dim), repeat=2):
        yield f"aσ[{r},{c}]", DoubleOperator(LinMap(A, A, _bump(sigma.left.matrix, r, c, F)), sigma.right), s
        yield f"σa[{r},{c}]", DoubleOperator(sigma.left, LinMap(A, A, _bump(sigma.right.matrix, r, c, F))), s
    for t in range(A.dim):
        yield f"s[{t}]", sigma, s + A.basis(t)
    # σ² = σ + s̄ broken by scaling: 2σ squares to 4σ
    two = DoubleOperator(LinMap(A, A, tuple(tuple(F.norm(2 * x) for x in row) for row in sigma.left.matrix)),
                         LinMap(A, A, tuple(tuple(F.norm(2 * x) for x in row) for row in sigma.right.matrix)))
    yield "2σ", two, s


def _catalog_data():
    for F in (F2, QQ):
        for n in (3, 4, 5):
            for k in range(2, n):
                yield f"ℸ_{n}(ε_{k})/{F}", daleth_datum(n, k, F)
        for dims in ((1, 1, 1, 1), (2, 1, 1, 2)):
            yield f"zeromult{dims}/{F}", zero_mult_example(ZeroMultSpec(dims, F))[1]


def criterion_1():
    bad = []
    for name, D in _catalog_data():
        A = D.algebra
        ext = Algebra(name, A.scalars, A.labels + (SIGMA_LABEL,), extension_table(D.sigma, D.s))
        if not check_associativity(ext):
            bad.append(f"{name}: extension not associative")
        broken = 0
        for what, sigma, s in _mutations(D.sigma, D.s):
            axioms = all(datum_checks(sigma, s))
            mutated = Algebra(name, A.scalars, A.labels + (SIGMA_LABEL,), extension_table(sigma, s))
            assoc = check_associativity(mutated)
            if axioms != bool(assoc):
                bad.append(f"{name} {what}: axioms {axioms}, associative {bool(assoc)}")
            if not assoc:
                broken += 1
                if "triple" not in assoc.witness or assoc.witness["lhs"] == assoc.witness["rhs"]:
                    bad.append(f"{name} {what}: no witness")
        if not broken:
            bad.append(f"{name}: no mutation broke the datum")
    return bad


# ---------------------------------------------------------------- 2. α-extension


def criterion_2():
    bad = []
    D = daleth_datum(3, 2, F2)
    A = D.algebra
    sols0 = sorted(w.coords for w in solve_endo_ext(D, zero_map(A), 0))
    oracle = sorted(oracles.daleth_idempotents(3, 2))
    if sols0 != oracle or len(sols0) != 13:
        bad.append(f"ς=0: {len(sols0)} solutions, oracle {len(oracle)}")
    for p, q in itertools.product((0, 1), repeat=2):
        pq = (unit(A, 1, 1).scale(p) + unit(A, 3, 3).scale(q)).coords
        if pq not in sols0:
            bad.append(f"ς=0: p={p}, q={q} missing")
    sols1 = solve_endo_ext(D, zero_map(A), 1)
    if not all(daleth_cond(w, 2) for w in sols1):
        bad.append("ς=1: a solution violates the coordinate relations")
    got = {w.coords for w in sols1}
    for fam in ("1", "2", "3", "4"):
        for params in family_sweep(3, 2, fam, F2):
            w, _ = theta_family(3, 2, fam, params, F2)
            if w.coords not in got:
                bad.append(f"ς=1: family {fam} {params} not a solution")
    return bad


# ---------------------------------------------------------------- 3. δ-extension families


def criterion_3():
    bad = []
    for n, F in itertools.product((3, 4), (F2, F3)):
        for fam in ("1", "2", "3", "4"):
            audit = audit_family(n, 2, fam, F)
            wrong = audit.disagreements
            if fam == "1":
                if wrong or not all(len(r.solutions) == 1 for r in audit.rows):
                    bad.append(f"family 1 ℸ_{n}/{F}: {len(wrong)}/{len(audit.rows)} rows differ from e = -γ_k υ e_1k")
                continue
            if not audit.obstruction_sharp():
                extra = sum(1 for r in audit.rows if r.solutions and not r.predicted_exists)
                bad.append(f"family {fam} ℸ_{n}/{F}: obstruction not sharp, "
                           f"{extra}/{len(audit.rows)} violating points still extend")
            elif wrong:
                bad.append(f"family {fam} ℸ_{n}/{F}: {len(wrong)}/{len(audit.rows)} closed forms differ")
    return bad


# ---------------------------------------------------------------- 4. θ⁰ derivations


def criterion_4():
    bad = []
    for n, F in itertools.product((3, 4), (F2, F3)):
        audit = audit_family(n, 2, "0", F)
        wrong = audit.disagreements
        if wrong:
            mu_is_gk = all(bool(r.solutions) == (r.mu == F.norm(r.gammas[1])) for r in audit.rows)
            bad.append(f"θ⁰ ℸ_{n}/{F}: {len(wrong)}/{len(audit.rows)} rows disagree"
                       + (" (solver: extension iff μ = γ_k)" if mu_is_gk else ""))
    return bad


# ---------------------------------------------------------------- 5. inner and homothetic derivations


def _nilpotent_square(F):
    sc = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    sc[0][0][1] = 1
    return make_algebra(3, sc, F, ["x", "y", "z"], name="N")


def criterion_5():
    bad = []
    D = daleth_datum(3, 2, F2)
    A = D.algebra
    S = ExtAlgebra(D)
    red = oracles.fp(2)
    e22 = {(2, 2): 1}
    admissible = [(zero_map(A), w, vs) for vs in (0, 1) for w in solve_endo_ext(D, zero_map(A), vs)]
    admissible += [(identity_map(A), w, vs) for vs in (0, 1) for w in solve_endo_ext(D, identity_map(A), vs)]
    if not any(a == identity_map(A) for a, _, _ in admissible):
        bad.append("identity has no extension")
    for alpha, w, vs in admissible:
        aS = extend_endo(S, alpha, w, vs)
        wd = oracles.to_dict(w.coords, 3)
        for bits in itertools.product((0, 1), repeat=6):
            b = A.element(bits[:5])
            zeta = bits[5]
            inn = inner_ext_derivation(S, aS, S.element(b, zeta))
            if not is_skew_derivation(aS, inn.delta_s):
                bad.append(f"c={bits}: not a skew derivation")
                continue
            col = inn.delta_s.column(S.sigma_index)
            bd = oracles.to_dict(b.coords, 3)
            # ςσb - bσ + wb + ζ(wσ + (ς-1)s) with σ = ε_2 acting as e22 on either side, s = 0
            terms = [oracles.daleth_mul(e22, bd, 3, red), oracles.daleth_mul(bd, e22, 3, red),
                     oracles.daleth_mul(wd, bd, 3, red), oracles.daleth_mul(wd, e22, 3, red)]
            coeffs = (vs, -1, 1, zeta)
            want = {}
            for c, t in zip(coeffs, terms):
                for u, x in t.items():
                    want[u] = red(want.get(u, 0) + c * x)
            if tuple(col[:-1]) != oracles.to_coords(want, 3) or col[-1] != red(zeta * (vs - 1)):
                bad.append(f"α_S(w={w}, ς={vs}), c={bits}: (e, μ) = {col}")
    if len(bad) > 5:
        bad = bad[:5] + [f"... {len(bad) - 5} more"]
    N = _nilpotent_square(F2)
    found = 0
    for c in itertools.product((0, 1), repeat=len(bimultiplication_space(N))):
        acc = DoubleOperator(zero_map(N), zero_map(N))
        for ci, s in zip(c, bimultiplication_space(N)):
            if ci:
                acc = acc + s
        if is_double_homothetism(acc):
            continue
        found += 1
        d = homothetic_derivation(identity_map(N), acc)
        for x, y in itertools.product(N.basis_elements(), repeat=2):
            if d(mul(x, y)) != mul(d(x), y) + mul(x, d(y)):
                bad.append(f"homothetic derivation fails Leibniz on {x}, {y}")
        break
    if not found:
        bad.append("no bimultiplication of N outside the double homothetisms")
    return bad


# ---------------------------------------------------------------- 6. Ore arithmetic


def _inner_ring(F):
    A = daleth(3, F)
    c = unit(A, 1, 2) + unit(A, 2, 3) + unit(A, 1, 1)
    return OreRing(identity_map(A), map_from_function(A, lambda a: mul(a, c) - mul(c, a)), degree_cap=16)


def _rings():
    q = daleth_family1_quintuple(3, 2, F2)
    z = zero_mult_type1_quintuple((1, 1, 1, 1), QQ)
    return [("ℸ_3/F2 right-linear", OreRing(q.alpha, q.delta, 16), oracles.fp(2), (0, 1)),
            ("ℸ_3/F2 inner", _inner_ring(F2), oracles.fp(2), (0, 1)),
            ("zeromult/Q", OreRing(z.alpha, z.delta, 16), oracles.qq, (0, 1, -1, 2))]


def _random_poly(ring, rng, values, degree):
    A = ring.algebra
    return ring.poly([A.element([rng.choice(values) for _ in range(A.dim)]) for _ in range(degree + 1)])


def criterion_6():
    bad = []
    rng = random.Random(20261016)
    for name, ring, red, values in _rings():
        a = [list(r) for r in ring.alpha.matrix]
        d = [list(r) for r in ring.delta.matrix]
        for m in range(7):
            for i in range(m + 1):
                if [list(r) for r in gamma(ring, m, i).matrix] != oracles.gamma_words(a, d, m, i, red):
                    bad.append(f"{name}: Γ^{m}_{i} differs from the word sum")
        for _ in range(200):
            p, q, r = (_random_poly(ring, rng, values, rng.randrange(5)) for _ in range(3))
            if ore_mul(ore_mul(p, q), r) != ore_mul(p, ore_mul(q, r)):
                bad.append(f"{name}: associativity fails on {p}, {q}, {r}")
                break
        laws = x_operator_laws(ring, degree=6)
        if not laws:
            bad.append(f"{name}: {laws.describe()}")
    return bad


# ---------------------------------------------------------------- 7. extended datum and embedding


def _pipelines():
    return [("ℸ_3 family 1", daleth_family1_quintuple(3, 2, F2), (0, 1)),
            ("zeromult ς=1", zero_mult_type1_quintuple((1, 1, 1, 1), QQ), (0, 1, -1, 3))]


def criterion_7():
    bad = []
    rng = random.Random(7)
    for name, q, values in _pipelines():
        ctx = BridgeContext(q, degree_cap=6)
        for r in verify_diagram(ctx):
            if not r:
                bad.append(f"{name}: {r.describe()}")
        for _ in range(200):
            u, v = (OreHomElement(ctx, _random_poly(ctx.ring_r, rng, values, rng.randrange(4)), rng.choice(values))
                    for _ in range(2))
            if phi(ctx, u * v) != ore_mul(phi(ctx, u), phi(ctx, v)):
                bad.append(f"{name}: φ not multiplicative on {u}, {v}")
                break
            back = p_split(ctx, phi(ctx, u)) == u.poly and pi_prime(ctx, phi(ctx, u)) == ((u.xi,) if u.xi else ())
            if not back or (phi(ctx, u) == phi(ctx, v)) != (u == v):
                bad.append(f"{name}: φ not injective at {u}")
                break
    return bad


# ---------------------------------------------------------------- 8. Γ̄ audit


def criterion_8():
    bad = []
    conventions = set()
    for name, q, _ in _pipelines():
        ctx = BridgeContext(q, degree_cap=6)
        audit = audit_gamma_bar(ctx, 5)
        for r in audit.checks[:2]:
            if not r:
                bad.append(f"{name}: {r.describe()}")
        # δ^(n-1)(e) straight from the matrix
        red = oracles.fp(q.algebra.scalars.p) if q.algebra.scalars.kind == "F" else oracles.qq
        dm = [list(r) for r in q.delta.matrix]
        v = list(q.e.coords)
        for n in range(1, 6):
            if tuple(gamma_bar(ctx, n, 0).coords) != tuple(v):
                bad.append(f"{name}: Γ̄^{n}_0 != δ^{n - 1}(e)")
            v = oracles.mat_vec(dm, v, red)
        full = [c for c, ns in audit.top_range_matches.items() if ns == [1, 2, 3, 4, 5]]
        if len(full) == 0:
            bad.append(f"{name}: no convention matches for every n <= 5 ({audit.top_range_matches})")
        elif len(full) == 1:
            conventions.add(full[0])
    if len(conventions) != 1:
        bad.append(f"matching convention differs between pipelines: {sorted(conventions)}")
    return bad


# ---------------------------------------------------------------- 9. type 0


def criterion_9():
    bad = []
    q = zero_mult_type0_quintuple((1, 1, 1, 1), QQ, mu=1)
    rep = probe_type0(q, degree=6)
    for r in rep.checks:
        if not r:
            bad.append(r.describe())
    W = rep.kernel_witness
    if W is None:
        bad.append("no kernel witness")
    else:
        # π′ sends (a + ζ@sigma)x^n to ζ μ^n
        value = sum(c.coords[-1] * q.mu ** n for n, c in enumerate(W.coeffs))
        if value != 0 or not any(c.coords[-1] for c in W.coeffs):
            bad.append(f"witness {W} is not a kernel element outside im ι′")
    return bad


# ---------------------------------------------------------------- 10. CLI


def _catalog_documents():
    for n in (3, 4, 5):
        for F in (F2, F3, QQ):
            yield example_document("daleth", n=n, scalars=F)
    for dims in ((1, 1, 1, 1), (2, 1, 1, 2)):
        for F in (F2, F3, QQ):
            yield example_document("zeromult", dims=dims, scalars=F)
            yield example_document("zeromult0", dims=dims, scalars=F)


def criterion_10():
    bad = []
    for doc in _catalog_documents():
        text = serialize(doc)
        if parse(text) != doc or serialize(parse(text)) != text:
            bad.append(f"round trip fails for {doc.names()[0]}")
    good, failing = str(FIXTURES / "daleth3_pass.hom"), str(FIXTURES / "daleth3_bad_datum.hom")
    for argv in (["check", "datum", good], ["--json", "solve-w", good, "--varsigma", "0"],
                 ["--degree-cap", "3", "bridge-verify", good]):
        if run(argv) != run(argv):
            bad.append(f"{' '.join(argv[:2])}: reports differ between runs")
    cmd = [sys.executable, "-m", "homothetic.cli", "solve-w", good, "--varsigma", "1"]
    a, b = (subprocess.run(cmd, capture_output=True, check=False) for _ in range(2))
    if a.stdout != b.stdout or not a.stdout:
        bad.append("subprocess reports differ")
    codes = {argv[-1]: run(argv)[0] for argv in (["check", "datum", good], ["check", "datum", failing])}
    if codes != {good: 0, failing: 1}:
        bad.append(f"exit codes {codes}")
    if run(["check", "datum", str(FIXTURES / "missing.hom")])[0] != 2:
        bad.append("missing file does not exit 2")
    return bad


CRITERIA = {
    1: ("datum <=> associativity, single mutations", criterion_1),
    2: ("α-extension: idempotents at ς=0, families at ς=1", criterion_2),
    3: ("δ-extension: family 1 formula, family 2-4 obstructions sharp", criterion_3),
    4: ("θ⁰ derivation extension rule", criterion_4),
    5: ("inner and homothetic derivations", criterion_5),
    6: ("Ore arithmetic: Γ, associativity, x operators", criterion_6),
    7: ("extended datum and embedding at degree 6", criterion_7),
    8: ("Γ̄ audit and top-index convention", criterion_8),
    9: ("type-0 probe", criterion_9),
    10: ("CLI round trip, determinism, exit codes", criterion_10),
}


def evaluate(number: int) -> tuple[bool, str]:
    title, fn = CRITERIA[number]
    problems = fn()
    line = f"criterion {number:2d} {'PASS' if not problems else 'FAIL'}: {title}"
    if problems:
        line += "\n" + "\n".join(f"    {p}" for p in problems)
    return not problems, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = evaluate(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
