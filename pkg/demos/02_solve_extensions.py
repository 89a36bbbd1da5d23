"""Which w extend α = 0 to R(σ, s), and which e extend a right-linear δ."""

from homothetic.algebra import zero_map
from homothetic.catalog import daleth_datum, rlin_derivation
from homothetic.scalars import GF
from homothetic.skewderiv import solve_deriv_ext, solve_endo_ext

F = GF(2)
D = daleth_datum(3, 2, F)
A = D.algebra
for vs in (0, 1):
    sols = solve_endo_ext(D, zero_map(A), vs)
    print(f"ς = {vs}: {len(sols)} choices of w")
    print("   ", ", ".join(str(w) for w in sols))

w = A.element((0, 1, 0, 0, 0))
delta = rlin_derivation(A, (1, 1, 1))
print("e for w = e12, δ = id:", [str(e) for e in solve_deriv_ext(D, zero_map(A), w, 1, delta)])
