"""Products in R[x; α, δ] with α = id and δ an inner derivation of ℸ_3 over F_3."""

from homothetic.algebra import identity_map, map_from_function, mul
from homothetic.catalog import daleth, unit
from homothetic.ore import OreRing, gamma, ore_mul
from homothetic.scalars import GF

A = daleth(3, GF(3))
c = unit(A, 1, 1) + unit(A, 1, 2) + unit(A, 2, 3).scale(2)
ring = OreRing(identity_map(A), map_from_function(A, lambda a: mul(a, c) - mul(c, a)))

P = ring.poly([unit(A, 1, 1), unit(A, 1, 2)])
Q = ring.poly([unit(A, 2, 3), unit(A, 1, 3) + unit(A, 1, 1)])
print("P =", P)
print("Q =", Q)
print("PQ =", ore_mul(P, Q))
print("QP =", ore_mul(Q, P))
print("Γ^2_1 on e23:", gamma(ring, 2, 1)(unit(A, 2, 3)))
