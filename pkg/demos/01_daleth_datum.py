"""ℸ_3 over F_2, the datum (ε_2, 0) and the algebra it builds.

Also shows what happens to associativity when one entry of σ is changed.
"""

from homothetic.algebra import LinMap, check_associativity
from homothetic.catalog import daleth_datum, unit
from homothetic.homext import ExtAlgebra, as_algebra, extension_algebra
from homothetic.multiplier import DoubleOperator, datum_checks
from homothetic.scalars import GF

D = daleth_datum(3, 2, GF(2))
A = D.algebra
print("basis:", " ".join(A.labels))
for i, j in [(1, 2), (2, 3), (1, 1)]:
    a = unit(A, i, j)
    print(f"  {a}·σ = {D.sigma.a_sigma(a)}    σ·{a} = {D.sigma.sigma_a(a)}")

S = ExtAlgebra(D)
print("R(σ, s) has dimension", as_algebra(S).dim, "and", check_associativity(as_algebra(S)).describe())

# flip the e23 -> e23 entry of the right action
right = [list(r) for r in D.sigma.right.matrix]
right[3][3] = 0
bent = DoubleOperator(D.sigma.left, LinMap(A, A, tuple(map(tuple, right))))
for r in datum_checks(bent, D.s):
    print("  ", r.describe())
print("  ", check_associativity(extension_algebra(bent, D.s, check=False)).describe())
