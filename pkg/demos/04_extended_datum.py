"""Extending (σ, s) to R[x] and embedding R[x](σ̃, s) into S[x; α_S, δ_S]."""

from homothetic.bridge import BridgeContext, audit_gamma_bar, verify_diagram
from homothetic.catalog import daleth_family1_quintuple, zero_mult_type1_quintuple
from homothetic.scalars import GF, QQ

for name, q in [("ℸ_3 over F_2", daleth_family1_quintuple(3, 2, GF(2))),
                ("zero multiplication over Q", zero_mult_type1_quintuple((1, 1, 1, 1), QQ))]:
    ctx = BridgeContext(q, degree_cap=4)
    print(name)
    for r in verify_diagram(ctx):
        print("  ", r.describe())
    for line in audit_gamma_bar(ctx, 5).describe():
        print("  ", line)
