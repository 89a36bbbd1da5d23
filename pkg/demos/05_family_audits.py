"""Closed forms for the ℸ_n families against the solver, over F_3.

Prints a one-line summary per family; `homothetic audit family=N` prints the rows.
"""

from homothetic.catalog import audit_family
from homothetic.scalars import GF

F = GF(3)
for fam in "01234":
    audit = audit_family(3, 2, fam, F)
    bad = audit.disagreements
    print(f"family {fam}: {len(audit.rows)} points, {len(bad)} disagree,"
          f" sharp obstruction: {audit.obstruction_sharp()}")
    for r in bad[:2]:
        d = r.to_dict(F)
        print("   ", d["params"], "γ =", d["gammas"], "μ =", d["mu"], "predicted", d["predicted"], "solver", d["solver"])
