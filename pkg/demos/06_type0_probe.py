"""Why the type-1 construction does not carry over to ς = 0."""

from homothetic.bridge import probe_type0
from homothetic.catalog import zero_mult_type0_quintuple
from homothetic.scalars import QQ

rep = probe_type0(zero_mult_type0_quintuple((1, 1, 1, 1), QQ, mu=1), degree=4)
for line in rep.describe():
    print(line)
