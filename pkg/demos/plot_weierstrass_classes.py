"""
Three Weierstrass classes
=========================

Split the geodesics by slope parity and sum each class separately.
At the symmetric seed the three class sums coincide.
"""

import math

from mcshane import BoundarySpec, enumerate_geodesics
from mcshane.verify import verify_combined, verify_weierstrass

for b in (BoundarySpec.cusp(), BoundarySpec.cone(math.pi), BoundarySpec.hole(2.0)):
    recs = enumerate_geodesics(b, 30)
    sums = {c: verify_weierstrass(b, c, 30, records=recs).partial_sum for c in "ABC"}
    comb = verify_combined(b, 30, records=recs)
    print(f"{b.kind:>18} {b.magnitude:6.3f}  "
          + "  ".join(f"{c}={s:.6f}" for c, s in sums.items())
          + f"  combined residual={comb.residual:.2e}")

###############################################################################
# Each class converges to pi/2, far more slowly than the full sum, since
# the summands decay like e^{-L/2}.
print("pi/2 =", math.pi / 2)

###############################################################################
# Moving off the symmetric point breaks the tie between classes.
from mcshane.markoff import seed_from_traces

seed = seed_from_traces(0.0, 3.2, 4.1)
cusp = BoundarySpec.cusp()
for c in "ABC":
    rep = verify_weierstrass(cusp, c, 30, override_seed=seed)
    print(c, f"{rep.partial_sum:.6f}", f"residual={rep.residual:.2e}")
