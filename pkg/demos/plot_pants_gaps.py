"""
Gaps on one boundary of a pair of pants
=======================================

Probe a single pair of pants: the feet of the perpendiculars split the
distinguished boundary into a main gap and two widths.
"""

import math

from mcshane import (BoundarySpec, EndDescriptor, PantsSpec, foot_widths, gap, gap_prime,
                     gap_via_gs)

p = PantsSpec(BoundarySpec.hole(2.0), EndDescriptor.interior(2.0), EndDescriptor.interior(3.0))
layout = foot_widths(p)
print(layout)
print("main gap + widths =", layout.main_gap + layout.width_a + layout.width_b)

###############################################################################
# The same gap from the closed form and from the G/S reformulation.

d0 = BoundarySpec.cone(1.0)
a, b = EndDescriptor.cusp(), EndDescriptor.interior(2.0)
print("closed form:", gap(d0, a, b))
print("via G, S   :", gap_via_gs(d0, a, b))  # purely imaginary for a cone

###############################################################################
# Shrinking the distinguished boundary, gap / eps tends to the cusp value.

for eps in (1e-1, 1e-2, 1e-3, 1e-4):
    ratio = gap(BoundarySpec.hole(eps), a, b) / eps
    print(f"eps={eps:.0e}  gap/eps={ratio:.9f}")
print("cusp limit       ", gap_prime(a, b))
print("1/(1+e)          ", 1 / (1 + math.e))  # half lengths 0 and 1
