"""
Monte-Carlo against exact integrals
===================================

The exact volume of the Cayley Grassmannian polytope is compared with
rejection-sampling estimates at growing sample sizes.  The error should
shrink roughly like one over the square root of the sample count and
stay within a few standard errors.
"""

import numpy as np

from ke_polytope import get_case
from ke_polytope.dhmeasure import volume
from ke_polytope.oracle import mc_volume

case = get_case(5)
exact = float(volume(case))
print("exact volume", volume(case), "~", exact)

# %%
# One fixed seed keeps the table reproducible.
sizes = [10**3, 10**4, 10**5, 10**6]
errors = []
for n in sizes:
    est = mc_volume(case, n, seed=42)
    err = abs(est.value - exact)
    errors.append(err / exact)
    print(f"n={n:>8}  estimate={est.value:14.2f}  rel_err={err / exact:.2e}  z={err / est.stderr:.2f}")

# %%
# A log-log fit of relative error against sample count.  With a single
# seed the slope is noisy, but it should sit near -1/2.
slope = np.polyfit(np.log10(sizes), np.log10(errors), 1)[0]
print(f"fitted slope {slope:.2f}")
