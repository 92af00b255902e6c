"""
From divisors to a verdict: SL(3,C)/SO(3,C)
===========================================

This script follows the smallest case through every stage of the
pipeline and prints the exact intermediate values.
"""

from ke_polytope import casedb, criterion, dhmeasure, polytope
from ke_polytope.rootdata import realize

case = casedb.get_case(1)
print(case.name, "| dimension", case.dimension, "| Fano index", case.fano_index)

# The restricted root system is A2 with multiplicity one.  Its realization
# in the plane has entries in Q(sqrt3).
A2 = realize("A2")
print("simple roots       ", ", ".join(map(str, A2.simple_roots)))
print("fundamental weights", ", ".join(map(str, A2.fundamental_weights)))

# %%
# Each color and each G-stable divisor cuts out one half-plane.  Their
# intersection is the moment polytope, a triangle here.
halfplanes = polytope.halfplanes_from_case(case)
for h in halfplanes:
    print(f"  <{h.normal}, p> >= {h.offset}")
poly = polytope.intersect(halfplanes)
print("vertices", ", ".join(map(str, poly.vertices)))

# %%
# The Duistermaat-Heckman density is the product of the positive root
# forms raised to the multiplicity.  Integrating it and its first moments
# exactly over a fan triangulation gives the volume and barycenter.
f = dhmeasure.density(case)
print("density  ", f)
print("volume   ", dhmeasure.volume(case))
bar = dhmeasure.barycenter(case)
print("barycenter", bar)

# %%
# The criterion asks whether the barycenter sits strictly inside the cone
# spanned by the restricted simple roots with apex at 2rho.
v = criterion.verdict(case)
s, t = v.cone_coefficients
print(f"barycenter - 2rho = {s} g1 + {t} g2")
print("Kahler-Einstein:", v.ke_exists, "| barycenter =", v.proportionality, "x 2rho")
