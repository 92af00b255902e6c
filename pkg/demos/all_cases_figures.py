"""
Drawing all six moment polytopes
================================

Each built-in case gets an SVG with the polytope, the cone at 2rho and
the barycenter.  Files land in ``figures/`` next to this script unless a
directory is given on the command line.
"""

import sys
from pathlib import Path

from ke_polytope import builtin_cases, verdict
from ke_polytope.figure import render_svg

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).with_name("figures")
out.mkdir(parents=True, exist_ok=True)

# %%
# A short summary table goes to stdout while the pictures are written.
print(f"{'case':<5}{'name':<30}{'s':>12}{'t':>12}  verdict")
for case in builtin_cases():
    v = verdict(case)
    s, t = (float(c) for c in v.cone_coefficients)
    print(f"{case.id:<5}{case.name:<30}{s:>12.6f}{t:>12.6f}  {'KE' if v.ke_exists else 'not KE'}")
    (out / f"case{case.id}.svg").write_text(render_svg(case, v), encoding="utf-8")

print("wrote", len(list(out.glob("case*.svg"))), "figures to", out)
