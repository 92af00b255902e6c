"""SVG drawings of moment polytopes with roots, weights, cone and barycenter."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .criterion import Verdict

WIDTH = 480.0
MARGIN = 0.10


def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def _viewport(points):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    dx, dy = (x1 - x0) * MARGIN, (y1 - y0) * MARGIN
    return x0 - dx, y0 - dy, x1 + dx, y1 + dy


def _ray_end(start, direction, box):
    """Point where the ray leaves ``box`` (start assumed inside or on it)."""
    x0, y0, x1, y1 = box
    t_exit = float("inf")
    for s, d, lo, hi in ((start[0], direction[0], x0, x1), (start[1], direction[1], y0, y1)):
        if d > 0:
            t_exit = min(t_exit, (hi - s) / d)
        elif d < 0:
            t_exit = min(t_exit, (lo - s) / d)
    if t_exit == float("inf") or t_exit < 0:
        t_exit = 0.0
    return start[0] + t_exit * direction[0], start[1] + t_exit * direction[1]


def render_svg(case, verdict: Verdict) -> str:
    poly = [v.to_float() for v in verdict.polytope_vertices]
    box = _viewport(poly)
    x0, y0, x1, y1 = box
    scale = WIDTH / (x1 - x0)
    height = (y1 - y0) * scale

    def sx(p):
        return _fmt((p[0] - x0) * scale), _fmt((y1 - p[1]) * scale)

    R = case.root_system
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(WIDTH)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(WIDTH)} {_fmt(height)}">',
        f"<title>{escape(f'Moment polytope of case {verdict.case_id}: {case.name}')}</title>",
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
        "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>",
    ]
    d = " ".join(f"{'M' if i == 0 else 'L'} {x} {y}" for i, (x, y) in enumerate(map(sx, poly))) + " Z"
    out.append(f'<path id="polytope" d="{d}" fill="#dde6f5" stroke="gray" stroke-width="1.5"/>')

    origin = sx((0.0, 0.0))
    for kind, vectors in (("simple-root", R.simple_roots), ("fundamental-weight", R.fundamental_weights)):
        for i, v in enumerate(vectors, start=1):
            tip = sx(v.to_float())
            out.append(
                f'<line class="{kind}" id="{kind}-{i}" x1="{origin[0]}" y1="{origin[1]}" '
                f'x2="{tip[0]}" y2="{tip[1]}" stroke="black" stroke-width="1.2" marker-end="url(#arrow)"/>'
            )

    apex = verdict.two_rho_theta.to_float()
    for i, g in enumerate(verdict.cone_generators, start=1):
        a, b = sx(apex), sx(_ray_end(apex, g.to_float(), box))
        out.append(
            f'<line class="cone-ray" id="cone-ray-{i}" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
            'stroke="red" stroke-width="1.5" stroke-dasharray="6 4"/>'
        )

    ax, ay = sx(apex)
    out.append(f'<rect id="two-rho-theta" x="{_fmt(float(ax) - 3)}" y="{_fmt(float(ay) - 3)}" '
               'width="6" height="6" fill="black"/>')
    bx, by = sx(verdict.barycenter.to_float())
    out.append(f'<circle id="barycenter" cx="{bx}" cy="{by}" r="4" fill="blue"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
