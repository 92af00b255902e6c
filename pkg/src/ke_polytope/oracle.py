"""Floating-point Monte-Carlo cross-check of the exact DH integrals.

Points are drawn uniformly from the polygon's bounding box and rejected
by edge sign tests; nothing here touches the triangulation or the exact
integration code.

Random numbers come from a counter-based SplitMix64 stream: the k-th
64-bit output for ``seed`` is ``mix(seed + (k + 1) * 0x9E3779B97F4A7C15)``
with

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

all mod 2**64, and a uniform double is ``(z >> 11) * 2**-53``.  Sample
``i`` uses outputs ``2i`` (x) and ``2i + 1`` (y), so results do not
depend on how the samples are chunked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dhmeasure import moment_polygon
from .errors import DegenerateInput

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
MIN_SAMPLES = 1000
CHUNK = 1 << 18


@dataclass(frozen=True)
class McEstimate:
    value: float
    stderr: float
    samples: int
    seed: int


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the stream for ``seed`` as uint64."""
    k = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & 0xFFFFFFFFFFFFFFFF) + k * GOLDEN
    z = (z ^ (z >> np.uint64(30))) * MIX1
    z = (z ^ (z >> np.uint64(27))) * MIX2
    return z ^ (z >> np.uint64(31))


def uniforms(seed: int, start: int, count: int) -> np.ndarray:
    return (splitmix64(seed, start, count) >> np.uint64(11)).astype(np.float64) * 2.0**-53


def _float_density(case):
    roots = [a.to_float() for a in case.root_system.positive_roots]
    mult = case.multiplicity

    def f(x, y):
        out = np.ones_like(x)
        for ax, ay in roots:
            out *= ax * x + ay * y
        return out**mult

    return f


def _inside(vertices, x, y):
    mask = np.ones(x.shape, dtype=bool)
    n = len(vertices)
    for i in range(n):
        ax, ay = vertices[i]
        bx, by = vertices[(i + 1) % n]
        mask &= (bx - ax) * (y - ay) - (by - ay) * (x - ax) >= 0.0
    return mask


def _sample_sums(vertices, f, box, samples: int, seed: int):
    """Running sums of w, x*w, y*w and their second-order products."""
    x0, y0, x1, y1 = box
    sums = np.zeros(8)
    done = 0
    while done < samples:
        n = min(CHUNK, samples - done)
        u = uniforms(seed, 2 * done, 2 * n)
        x = x0 + (x1 - x0) * u[0::2]
        y = y0 + (y1 - y0) * u[1::2]
        w = np.where(_inside(vertices, x, y), f(x, y), 0.0)
        xw, yw = x * w, y * w
        sums += [w.sum(), xw.sum(), yw.sum(), (w * w).sum(),
                 (xw * xw).sum(), (yw * yw).sum(), (xw * w).sum(), (yw * w).sum()]
        done += n
    return sums


def mc_polygon_moments(vertices, f, samples: int, seed: int):
    """Estimate ``int f``, and ``int x f / int f``, ``int y f / int f`` over a CCW polygon.

    ``vertices`` are float pairs; ``f`` maps numpy arrays ``x, y`` to weights.
    """
    if samples < MIN_SAMPLES:
        raise ValueError(f"samples must be >= {MIN_SAMPLES}")
    xs = [p[0] for p in vertices]
    ys = [p[1] for p in vertices]
    box = (min(xs), min(ys), max(xs), max(ys))
    area = (box[2] - box[0]) * (box[3] - box[1])
    if len(vertices) < 3 or not area > 0.0:
        raise DegenerateInput("polygon has an empty bounding box")

    n = samples
    sw, sxw, syw, sww, sxx, syy, sxw_w, syw_w = _sample_sums(vertices, f, box, n, seed)
    mean_w = sw / n
    var_w = max(sww - n * mean_w**2, 0.0) / (n - 1)
    vol = McEstimate(float(area * mean_w), float(area * np.sqrt(var_w / n)), n, seed)

    def ratio(s_num, s_numsq, s_cross):
        # delta method for sum(x w) / sum(w)
        r = s_num / sw
        resid_sq = s_numsq - 2 * r * s_cross + r * r * sww
        var = max(resid_sq, 0.0) / (n - 1)
        return McEstimate(float(r), float(np.sqrt(var / n) / abs(mean_w)), n, seed)

    return vol, ratio(sxw, sxx, sxw_w), ratio(syw, syy, syw_w)


def mc_moments(case, samples: int, seed: int):
    """Volume and both barycenter coordinates of a case from one sample stream."""
    vertices = [v.to_float() for v in moment_polygon(case).vertices]
    return mc_polygon_moments(vertices, _float_density(case), samples, seed)


def mc_volume(case, samples: int, seed: int) -> McEstimate:
    return mc_moments(case, samples, seed)[0]


def mc_barycenter(case, samples: int, seed: int) -> tuple[McEstimate, McEstimate]:
    _, bx, by = mc_moments(case, samples, seed)
    return bx, by
