"""SVG drawing of a rank-2 face decomposition.

Exact data is converted to floats only here, when emitting coordinates.
"""

from __future__ import annotations

import colorsys
import math
from itertools import combinations
from xml.sax.saxutils import escape

from .fan import Face, enumerate_faces
from .repweights import RepData, maximal_admissible_subset
from .rootsys import enumerate_bases

SIZE = 640
CENTER = SIZE / 2
FAN_RADIUS = 230.0
RING_RADIUS = 280.0


class RenderError(ValueError):
    pass


def _embedding(rep: RepData):
    """Linear map sending simple-root-value coordinates to the plane isometrically.

    Points ``x`` with ``x_i = alpha_i(x)`` have Gram matrix ``B^{-1}`` where
    ``B`` is the Gram matrix of the simple roots.
    """
    b = [[float(v) for v in row] for row in rep.rs.gram]
    det = b[0][0] * b[1][1] - b[0][1] * b[1][0]
    g = [[b[1][1] / det, -b[0][1] / det], [-b[1][0] / det, b[0][0] / det]]
    l11 = math.sqrt(g[0][0])
    l21 = g[1][0] / l11
    l22 = math.sqrt(g[1][1] - l21 * l21)

    def embed(x):
        x0, x1 = float(x[0]), float(x[1])
        return (l11 * x0 + l21 * x1, l22 * x1)

    return embed


def _unit(v):
    n = math.hypot(*v)
    return (v[0] / n, v[1] / n)


def _screen(v, r):
    return (CENTER + r * v[0], CENTER - r * v[1])


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def _colour(i: int, n: int) -> str:
    r, g, b = colorsys.hsv_to_rgb((i / max(n, 1)) % 1.0, 0.55, 0.92)
    return f"#{int(r * 255):02x}{int(g * 255):02x}{int(b * 255):02x}"


def _angle(v) -> float:
    return math.atan2(v[1], v[0]) % (2 * math.pi)


def render_svg(rep: RepData, guard: int | None = None) -> str:
    rs = rep.rs
    if rs.rank != 2:
        raise RenderError(f"rendering needs rank 2, got rank {rs.rank}")
    fan = enumerate_faces(rep, guard)
    embed = _embedding(rep)

    # chamber faces grouped by the face containing them
    sectors: dict[int, list] = {c.index: [] for c in fan}
    rays: dict[int, list] = {c.index: [] for c in fan}
    seen_rays = set()
    for base in enumerate_bases(rs, guard):
        w = base.witness
        d0 = _unit(embed(w.act_point((0, 1))))
        d1 = _unit(embed(w.act_point((1, 0))))
        for k in range(3):
            for Z in combinations(range(2), k):
                Y = maximal_admissible_subset(rep, base, Z)
                c = fan.canonical(Face(base, Y))
                if k == 0:
                    sectors[c.index].append((d0, d1))
                elif k == 1:
                    d = d0 if Z == (0,) else d1
                    key = (round(d[0], 9), round(d[1], 9))
                    if key not in seen_rays:
                        seen_rays.add(key)
                        rays[c.index].append(d)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<title>{escape(rs.name)} faces for highest weight {escape(str(list(rep.lambda0)))}</title>',
        '<rect width="100%" height="100%" fill="white"/>',
    ]

    out.append('<g class="root-lines" stroke="#999" stroke-width="0.8" stroke-dasharray="4 3">')
    for a in rs.positive_roots:
        c = rs.to_root_coords(a)
        d = _unit(embed((c[1], -c[0])))
        p, q = _screen(d, FAN_RADIUS + 20), _screen((-d[0], -d[1]), FAN_RADIUS + 20)
        out.append(f'<line x1="{_fmt(p[0])}" y1="{_fmt(p[1])}" x2="{_fmt(q[0])}" y2="{_fmt(q[1])}"/>')
    out.append('</g>')

    n = len(fan)
    centres: dict[int, tuple[float, float]] = {}
    for c in fan:
        colour = _colour(c.index, n)
        label = f"F{c.index}"
        out.append(f'<g class="face" data-face-id="{c.id}" data-stratum-dim="{c.stratum_dim}">')
        dirs = []
        for d0, d1 in sectors[c.index]:
            a0, a1 = _screen(d0, FAN_RADIUS), _screen(d1, FAN_RADIUS)
            sweep = 0 if (d0[0] * d1[1] - d0[1] * d1[0]) > 0 else 1
            out.append(
                f'<path class="chamber" d="M {_fmt(CENTER)} {_fmt(CENTER)} L {_fmt(a0[0])} {_fmt(a0[1])} '
                f'A {_fmt(FAN_RADIUS)} {_fmt(FAN_RADIUS)} 0 0 {sweep} {_fmt(a1[0])} {_fmt(a1[1])} Z" '
                f'fill="{colour}" fill-opacity="0.55" stroke="white" stroke-width="0.5"/>')
            dirs.append(_unit((d0[0] + d1[0], d0[1] + d1[1])))
        for d in rays[c.index]:
            e = _screen(d, FAN_RADIUS)
            out.append(f'<line class="ray" x1="{_fmt(CENTER)}" y1="{_fmt(CENTER)}" '
                       f'x2="{_fmt(e[0])}" y2="{_fmt(e[1])}" stroke="{colour}" stroke-width="3"/>')
            dirs.append(d)
        if c.stratum_dim == rs.rank:
            out.append(f'<circle class="origin" cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" r="5" '
                       f'fill="{colour}" stroke="black"/>')
            lx, ly = CENTER + 8, CENTER - 8
        else:
            m = _unit((sum(d[0] for d in dirs), sum(d[1] for d in dirs)))
            centres[c.index] = m
            r = FAN_RADIUS * (0.62 if sectors[c.index] else 0.85)
            lx, ly = _screen(m, r)
        out.append(f'<text class="label" x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" '
                   f'font-family="sans-serif" text-anchor="middle">{label}</text>')
        out.append('</g>')

    # schematic boundary: one dot or arc per stratum, placed by the face's direction
    out.append(f'<g class="boundary"><circle cx="{_fmt(CENTER)}" cy="{_fmt(CENTER)}" '
               f'r="{_fmt(RING_RADIUS)}" fill="none" stroke="#ccc"/>')
    order = sorted(centres, key=lambda i: _angle(centres[i]))
    angles = {i: _angle(centres[i]) for i in order}
    for pos, i in enumerate(order):
        c = fan[i]
        colour = _colour(i, n)
        th = angles[i]
        if len(order) > 1:
            prev_th = angles[order[pos - 1]]
            next_th = angles[order[(pos + 1) % len(order)]]
            gap = min((th - prev_th) % (2 * math.pi), (next_th - th) % (2 * math.pi))
        else:
            gap = math.pi
        if c.stratum_dim == 0:
            p = _screen((math.cos(th), math.sin(th)), RING_RADIUS)
            out.append(f'<circle class="stratum" data-face-id="{c.id}" data-dim="0" cx="{_fmt(p[0])}" '
                       f'cy="{_fmt(p[1])}" r="4" fill="{colour}" stroke="black"/>')
        else:
            half = 0.42 * gap
            p = _screen((math.cos(th - half), math.sin(th - half)), RING_RADIUS)
            q = _screen((math.cos(th + half), math.sin(th + half)), RING_RADIUS)
            out.append(f'<path class="stratum" data-face-id="{c.id}" data-dim="{c.stratum_dim}" '
                       f'd="M {_fmt(p[0])} {_fmt(p[1])} A {_fmt(RING_RADIUS)} {_fmt(RING_RADIUS)} 0 0 0 '
                       f'{_fmt(q[0])} {_fmt(q[1])}" fill="none" stroke="{colour}" stroke-width="5"/>')
        t = _screen((math.cos(th), math.sin(th)), RING_RADIUS + 18)
        out.append(f'<text class="stratum-label" x="{_fmt(t[0])}" y="{_fmt(t[1])}" font-size="10" '
                   f'font-family="sans-serif" text-anchor="middle">A(F{i})</text>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
