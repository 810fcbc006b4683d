"""Best-effort SVG rendering via iterative barycentric placement.

The outer face is pinned to a convex polygon and every inner vertex is
repeatedly moved to the average of its neighbours (Tutte's method, by
fixed-point iteration).  Deterministic: fixed iteration count, no randomness.
Maps that are not 3-connected may render with overlaps; tiny maps fall back
to a labeled schematic circle.
"""

from __future__ import annotations

import math

from mapquot.maps import PlaneMap

ITERATIONS = 200
SIZE = 400.0
MARGIN = 30.0


def vertex_positions(m: PlaneMap) -> list[tuple[float, float]]:
    outer = [m.vertex_of[d] for d in m.faces[m.outer_face]]
    # keep first occurrences in contour order (outer contour may repeat
    # vertices on non-dissection inputs)
    ring = list(dict.fromkeys(outer))
    r = SIZE / 2 - MARGIN
    cx = cy = SIZE / 2
    pos = [(cx, cy)] * m.n_vertices
    fixed = [False] * m.n_vertices
    for i, v in enumerate(ring):
        angle = 2 * math.pi * i / len(ring)
        pos[v] = (cx + r * math.cos(angle), cy + r * math.sin(angle))
        fixed[v] = True
    for _ in range(ITERATIONS):
        nxt = list(pos)
        for v in range(m.n_vertices):
            if fixed[v]:
                continue
            nbs = m.neighbors(v)
            nxt[v] = (
                sum(pos[w][0] for w in nbs) / len(nbs),
                sum(pos[w][1] for w in nbs) / len(nbs),
            )
        pos = nxt
    return pos


def render_svg(m: PlaneMap) -> str:
    """SVG 1.1 drawing of the map (straight-line edges; loops as circles)."""
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SIZE:.0f}" height="{SIZE:.0f}" '
        f'viewBox="0 0 {SIZE:.0f} {SIZE:.0f}">'
    )
    body = []
    if m.n_vertices <= 2:
        body.append(
            f'<circle cx="{SIZE/2}" cy="{SIZE/2}" r="{SIZE/4}" '
            'fill="none" stroke="black"/>'
        )
        body.append(
            f'<text x="{SIZE/2}" y="{SIZE/2}" text-anchor="middle">'
            f"{m.n_vertices} vertices / {m.n_edges} edges</text>"
        )
        return head + "".join(body) + "</svg>"

    pos = vertex_positions(m)
    seen_pairs: dict[tuple[int, int], int] = {}
    for e in range(m.n_edges):
        u, v = m.edge_endpoints(e)
        x1, y1 = pos[u]
        x2, y2 = pos[v]
        if u == v:
            body.append(
                f'<circle cx="{x1 + 8:.2f}" cy="{y1:.2f}" r="8" '
                'fill="none" stroke="black"/>'
            )
            continue
        key = (u, v) if u < v else (v, u)
        bend = seen_pairs.get(key, 0)
        seen_pairs[key] = bend + 1
        if bend == 0:
            body.append(
                f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                'stroke="black"/>'
            )
        else:
            # parallel edges bow outwards so they stay distinguishable
            mx, my = (x1 + x2) / 2, (y1 + y2) / 2
            nx_, ny_ = -(y2 - y1), (x2 - x1)
            norm = math.hypot(nx_, ny_) or 1.0
            off = 10.0 * bend
            cx_, cy_ = mx + nx_ / norm * off, my + ny_ / norm * off
            body.append(
                f'<path d="M {x1:.2f} {y1:.2f} Q {cx_:.2f} {cy_:.2f} '
                f'{x2:.2f} {y2:.2f}" fill="none" stroke="black"/>'
            )
    for v in range(m.n_vertices):
        x, y = pos[v]
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
    return head + "".join(body) + "</svg>"
