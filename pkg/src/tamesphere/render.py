"""Deterministic SVG rendering in stereographic projection.

Projection is from the south pole onto the equatorial plane, so the
image of a great circle with normal (a, b, c) is the circle with center
(a/c, b/c) and squared radius (a^2 + b^2)/c^2 + 1, or the line
a*u + b*v = 0 when c = 0.  Screen numbers are decimal approximations at
9 significant digits; the exact rational source is embedded as a
metadata comment, so the figure is a presentation artifact while the
data stays exact.
"""

import math
from dataclasses import dataclass

from tamesphere import ops
from tamesphere.errors import InputError, UnsupportedDimensionError


@dataclass(frozen=True)
class RenderSpec:
    width: int = 640
    height: int = 640
    extent: float = 2.6  # world half-width of the view
    fill: str = "#7a9cc6"
    antipode_fill: str = "#d9a0a0"
    stroke: str = "#333333"
    show_antipode: bool = False


def _fmt(x):
    if x == 0:
        x = 0.0  # avoid "-0"
    return f"{x:.9g}"


def _project(v):
    x, y, z = v
    ln = math.sqrt(x * x + y * y + z * z)
    d = ln + z
    if d <= 0:
        return None  # south pole or numerically at it
    return (x / d, y / d)


class _Screen:
    def __init__(self, spec):
        self.s = min(spec.width, spec.height) / (2.0 * spec.extent)
        self.cx = spec.width / 2.0
        self.cy = spec.height / 2.0

    def pt(self, uv):
        return (self.cx + uv[0] * self.s, self.cy - uv[1] * self.s)

    def r(self, world_r):
        return world_r * self.s


def _circle_image(normal):
    """('circle', center, radius) or ('line', direction) in world coords."""
    a, b, c = normal
    if c == 0:
        return ("line", (a, b))
    cu, cv = a / c, b / c
    return ("circle", (cu, cv), math.sqrt(cu * cu + cv * cv + 1.0))


def _ray_cycle(cone):
    """Extreme rays in boundary order (each facet tight on two rays)."""
    rays = list(cone.rays)
    if len(rays) < 3:
        return None
    edges = {}
    for a in cone.normals:
        tight = [i for i, r in enumerate(rays) if ops.vdot(a, r) == 0]
        if len(tight) != 2:
            return None
        edges.setdefault(tight[0], []).append((tight[1], a))
        edges.setdefault(tight[1], []).append((tight[0], a))
    if any(len(v) != 2 for v in edges.values()):
        return None
    cyc = [0]
    facets = []
    prev = None
    while True:
        nxts = [e for e in edges[cyc[-1]] if e[0] != prev]
        prev = cyc[-1]
        nxt, facet = nxts[0]
        facets.append(facet)
        if nxt == cyc[0]:
            break
        cyc.append(nxt)
    if len(cyc) != len(rays):
        return None
    return [rays[i] for i in cyc], facets


def _arc_command(scr, P, Q, M, facet):
    """SVG path segment for the projected geodesic edge P->Q with
    interior sample M, lying on the image of the facet's great circle."""
    img = _circle_image(facet)
    p, q = scr.pt(P), scr.pt(Q)
    if img[0] == "line":
        return f"L {_fmt(q[0])} {_fmt(q[1])}"
    c = scr.pt(img[1])
    r = scr.r(img[2])
    m = scr.pt(M)
    ap = math.atan2(p[1] - c[1], p[0] - c[0])
    am = math.atan2(m[1] - c[1], m[0] - c[0])
    aq = math.atan2(q[1] - c[1], q[0] - c[0])
    dm = (am - ap) % (2 * math.pi)
    dq = (aq - ap) % (2 * math.pi)
    if dm < dq:
        sweep, span = 1, dq
    else:
        sweep, span = 0, 2 * math.pi - dq
    large = 1 if span > math.pi else 0
    return f"A {_fmt(r)} {_fmt(r)} 0 {large} {sweep} {_fmt(q[0])} {_fmt(q[1])}"


def _cell_path(scr, cone):
    ordered = _ray_cycle(cone)
    if ordered is None:
        return None
    cyc, facets = ordered
    pts = [_project(r) for r in cyc]
    if any(p is None for p in pts):
        return None
    south = (0,) * (len(cyc[0]) - 1) + (-1,)
    if cone.contains_closed(south):
        return None  # projection of this cell is unbounded
    start = scr.pt(pts[0])
    segs = [f"M {_fmt(start[0])} {_fmt(start[1])}"]
    for i in range(len(cyc)):
        j = (i + 1) % len(cyc)
        mid = ops.vadd(
            ops.vscale(_norm_scale(cyc[j]), cyc[i]),
            ops.vscale(_norm_scale(cyc[i]), cyc[j]),
        )
        segs.append(_arc_command(scr, pts[i], pts[j], _project(mid), facets[i]))
    segs.append("Z")
    return " ".join(segs)


def _norm_scale(v):
    # integer proxy for 1/|v| pairing: scale each endpoint by the other's
    # rounded norm so the midpoint stays near the geodesic midpoint
    return max(1, round(math.sqrt(ops.vdot(v, v))))


def _svg_open(spec, lines):
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" '
        f'height="{spec.height}" viewBox="0 0 {spec.width} {spec.height}">'
    )
    lines.append(f'<rect width="{spec.width}" height="{spec.height}" fill="white"/>')


def _metadata_comment(text):
    return "<!-- exact-source\n" + text.replace("--", "- -") + "\n-->"


def render_region_svg(region, spec=None):
    """Stereographic figure of an S^2 region (or circle diagram on S^1)."""
    spec = spec or RenderSpec()
    if region.n == 2:
        return _render_s1(region, spec)
    if region.n != 3:
        raise UnsupportedDimensionError("rendering supports S^1 and S^2 only")
    scr = _Screen(spec)
    lines = []
    _svg_open(spec, lines)
    lines.append(_metadata_comment(region.dumps()))
    shaded = [(region, spec.fill)]
    if spec.show_antipode:
        shaded.append((region.antipode(), spec.antipode_fill))
    for reg, color in shaded:
        for cell in reg.cells:
            path = _cell_path(scr, cell.cone)
            if path is None:
                lines.append(f"<!-- cell skipped (unbounded or degenerate image) -->")
                continue
            lines.append(f'<path d="{path}" fill="{color}" fill-opacity="0.75" '
                         f'stroke="none"/>')
    for nrm in region.planes():
        img = _circle_image(nrm)
        if img[0] == "line":
            a, b = img[1]
            ln = math.sqrt(a * a + b * b)
            du, dv = -b / ln, a / ln
            ext = spec.extent * 2
            p1 = scr.pt((du * ext, dv * ext))
            p2 = scr.pt((-du * ext, -dv * ext))
            lines.append(
                f'<line x1="{_fmt(p1[0])}" y1="{_fmt(p1[1])}" x2="{_fmt(p2[0])}" '
                f'y2="{_fmt(p2[1])}" stroke="{spec.stroke}" stroke-width="1" '
                f'fill="none"/>'
            )
        else:
            c = scr.pt(img[1])
            r = scr.r(img[2])
            lines.append(
                f'<circle cx="{_fmt(c[0])}" cy="{_fmt(c[1])}" r="{_fmt(r)}" '
                f'stroke="{spec.stroke}" stroke-width="1" fill="none"/>'
            )
    # the equator, for orientation
    c = scr.pt((0.0, 0.0))
    lines.append(
        f'<circle cx="{_fmt(c[0])}" cy="{_fmt(c[1])}" r="{_fmt(scr.r(1.0))}" '
        f'stroke="#bbbbbb" stroke-width="0.5" stroke-dasharray="4 3" fill="none"/>'
    )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _render_s1(region, spec):
    scr = _Screen(spec)
    R = scr.r(1.0)
    c = scr.pt((0.0, 0.0))
    lines = []
    _svg_open(spec, lines)
    lines.append(_metadata_comment(region.dumps()))
    lines.append(
        f'<circle cx="{_fmt(c[0])}" cy="{_fmt(c[1])}" r="{_fmt(R)}" '
        f'stroke="{spec.stroke}" stroke-width="1" fill="none"/>'
    )
    boundary = set()
    for cell in region.cells:
        rays = list(cell.cone.rays)
        if len(rays) != 2:
            lines.append("<!-- cell skipped (not an arc) -->")
            continue
        angs = []
        for r in rays:
            boundary.add(r)
            angs.append(math.atan2(r[1], r[0]))
        a0, a1 = angs
        if (a1 - a0) % (2 * math.pi) > math.pi:
            a0, a1 = a1, a0
        span = (a1 - a0) % (2 * math.pi)
        p = scr.pt((math.cos(a0), math.sin(a0)))
        q = scr.pt((math.cos(a1), math.sin(a1)))
        large = 1 if span > math.pi else 0
        lines.append(
            f'<path d="M {_fmt(p[0])} {_fmt(p[1])} A {_fmt(R)} {_fmt(R)} 0 '
            f'{large} 0 {_fmt(q[0])} {_fmt(q[1])}" stroke="{spec.fill}" '
            f'stroke-width="6" fill="none"/>'
        )
    for b in sorted(boundary):
        ln = math.sqrt(b[0] * b[0] + b[1] * b[1])
        p = scr.pt((b[0] / ln, b[1] / ln))
        lines.append(
            f'<circle cx="{_fmt(p[0])}" cy="{_fmt(p[1])}" r="3" fill="{spec.stroke}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
