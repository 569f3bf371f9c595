"""Certified generators for the concrete example families.

Every generator certifies its output exactly (n-tameness plus the
maximality certificate) before returning it; no unverified region ever
escapes.  Exact symmetric coordinates with odd rotational symmetry do
not exist over the rationals, so the layouts here are near-symmetric
rational configurations; the certificates carry the burden of proof.
"""

import itertools
from fractions import Fraction

from tamesphere import _lp, ops
from tamesphere.cones import Cone, minkowski_sum
from tamesphere.errors import InputError, InternalInvariantError
from tamesphere.exact_core import Ray
from tamesphere.regions import Region
from tamesphere.tameness import is_m_tame, maxtame_certificate


# -- sign-pattern shorthand ---------------------------------------------


def pattern_cone(normals, pattern):
    """Closed cone for a sign word over the hemisphere normals.

    pattern is a string over '+', '-', '*' ('*' or '~' = unconstrained).
    """
    if len(pattern) != len(normals):
        raise InputError("pattern length must match the number of normals")
    rows = []
    for ch, h in zip(pattern, normals):
        if ch == "+":
            rows.append(tuple(h))
        elif ch == "-":
            rows.append(ops.vneg(tuple(h)))
        elif ch in "*~":
            continue
        else:
            raise InputError(f"bad pattern character {ch!r}")
    n = len(normals[0])
    return Cone.from_normals(n, rows)


def hull_of_patterns(normals, patterns):
    """Minkowski sum of the pattern cones (the spherical hull of the
    union of the corresponding closed regions)."""
    cones = [pattern_cone(normals, p) for p in patterns]
    s = cones[0]
    for c in cones[1:]:
        s = minkowski_sum(s, c)
    return s


# -- single-minus construction ------------------------------------------


def _separating_normals(points):
    """h_i with h_i . v_j > 0 for j != i and h_i . v_i < 0."""
    n = len(points[0])
    out = []
    for i in range(len(points)):
        rows = [tuple(p) for j, p in enumerate(points) if j != i]
        rows.append(ops.vneg(tuple(points[i])))
        v = _lp.strict_feasible(rows, [], n)
        if v is None:
            raise InternalInvariantError(
                f"no hemisphere separates point {i} from the rest"
            )
        out.append(Ray.from_exact(tuple(v)).coords)
    return out


def single_minus_region(points, label=None):
    """Union of the cells where exactly one separating normal is negative.

    points must have the origin interior to their Euclidean hull; the
    i-th cell contains the i-th point.
    """
    hs = _separating_normals(points)
    n = len(points[0])
    cones = []
    for i in range(len(hs)):
        rows = [ops.vneg(hs[i])] + [hs[j] for j in range(len(hs)) if j != i]
        cones.append(Cone.from_normals(n, rows))
    return Region.from_cones(n, cones, label=label), hs


def _certify(region, label):
    verdict = is_m_tame(region, region.n)
    if not verdict.tame:
        raise InternalInvariantError(
            f"{label}: generated region is not tame: {verdict.witness.serialize()}"
        )
    certified, report = maxtame_certificate(region, _verdict=verdict)
    if not certified:
        raise InternalInvariantError(f"{label}: certificate failed: {report}")
    return region


def simplex_family(n):
    """The (n+1)-component maxtame subset of S^{n-1} built from a
    simplex with the origin interior: cells with single-minus sign
    patterns over the separating hemispheres."""
    if not 2 <= n <= 5:
        raise InputError("simplex family implemented for 2 <= n <= 5")
    points = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    points.append((-1,) * n)
    region, _ = single_minus_region(points, label=f"simplex-{n}")
    if len(region.cells) != n + 1:
        raise InternalInvariantError("simplex family lost a cell")
    return _certify(region, f"simplex_family({n})")


def simplex_normals(n):
    points = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    points.append((-1,) * n)
    return _separating_normals(points)


# -- rational circle directions -----------------------------------------


def unit_circle_points(m, denominator_bound):
    """m near-evenly spaced exact rational points on the unit circle,
    scaled to integer vectors (x, y) with x^2 + y^2 = norm^2."""
    import math

    out = []
    for i in range(m):
        theta = 2 * math.pi * i / m
        t = Fraction(math.tan(theta / 2)).limit_denominator(denominator_bound)
        p, q = t.numerator, t.denominator
        out.append((q * q - p * p, 2 * p * q, p * p + q * q))
    return out  # (x, y, norm)


def family_a(k, denominator_bound=64, heights=None):
    """Near-symmetric member of the polygon-plus-triangles family: one
    (2k+1)-gon around the axis together with 2k+1 triangles."""
    if k < 1:
        raise InputError("k must be at least 1")
    m = 2 * k + 1
    heights = heights if heights is not None else [
        (1, 1), (1, 2), (2, 3), (1, 3), (3, 4), (2, 1),
    ]
    d = denominator_bound
    last = None
    for attempt in range(8):
        circ = unit_circle_points(m, d)
        for num, den in heights:
            points = [(0, 0, 1)]
            for x, y, norm in circ:
                points.append((den * x, den * y, -num * norm))
            try:
                region, _ = single_minus_region(points, label=f"family-a-{k}")
                if len(region.cells) != m + 1:
                    continue
                return _certify(region, f"family_a({k})")
            except InternalInvariantError as e:
                last = e
        d *= 2
    raise InternalInvariantError(
        f"family_a({k}) failed to certify within the retry budget: {last}"
    )


# Triangle-family layouts around a vertical axis.  Each entry is the
# fixed point of the completion pipeline applied to a seed of 2k+2
# disjoint triangles stacked in k+1 longitude slots; the coordinates
# are exact and the generator re-certifies them on every call.  The
# slot corner latitudes obey exact ratio conditions (see the k=2 lats
# below) so that the inter-slot wedge hulls close up the equator.
_B_LAYOUTS = {
    2: [
        [(-7344453, 0, -2447116), (-5507079, 3177720, -1223558),
         (-3669705, 6355440, -2447116)],
        [(-7344453, 0, 2447116), (-5507079, 3177720, 1223558),
         (-3669705, 6355440, 2447116)],
        [(-5043, -12710880, -2447116), (-1353, -2340, -901),
         (3669705, -6355440, -2447116)],
        [(-5043, -12710880, 2447116), (-1353, -2340, 901),
         (3669705, -6355440, 2447116)],
        [(1353, 2340, -901), (7344453, 0, -2447116),
         (11019201, 6355440, -2447116)],
        [(1353, 2340, 901), (7344453, 0, 2447116),
         (11019201, 6355440, 2447116)],
    ],
}


def band_seed(k, denominator_bound=64, corner_lat=Fraction(1, 3),
              apex_lat=Fraction(3, 8)):
    """Seed layout for the stacked triangle family: k+1 longitude slots
    of width 180/(k+1) degrees, alternate slots shifted to the opposite
    half-circle, each slot holding a north triangle and its mirror.

    Exposed for experiments; family_b itself returns the completed
    maximal layouts."""
    import math

    slots = k + 1
    width = Fraction(180, slots)
    tris = []
    for j in range(slots):
        lo = j * width + (180 if j % 2 else 0)
        lons = [float(lo), float(lo + width), float(lo + width / 2)]
        cps = []
        for deg in lons:
            t = Fraction(math.tan(math.radians(deg % 360.0 % 180.0) / 2))
            t = t.limit_denominator(denominator_bound)
            p, q = t.numerator, t.denominator
            x, y = q * q - p * p, 2 * p * q
            if deg % 360.0 >= 180.0:
                x, y = -x, -y
            cps.append((x, y, p * p + q * q))
        (wx, wy, wn), (ex, ey, en), (ax, ay, an) = cps
        north = [
            (wx * corner_lat.denominator, wy * corner_lat.denominator,
             corner_lat.numerator * wn),
            (ex * corner_lat.denominator, ey * corner_lat.denominator,
             corner_lat.numerator * en),
            (ax * apex_lat.denominator, ay * apex_lat.denominator,
             apex_lat.numerator * an),
        ]
        tris.append(north)
        tris.append([(x, y, -z) for x, y, z in north])
    return Region.from_cones(3, [Cone.from_rays(3, t) for t in tris],
                             label=f"band-seed-{k}")


def family_b(k, denominator_bound=64):
    """Member of the stacked triangle family: 2k+2 triangles around a
    vertical axis in a (k+1)-fold slot layout.

    For k >= 2 the poles are isolated addable points, together with the
    equator points on the slot-corner meridians where the inter-slot
    hulls meet; the certificate reports all of them."""
    if k < 1:
        raise InputError("k must be at least 1")
    if k == 1:
        # Two-fold layout: the four triangles around a tetrahedral point
        # set drawn with a horizontal edge axis.  With only two slots
        # the opposite north cells cover both poles, so the addable set
        # has no isolated points.
        points = [(1, 0, 1), (-1, 0, 1), (0, 1, -1), (0, -1, -1)]
        region, _ = single_minus_region(points, label="family-b-1")
        if len(region.cells) != 4:
            raise InternalInvariantError("family_b(1) lost a cell")
        return _certify(region, "family_b(1)")
    if k not in _B_LAYOUTS:
        raise InputError(f"family_b({k}) layout not available")
    cones = [Cone.from_rays(3, rays) for rays in _B_LAYOUTS[k]]
    region = Region.from_cones(3, cones, label=f"family-b-{k}")
    if len(region.cells) != 2 * k + 2:
        raise InternalInvariantError(f"family_b({k}) lost a cell")
    return _certify(region, f"family_b({k})")


def perturbed_family_b_7():
    """Perturbation of family_b(2) with seven components: pulling one
    north corner off its meridian removes one of the three polar fan
    contacts, which opens a seventh addable region near the north pole."""
    raise NotImplementedError


# -- S^1 ------------------------------------------------------------------


def s1_maxtame(pairs, parity=0):
    """Alternating union of k open arcs on S^1 for k distinct antipodal
    boundary pairs; k must be odd or no alternation is antipodally
    consistent."""
    rays = [p if isinstance(p, Ray) else Ray.from_exact(tuple(p)) for p in pairs]
    if len(rays) % 2 == 0:
        raise InputError(
            "an even number of boundary pairs admits no tame alternation: "
            "the antipodal map would fix the arc selection"
        )
    if parity not in (0, 1):
        raise InputError("parity must be 0 or 1")
    pts = set()
    for r in rays:
        if len(r.coords) != 2:
            raise InputError("boundary points must lie on S^1")
        pts.add(r.coords)
        pts.add(ops.vneg(r.coords))
    if len(pts) != 2 * len(rays):
        raise InputError("boundary pairs must be pairwise distinct and non-antipodal")
    import functools

    order = sorted(pts, key=functools.cmp_to_key(ops.angle_cmp2))
    cones = []
    for idx in range(parity, len(order), 2):
        a = order[idx]
        b = order[(idx + 1) % len(order)]
        if a == ops.vneg(b):
            # half-circle arc (k = 1): one bounding line
            normal = (-a[1], a[0])
            cones.append(Cone.from_normals(2, [normal]))
        else:
            cones.append(Cone.from_rays(2, [a, b]))
    region = Region.from_cones(2, cones, label=f"s1-{len(rays)}-arcs")
    if len(region.cells) != len(rays):
        raise InternalInvariantError("arc alternation produced a wrong cell count")
    return _certify(region, f"s1_maxtame(k={len(rays)})")


def default_s1_pairs(k):
    """k rational points on S^1 in distinct, pairwise non-antipodal
    directions, suitable as boundary pairs for s1_maxtame."""
    pts = []
    for j in range(k):
        # Pythagorean parametrization: (q^2-p^2, 2pq) with p = j+1, q = 2k+3
        p, q = j + 1, 2 * k + 3
        pts.append((q * q - p * p, 2 * p * q))
    return pts
