"""Balancedness, m-tameness, hulls, addable sets, and the maximality
certificate for open polyhedral regions on spheres.

Definitions in force:
- a finite set of sphere points is balanced when its Euclidean convex
  hull contains the origin;
- a set is m-tame when no subset of at most m points is balanced,
  equivalently every such subset lies in an open hemisphere;
- the addable set of an open n-tame U is U+ = S^{n-1} minus -U[n-1],
  where U[m] is the union of spherical hulls of m-point subsets;
- the maximality certificate checks interior(U+) = U, a sufficient
  condition for U to be maximal among open n-tame sets.

All decisions reduce to exact rational linear programs over cell
generator cones.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from tamesphere import _lp, ops
from tamesphere.cones import Cone, WholeSphere, minkowski_sum
from tamesphere.errors import (
    InputError,
    InternalInvariantError,
    NotTameError,
)
from tamesphere.exact_core import Ray
from tamesphere.regions import Region, convexify


@dataclass(frozen=True)
class BalancedWitness:
    """Distinct sphere points with positive masses summing to zero."""

    points: tuple  # of Ray
    coefficients: tuple  # of positive Fraction, same length

    def verify(self):
        if not self.points or len(self.points) != len(self.coefficients):
            return False
        if len({p.coords for p in self.points}) != len(self.points):
            return False
        if any(c <= 0 for c in self.coefficients):
            return False
        n = len(self.points[0].coords)
        total = [Fraction(0)] * n
        for p, c in zip(self.points, self.coefficients):
            for i, x in enumerate(p.coords):
                total[i] += c * x
        return all(t == 0 for t in total)

    def serialize(self):
        return {
            "points": [p.serialize() for p in self.points],
            "coefficients": [str(c) for c in self.coefficients],
        }


@dataclass(frozen=True)
class TamenessVerdict:
    tame: bool
    m: int
    witness: BalancedWitness | None = None
    hemispheres: dict | None = None  # cell-subset -> Ray, when tame


def _as_rays(points):
    out = []
    for p in points:
        out.append(p if isinstance(p, Ray) else Ray.from_exact(tuple(p)))
    return out


def _make_witness(raw_points):
    """Canonicalize exact vectors with implicit weight 1 each into a
    BalancedWitness, merging coincident directions."""
    acc = {}
    order = []
    for v in raw_points:
        r = Ray.from_exact(tuple(v))
        scale = None
        for a, b in zip(v, r.coords):
            if b:
                scale = Fraction(a) / b
                break
        if r.coords not in acc:
            acc[r.coords] = Fraction(0)
            order.append(r)
        acc[r.coords] += scale
    pts = tuple(order)
    w = BalancedWitness(pts, tuple(acc[p.coords] for p in pts))
    if not w.verify():
        raise InternalInvariantError(f"constructed witness fails verification: {w}")
    return w


def is_balanced(points):
    """BalancedWitness iff the convex hull of the points contains the
    origin; None otherwise.  Exact."""
    rays = _as_rays(points)
    if not rays:
        return None
    vecs = [r.coords for r in rays]
    mu = _lp.nonneg_nullcomb(vecs, range(len(vecs)))
    if mu is None:
        return None
    support = [(rays[i], Fraction(mu[i])) for i in range(len(rays)) if mu[i]]
    pts, coeffs = zip(*support)
    # merge repeated input directions
    return _make_witness(
        [tuple(c * x for x in p.coords) for p, c in zip(pts, coeffs)]
    )


def hemisphere_witness(points):
    """Ray v with v.x > 0 for every input, or None when balanced."""
    rays = _as_rays(points)
    if not rays:
        return None
    n = len(rays[0].coords)
    v = _lp.strict_feasible([r.coords for r in rays], [], n)
    if v is None:
        return None
    return Ray.from_exact(tuple(v))


class HemisphereCache:
    """Hemisphere witnesses found so far; screens subsets before LPs."""

    def __init__(self):
        self.rays = []

    def covers(self, vectors):
        for v in self.rays:
            if all(ops.vdot(v, g) > 0 for g in vectors):
                return v
        return None

    def add(self, v):
        self.rays.append(tuple(v))


def _cell_gen_lists(region):
    return [c.cone.generators() for c in region.cells]


def _relint_transversal(cones, n):
    """Points x_i interior to each cone summing to zero, or None.

    Joint strict LP over stacked coordinates: cell membership is strict
    on every facet normal (and tight on span equations), so a solution
    is a balanced set meeting every cell in its relative interior.
    """
    s = len(cones)
    zero = Fraction(0)
    strict_rows = []
    weak_rows = []
    for pos, c in enumerate(cones):
        for a in c.normals:
            row = [zero] * (s * n)
            row[pos * n : (pos + 1) * n] = [Fraction(x) for x in a]
            strict_rows.append(row)
        for e in c.eqs:
            row = [zero] * (s * n)
            row[pos * n : (pos + 1) * n] = [Fraction(x) for x in e]
            weak_rows.append(row)
            weak_rows.append([-x for x in row])
    for d in range(n):
        row = [zero] * (s * n)
        for pos in range(s):
            row[pos * n + d] = Fraction(1)
        weak_rows.append(row)
        weak_rows.append([-x for x in row])
    sol = _lp.strict_feasible(strict_rows, weak_rows, s * n)
    if sol is None:
        return None
    return [tuple(sol[pos * n : (pos + 1) * n]) for pos in range(s)]


def is_m_tame(region, m, _cache=None):
    """m-tameness of an open region, decided per distinct-cell subset.

    A balanced set of at most m points of the region distributes over at
    most m distinct open cells, and points sharing a cell merge (open
    convex cones are closed under addition), so it suffices to decide,
    for each subset of at most m cells, whether a balanced transversal
    of the cells' relative interiors exists.  Cells that only balance
    through boundary points (touching corners, antipodal corner pairs)
    do not obstruct tameness of the open region.
    """
    if m < 1:
        raise InputError("m must be at least 1")
    if any(not c.cone.normals for c in region.cells):
        # a cell with empty hrep is the whole sphere
        e1 = Ray((1,) + (0,) * (region.n - 1))
        return TamenessVerdict(False, m, witness=_make_witness([e1.coords, ops.vneg(e1.coords)]))
    work = region
    if len(region.cells) > 1:
        # merge facet-adjacent cells first so every in-region point is
        # interior to some work cell
        work = convexify(region)
    gens = _cell_gen_lists(work)
    cache = _cache if _cache is not None else HemisphereCache()
    table = {}
    for size in range(2, m + 1):
        for idx in itertools.combinations(range(len(gens)), size):
            flat = [g for i in idx for g in gens[i]]
            v = cache.covers(flat)
            if v is not None:
                table[idx] = Ray.from_exact(v)
                continue
            v = _lp.strict_feasible(flat, [], work.n)
            if v is not None:
                cache.add(v)
                table[idx] = Ray.from_exact(tuple(v))
                continue
            pts = _relint_transversal([work.cells[i].cone for i in idx], work.n)
            if pts is not None:
                return TamenessVerdict(False, m, witness=_make_witness(pts))
            # generators balance only through cell boundaries: the open
            # subset is fine; fall through without a hemisphere
            table[idx] = None
    return TamenessVerdict(True, m, hemispheres=table)


def closed_tame_witness(cones, m, n):
    """Balanced <=m-point witness inside the union of the closed cones'
    sphere traces, or None.  Cells may be lower-dimensional."""
    if m < 1:
        raise InputError("m must be at least 1")
    cs = list(cones)
    if m >= 2:
        for c in cs:
            if c.lin:
                l = c.lin[0]
                return _make_witness([l, ops.vneg(l)])
    gens = [c.generators() for c in cs]
    for size in range(2, m + 1):
        for idx in itertools.combinations(range(len(gens)), size):
            flat = [tuple(Fraction(x) for x in g) for i in idx for g in gens[i]]
            if _lp.strict_feasible(flat, [], n) is not None:
                continue
            rows = []
            for d in range(n):
                rows.append(([g[d] for g in flat], Fraction(0), "eq"))
            pos = 0
            for i in idx:
                k = len(gens[i])
                coeffs = [Fraction(0)] * len(flat)
                for j in range(pos, pos + k):
                    coeffs[j] = Fraction(1)
                rows.append((coeffs, Fraction(1), "ge"))
                pos += k
            try:
                lam, _ = _lp.solve_lp([Fraction(0)] * len(flat), rows)
            except _lp.Infeasible:
                continue
            raw = []
            pos = 0
            for i in idx:
                k = len(gens[i])
                x = tuple(
                    sum(lam[j] * flat[j][d] for j in range(pos, pos + k))
                    for d in range(n)
                )
                pos += k
                if any(x):
                    raw.append(x)
            return _make_witness(raw)
    return None


def m_hull(region, m):
    """Closed-cone list for the m-hull, or WholeSphere.

    The m-hull U[m] is the union over subsets of at most m cells of the
    sphere traces of the summed cell cones; a sum with lineality makes
    the hull the whole sphere by the hull convention.
    """
    if m < 1:
        raise InputError("m must be at least 1")
    cones = [c.cone for c in region.cells]
    out = {}
    for size in range(1, m + 1):
        for idx in itertools.combinations(range(len(cones)), size):
            s = cones[idx[0]]
            for i in idx[1:]:
                s = minkowski_sum(s, cones[i])
            # whole sphere exactly when the open hull (the relative
            # interior of the sum) contains the origin, i.e. the sum is
            # all of R^n; mere lineality (a halfspace sum) is not enough
            if not s.normals and not s.eqs:
                return WholeSphere(region.n)
            out[s.key()] = s
    return tuple(out[k] for k in sorted(out))


@dataclass(frozen=True)
class AddableSet:
    open_part: Region
    isolated_points: tuple  # of Ray
    boundary_note: str
    covered: Region  # interior of the antipodal (n-1)-hull, for reports


def _generic_point(n, normals):
    for r in itertools.count(1):
        for p in itertools.product(range(-r, r + 1), repeat=n):
            if not any(p):
                continue
            if all(ops.vdot(a, p) != 0 for a in normals):
                return p


def _sign_cells(n, planes):
    """Full-dimensional cells of the central hyperplane arrangement,
    as (sign vector, cone) pairs.  Generic-dimension twin of the S^2
    arrangement's face BFS."""
    planes = sorted(set(planes))
    norm_to_idx = {}
    for i, a in enumerate(planes):
        norm_to_idx[a] = (i, 1)
        norm_to_idx[ops.vneg(a)] = (i, -1)
    p0 = _generic_point(n, planes)
    s0 = tuple(ops.dot_sign(a, p0) for a in planes)
    cells = {}
    queue = [s0]
    while queue:
        s = queue.pop()
        if s in cells:
            continue
        cone = Cone.from_normals(n, [ops.vscale(t, a) for a, t in zip(planes, s)])
        cells[s] = cone
        for a in cone.normals:
            i, _ = norm_to_idx[a]
            t = list(s)
            t[i] = -t[i]
            t = tuple(t)
            if t not in cells:
                queue.append(t)
    return planes, sorted(cells.items())


def _hull_planes(hulls):
    planes = set()
    for h in hulls:
        for a in h.normals:
            planes.add(Ray(a).unoriented().coords)
        for e in h.eqs:
            planes.add(Ray(e).unoriented().coords)
    return planes


def addable_set(region, _verdict=None):
    """The addable set of an open n-tame region.

    open_part is the interior of the complement of the antipodal
    (n-1)-hull; for n = 3 isolated addable vertices are reported, and
    addable arcs not adjoining any addable 2-cell go in boundary_note.
    """
    n = region.n
    verdict = _verdict if _verdict is not None else is_m_tame(region, n)
    if not verdict.tame:
        raise NotTameError("region is not n-tame", witness=verdict.witness)
    hulls = m_hull(region, n - 1)
    if isinstance(hulls, WholeSphere):
        raise InternalInvariantError(
            "hull of an n-tame region reached the whole sphere"
        )
    neg = [h.negate() for h in hulls]
    planes = _hull_planes(neg)
    if n == 3:
        from tamesphere.arrangements import Arrangement

        arr = Arrangement(sorted(planes))
        covered = {}
        for f in arr.faces:
            covered[f.signs] = any(h.contains_interior(f.interior) for h in neg)
        open_cones = [f.cone for f in arr.faces if not covered[f.signs]]
        open_part = Region.from_cones(3, open_cones, label=None)
        uncovered_closures = [f.cone for f in arr.faces if not covered[f.signs]]

        def in_open_closure(x):
            return any(c.contains_closed(x) for c in uncovered_closures)

        def hull_hits_relint(x):
            return any(h.contains_relint(x) for h in neg)

        isolated = tuple(
            v
            for v in arr.vertices
            if not hull_hits_relint(v) and not in_open_closure(v)
        )
        free_arcs = 0
        for e in arr.edges:
            pt = _edge_point(arr, e)
            if pt is None:
                continue
            if not hull_hits_relint(pt) and not in_open_closure(pt):
                free_arcs += 1
        note = (
            f"{len(isolated)} isolated addable point(s); "
            f"{free_arcs} addable arc(s) outside the closure of the open part"
        )
        covered_region = Region.from_cones(
            3, [f.cone for f in arr.faces if covered[f.signs]]
        )
        return AddableSet(open_part, isolated, note, covered_region)
    # generic dimension: sign-vector cell complex, 2-cells only
    _, cells = _sign_cells(n, planes)
    open_cones = []
    covered_cones = []
    for _, cone in cells:
        p = cone.interior_point()
        if any(h.contains_interior(p) for h in neg):
            covered_cones.append(cone)
        else:
            open_cones.append(cone)
    open_part = Region.from_cones(n, open_cones)
    covered_region = Region.from_cones(n, covered_cones)
    return AddableSet(
        open_part,
        (),
        "lower-dimensional addable features not enumerated for n != 3",
        covered_region,
    )


def _edge_point(arr, e):
    """An exact interior point of an arc, or None for closed edges."""
    if e.endpoints is None:
        return None
    a = arr.vertices[e.endpoints[0]].coords
    b = arr.vertices[e.endpoints[1]].coords
    if ops.primitive(a) == ops.primitive(ops.vneg(b)):
        # half-circle arc: rotate a quarter turn around the circle normal
        n_c = arr.circles[e.circle].normal
        return ops.cross3(n_c, a)
    return ops.vadd(a, b)


def maxtame_certificate(region, _verdict=None):
    """(certified, report): certified means interior of the addable set
    equals the region exactly, which implies maximality among open
    n-tame sets."""
    add = addable_set(region, _verdict=_verdict)
    residual = [
        c for c in add.open_part.cells if not region.contains(c.cone.interior_point())
    ]
    missing = [
        c for c in add.covered.cells if region.contains(c.cone.interior_point())
    ]
    certified = not residual and not missing
    report = {
        "certified": certified,
        "residual_addable_cells": len(residual),
        "region_cells_inside_hull": len(missing),
        "isolated_addable_points": [p.serialize() for p in add.isolated_points],
        "boundary_note": add.boundary_note,
    }
    return certified, report


def finite_set_tame(points, m):
    """Is every <=m-point subset of the finite point set unbalanced?"""
    rays = _as_rays(points)
    for size in range(1, m + 1):
        for sub in itertools.combinations(rays, size):
            w = is_balanced(sub)
            if w is not None:
                return False, w
    return True, None


def point_rank(x, X):
    """Least rank of x with respect to the finite n-tame set X: the
    smallest l with x in X[l+1]."""
    rays = _as_rays(X)
    if not rays:
        raise InputError("X must be non-empty")
    n = len(rays[0].coords)
    xr = x if isinstance(x, Ray) else Ray.from_exact(tuple(x))
    ok, w = finite_set_tame(rays, n)
    if not ok:
        raise InputError(f"X is not n-tame; balanced witness: {w.serialize()}")
    ok, _ = finite_set_tame(rays, n + 1)
    if ok:
        raise InputError("X is (n+1)-tame; ranks are not defined")
    for j in range(1, n + 1):
        for sub in itertools.combinations(rays, min(j, len(rays))):
            if is_balanced(sub) is not None:
                return j - 1  # hull is the whole sphere by convention
            if _lp.cone_member(xr.coords, [s.coords for s in sub]):
                return j - 1
    raise InternalInvariantError(
        "point of the sphere escaped every n-point hull of a non-(n+1)-tame set"
    )


def hull_augment(region, component_index):
    """region union the 2-hull of one component, as open cells; the
    output is re-checked n-tame."""
    from tamesphere.regions import overlay

    groups = region.component_indices()
    if not 0 <= component_index < len(groups):
        raise InputError(f"no component {component_index}")
    comp = [region.cells[i].cone for i in groups[component_index]]
    hulls = []
    for i in range(len(comp)):
        for j in range(i, len(comp)):
            s = minkowski_sum(comp[i], comp[j])
            if not s.normals and not s.eqs:
                raise InternalInvariantError("component 2-hull hit the whole sphere")
            hulls.append(s)
    arr = overlay(region, extra_planes=_hull_planes(hulls))
    out = []
    for f in arr.faces:
        if region.contains(f.interior) or any(
            h.contains_interior(f.interior) for h in hulls
        ):
            out.append(f.cone)
    result = Region.from_cones(3, out, label=region.label)
    verdict = is_m_tame(result, region.n)
    if not verdict.tame:
        raise InternalInvariantError(
            f"2-hull augmentation broke tameness: {verdict.witness.serialize()}"
        )
    return result
