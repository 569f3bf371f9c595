"""Constructive pipelines for maximal tame sets on S^2.

Three builders on top of the tameness predicates:
- weakly_maxtame_coarsen: pick a separating hemisphere for each small
  subset of component representatives and coarsen the region to the
  faces of the resulting great-circle arrangement it meets;
- complete_maxtame_s2: grow an open 3-tame region, one addable
  component at a time inside each face of a balanced-tetrahedron
  subdivision, until the maximality certificate holds;
- reduce_n_plus_2: merge two distinguished components of a
  (n+2)-component region into their spherical hull, dropping the
  component count while keeping n-tameness.

Every intermediate region is re-checked exactly; failures carry
witnesses and the full trace, never a silent wrong answer.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from tamesphere import _lp, ops
from tamesphere.cones import Cone, minkowski_sum
from tamesphere.errors import (
    EnlargementError,
    InputError,
    InternalInvariantError,
    NotTameError,
)
from tamesphere.exact_core import Ray
from tamesphere.regions import (
    Hemisphere,
    Region,
    boolean_ops,
    convexify,
    open_thickening,
    overlay,
    region_equal,
    region_subset,
)
from tamesphere.tameness import (
    HemisphereCache,
    addable_set,
    is_m_tame,
    maxtame_certificate,
    m_hull,
)


@dataclass
class CompletionTrace:
    steps: list = field(default_factory=list)
    final: Region | None = None
    certified: bool = False

    def log(self, op, **info):
        self.steps.append({"op": op, **info})

    def serialize(self):
        return {
            "steps": self.steps,
            "certified": self.certified,
            "final": self.final.serialize() if self.final else None,
        }


def separator(X, region):
    """Open hemisphere containing every point of X whose boundary circle
    misses the open region.

    Searches sign assignments over the region's components: each
    component must sit weakly on one side of the boundary plane, with
    every cell's generator sum strictly off the boundary, and each point
    of X strictly inside.  Components containing a point of X are pinned
    to the positive side.
    """
    pts = [p.coords if isinstance(p, Ray) else Ray.from_exact(tuple(p)).coords for p in X]
    groups = region.component_indices()
    pinned = []
    for g in groups:
        side = 0
        for i in g:
            cone = region.cells[i].cone
            if any(cone.contains_relint(p) for p in pts):
                side = 1
                break
        pinned.append(side)
    free = [gi for gi, s in enumerate(pinned) if s == 0]
    cell_groups = []
    owner = []
    for gi, g in enumerate(groups):
        for i in g:
            cell_groups.append(region.cells[i].cone.generators())
            owner.append(gi)
    for assign in itertools.product((1, -1), repeat=len(free)):
        comp_sign = list(pinned)
        for gi, s in zip(free, assign):
            comp_sign[gi] = s
        signs = [comp_sign[o] for o in owner]
        v = _lp.grouped_hemisphere(cell_groups, strict_points=pts, signs=signs)
        if v is None:
            continue
        h = Hemisphere(Ray.from_exact(tuple(v)))
        if all(h.contains(p) for p in pts) and h.boundary_misses(region):
            return h
    raise EnlargementError(
        "no separating hemisphere: sign assignments exhausted "
        f"for {len(pts)} points over {len(groups)} components"
    )


def weakly_maxtame_coarsen(region, _verdict=None):
    """Coarsen an open n-tame region to the faces of a separating
    arrangement; returns (coarsened region, hemisphere family)."""
    n = region.n
    if n != 3:
        raise InputError("coarsening is implemented on S^2")
    verdict = _verdict if _verdict is not None else is_m_tame(region, n)
    if not verdict.tame:
        raise NotTameError("input is not n-tame", witness=verdict.witness)
    comps = region.component_indices()
    reps = [region.cells[g[0]].cone.interior_point() for g in comps]
    hemis = []
    for size in range(1, min(n, len(reps)) + 1):
        for sub in itertools.combinations(reps, size):
            hemis.append(separator(sub, region))
    planes = {h.v.unoriented().coords for h in hemis}
    arr = overlay(region, extra_planes=planes)
    out = arr.coarsen_to_region(region, label=region.label)
    verdict = is_m_tame(out, n)
    if not verdict.tame:
        raise NotTameError(
            "coarsened region lost tameness (separator family insufficient)",
            witness=verdict.witness,
        )
    if out.component_count() > len(comps):
        raise InternalInvariantError("coarsening increased the component count")
    return out, hemis


def _containing_hemisphere(region):
    """v with every cell weakly inside and every cell interior strictly
    inside the open hemisphere H(v); exists when the region is
    (n+1)-tame."""
    cell_groups = [c.cone.generators() for c in region.cells]
    v = _lp.grouped_hemisphere(cell_groups, strict_points=(), signs=[1] * len(cell_groups))
    if v is None:
        return None
    return Hemisphere(Ray.from_exact(tuple(v)))


def _balanced_tetrahedron(region, cache):
    """Four points, one per cell of some 4-subset, balanced with the
    origin interior to their Euclidean hull (affine rank 3)."""
    gens = [c.cone.generators() for c in region.cells]
    for idx in itertools.combinations(range(len(gens)), 4):
        flat = [g for i in idx for g in gens[i]]
        if cache.covers(flat) is not None:
            continue
        if _lp.strict_feasible(flat, [], 3) is not None:
            continue
        for attempt in range(8):
            weights = [((j * 7 + attempt * 13) % 11) - 5 for j in range(len(flat))]
            mu = (
                _lp.positive_nullcomb(flat)
                if attempt == 0
                else _lp.positive_nullcomb_generic(flat, weights)
            )
            if mu is None:
                break
            pts = []
            pos = 0
            for i in idx:
                k = len(gens[i])
                x = tuple(
                    sum(Fraction(mu[j]) * Fraction(gens[i][j - pos][d]) for j in range(pos, pos + k))
                    for d in range(3)
                )
                pos += k
                pts.append(Ray.from_exact(x))
            if len({p.coords for p in pts}) == 4 and _full_rank3(pts):
                return pts
    return None


def _full_rank3(pts):
    from tamesphere.cones import _rank

    return _rank([p.coords for p in pts], 3) == 3


def _face_regions(F):
    """The four open triangles of the tetrahedral subdivision cut out by
    the 2-hull of the antipodal set of F."""
    out = []
    for i in range(4):
        rays = [ops.vneg(F[j].coords) for j in range(4) if j != i]
        cone = Cone.from_rays(3, rays)
        if not cone.fulldim or cone.lineality:
            raise InternalInvariantError("degenerate tetrahedron face")
        out.append(Region.from_cones(3, [cone]))
    return out


def complete_maxtame_s2(region, max_rounds=None):
    """Grow an open 3-tame region on S^2 into a certified maxtame one.

    Pipeline: coarsen; if the result is 4-tame return a containing open
    hemisphere; otherwise pick a balanced 4-point subset F with the
    origin interior to its hull and, visiting each face of the antipodal
    tetrahedron in turn, add one component of the interior of the
    addable complement at a time, recomputing the addable set after
    every addition.  Every step is re-checked 3-tame.
    """
    if region.n != 3:
        raise InputError("completion is implemented on S^2")
    trace = CompletionTrace()
    cache = HemisphereCache()
    verdict = is_m_tame(region, 3, _cache=cache)
    if not verdict.tame:
        raise NotTameError("input is not 3-tame", witness=verdict.witness)
    cur, hemis = weakly_maxtame_coarsen(region, _verdict=verdict)
    trace.log("coarsen", cells=len(cur.cells), components=cur.component_count(),
              hemispheres=len(hemis), region=cur.dumps())

    v4 = is_m_tame(cur, 4, _cache=cache)
    if v4.tame:
        h = _containing_hemisphere(cur)
        if h is None:
            raise InternalInvariantError(
                "4-tame region without a containing hemisphere"
            )
        final = h.region()
        if not region_subset(cur, final):
            raise InternalInvariantError("containing hemisphere misses the region")
        trace.log("hemisphere", normal=h.v.serialize(), region=final.dumps())
        trace.final = final
        trace.certified, _ = maxtame_certificate(final)
        if not trace.certified:
            raise InternalInvariantError("open hemisphere failed its certificate")
        return trace

    F = _balanced_tetrahedron(cur, cache)
    if F is None:
        raise InternalInvariantError(
            "region is not 4-tame yet no balanced tetrahedron was found"
        )
    trace.log("tetrahedron", points=[p.serialize() for p in F])
    faces = _face_regions(F)
    cap = max_rounds if max_rounds is not None else 64 * max(1, len(cur.cells))
    additions = 0
    while True:
        progress = False
        for fi, face in enumerate(faces):
            while True:
                add = addable_set(cur)
                gap = boolean_ops(add.open_part, cur, "difference")
                gap_in_face = boolean_ops(gap, face, "intersection")
                if gap_in_face.empty:
                    break
                comp = gap_in_face.components()[0]
                cur = boolean_ops(cur, comp, "union", label=region.label)
                cur = convexify(cur)
                additions += 1
                v = is_m_tame(cur, 3, _cache=cache)
                if not v.tame:
                    raise EnlargementError(
                        "addition broke 3-tameness",
                        witness=v.witness,
                        trace=trace,
                    )
                trace.log(
                    "add",
                    face=fi,
                    component_cells=len(comp.cells),
                    cells=len(cur.cells),
                    region=cur.dumps(),
                )
                if additions > cap:
                    raise EnlargementError(
                        f"iteration cap {cap} exceeded without certification",
                        trace=trace,
                    )
                progress = True
        certified, report = maxtame_certificate(cur)
        if certified:
            break
        if not progress:
            raise EnlargementError(
                f"no addable components left but certificate fails: {report}",
                trace=trace,
            )
    if not region_subset(region, cur):
        raise InternalInvariantError("completion lost part of its input")
    trace.final = cur
    trace.certified = True
    _assert_component_law(cur)
    return trace


def _assert_component_law(region):
    c = region.component_count()
    if not (c == 1 or c == 4 or c >= 6):
        raise InternalInvariantError(
            f"certified region with {c} components violates the 1 / n+1 / >= n+3 law"
        )


def complete_closed(cones, m=3, **kw):
    """Completion entry point for closed inputs: thicken, then complete."""
    return complete_maxtame_s2(open_thickening(cones, m), **kw)


def reduce_n_plus_2(region):
    """Merge two components of a 5-component open 3-tame region on S^2
    into their spherical hull, returning a 3-tame region with at most 4
    components.  If the component representatives do not surround the
    origin the region is returned unchanged (with a note attribute)."""
    n = region.n
    if n != 3:
        raise InputError("reduction is implemented on S^2")
    comps = region.component_indices()
    if len(comps) != n + 2:
        raise InputError(f"need exactly {n + 2} components, got {len(comps)}")
    verdict = is_m_tame(region, n)
    if not verdict.tame:
        raise NotTameError("input is not n-tame", witness=verdict.witness)
    reps = [region.cells[g[0]].cone.interior_point() for g in comps]
    if _lp.strict_feasible([r.coords for r in reps], [], n) is not None:
        out = Region(region.n, region.cells, region.label)
        out = convexify(out)
        object.__setattr__(out, "note", "representatives inside an open hemisphere; nothing to merge")
        return out
    balanced_quads = [
        sub
        for sub in itertools.combinations(range(n + 2), n + 1)
        if _lp.positive_nullcomb([reps[i].coords for i in sub]) is not None
    ]
    pair_order = []
    if len(balanced_quads) >= 1:
        # components outside some balanced quadruple are merge candidates
        outside = [
            [i for i in range(n + 2) if i not in sub] for sub in balanced_quads
        ]
        flat = sorted({i for o in outside for i in o})
        pair_order = list(itertools.combinations(flat, 2))
    for pair in pair_order + [
        p for p in itertools.combinations(range(n + 2), 2) if p not in pair_order
    ]:
        merged = _merge_components(region, comps[pair[0]], comps[pair[1]])
        if merged is None:
            continue
        v = is_m_tame(merged, n)
        if v.tame:
            if merged.component_count() > n + 1:
                continue
            return merged
    raise InternalInvariantError(
        "no component pair could be merged tamely; the reduction argument failed"
    )


def _merge_components(region, ga, gb):
    cones_a = [region.cells[i].cone for i in ga]
    cones_b = [region.cells[i].cone for i in gb]
    both = cones_a + cones_b
    hulls = []
    for i in range(len(both)):
        for j in range(i, len(both)):
            s = minkowski_sum(both[i], both[j])
            if not s.normals and not s.eqs:
                return None
            hulls.append(s)
    planes = set()
    for h in hulls:
        for a in h.normals:
            planes.add(Ray(a).unoriented().coords)
        for e in h.eqs:
            planes.add(Ray(e).unoriented().coords)
    arr = overlay(region, extra_planes=planes)
    out = []
    for f in arr.faces:
        if region.contains(f.interior) or any(
            h.contains_interior(f.interior) for h in hulls
        ):
            out.append(f.cone)
    return convexify(Region.from_cones(3, out, label=region.label))
