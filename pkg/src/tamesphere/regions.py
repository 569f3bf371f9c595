"""Open polyhedral regions on the sphere S^{n-1}.

A Region is a finite union of pairwise disjoint open full-dimensional
cells, each the relative interior of a full-dimensional polyhedral
cone's sphere trace.  Components are connectivity classes under
codimension-one closure contact; touching at a lower-dimensional face
does not join components.

Boolean operations (n = 3 only) overlay the great-circle arrangement of
all bounding planes and classify faces, so results are always unions of
disjoint open convex cells.
"""

import json
from dataclasses import dataclass, field

from tamesphere import ops
from tamesphere.cones import Cell, Cone, minkowski_sum
from tamesphere.errors import (
    InputError,
    NotTameError,
    UnsupportedDimensionError,
)
from tamesphere.exact_core import Ray

FORMAT_TAG = "tame-region/1"


def _cells_overlap(a, b):
    """Do two open full-dimensional cells share an interior point?"""
    from tamesphere._lp import strict_feasible

    rows = [tuple(x) for x in a.normals] + [tuple(x) for x in b.normals]
    return strict_feasible(rows, [], a.n) is not None


def _closure_meet(a, b):
    return Cone.from_normals(a.n, list(a.normals) + list(b.normals))


@dataclass(frozen=True)
class Region:
    n: int
    cells: tuple  # of Cell, open, full-dimensional, pairwise disjoint
    label: str | None = None

    @classmethod
    def from_cones(cls, n, cones, label=None, check=False):
        cs = []
        seen = set()
        for k in cones:
            if not k.fulldim:
                raise InputError("region cells must be full-dimensional")
            if k.key() in seen:
                continue
            seen.add(k.key())
            cs.append(Cell(k, open_=True))
        cs.sort(key=lambda c: c.key())
        r = cls(n, tuple(cs), label)
        if check:
            r.validate()
        return r

    def validate(self):
        for c in self.cells:
            if not c.open_ or not c.cone.fulldim or c.cone.n != self.n:
                raise InputError("region cells must be open and full-dimensional")
        for i in range(len(self.cells)):
            for j in range(i + 1, len(self.cells)):
                if _cells_overlap(self.cells[i].cone, self.cells[j].cone):
                    raise InputError(
                        f"cells {i} and {j} overlap; region cells must be disjoint"
                    )
        return self

    @property
    def empty(self):
        return not self.cells

    def contains(self, x):
        return any(c.contains(x) for c in self.cells)

    def contains_closure(self, x):
        return any(c.cone.contains_closed(x) for c in self.cells)

    def antipode(self):
        return Region(
            self.n,
            tuple(sorted((Cell(c.cone.negate(), True) for c in self.cells),
                         key=lambda c: c.key())),
            self.label,
        )

    def planes(self):
        """Canonical unoriented bounding-plane normals of all cells."""
        out = set()
        for c in self.cells:
            for a in c.cone.normals:
                out.add(Ray(a).unoriented().coords)
        return sorted(out)

    # -- components --------------------------------------------------------

    def _adjacent(self, i, j):
        meet = _closure_meet(self.cells[i].cone, self.cells[j].cone)
        return (not meet.is_zero) and meet.dim() == self.n - 1

    def component_indices(self):
        m = len(self.cells)
        parent = list(range(m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(m):
            for j in range(i + 1, m):
                if find(i) != find(j) and self._adjacent(i, j):
                    parent[find(i)] = find(j)
        groups = {}
        for i in range(m):
            groups.setdefault(find(i), []).append(i)
        return sorted(groups.values())

    def components(self):
        return [
            Region(self.n, tuple(self.cells[i] for i in g), self.label)
            for g in self.component_indices()
        ]

    def component_count(self):
        return len(self.component_indices())

    # -- serialization -----------------------------------------------------

    def serialize(self):
        comps = []
        for c in self.cells:
            comps.append(
                {
                    "vrep": [_vec_out(r) for r in c.cone.generators()],
                    "hrep": [_vec_out(a) for a in c.cone.normals],
                    "open": c.open_,
                }
            )
        out = {"format": FORMAT_TAG, "n": self.n, "components": comps}
        if self.label is not None:
            out["label"] = self.label
        return out

    def dumps(self):
        return json.dumps(self.serialize(), indent=1, sort_keys=True)

    @classmethod
    def parse(cls, data):
        if not isinstance(data, dict):
            raise InputError("region document must be a JSON object")
        if data.get("format") != FORMAT_TAG:
            raise InputError(
                f"unsupported format tag {data.get('format')!r}; expected {FORMAT_TAG!r}"
            )
        n = data.get("n")
        if not isinstance(n, int) or n < 2:
            raise InputError("field 'n' must be an integer >= 2")
        cones = []
        for k, cell in enumerate(data.get("components", [])):
            if not cell.get("open", True):
                raise InputError(f"component {k}: region cells must be open")
            if "vrep" in cell:
                cone = Cone.from_rays(n, [_vec_in(v, n, k) for v in cell["vrep"]])
            elif "hrep" in cell:
                cone = Cone.from_normals(n, [_vec_in(v, n, k) for v in cell["hrep"]])
            else:
                raise InputError(f"component {k}: need 'vrep' or 'hrep'")
            cones.append(cone)
        label = data.get("label")
        return cls.from_cones(n, cones, label=label, check=True)

    @classmethod
    def loads(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InputError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}")
        return cls.parse(data)


def _vec_out(v):
    return [str(x) for x in v]


def _vec_in(v, n, k):
    from tamesphere.exact_core import parse_rational

    try:
        t = tuple(parse_rational(x) for x in v)
    except (InputError, TypeError, ValueError) as e:
        raise InputError(f"component {k}: bad vector {v!r}: {e}")
    if len(t) != n:
        raise InputError(f"component {k}: vector length {len(t)} != n = {n}")
    return t


@dataclass(frozen=True)
class Hemisphere:
    """Open hemisphere {x : v . x > 0}."""

    v: Ray

    def region(self):
        n = len(self.v.coords)
        return Region.from_cones(n, [Cone.from_normals(n, [self.v.coords])])

    def contains(self, x):
        return self.v.dot(x) > 0

    def boundary_misses(self, r):
        """Is the boundary circle v-perp disjoint from the open region r?"""
        from tamesphere._lp import strict_feasible

        a = tuple(self.v.coords)
        na = ops.vneg(a)
        for c in r.cells:
            rows = [tuple(x) for x in c.cone.normals]
            if strict_feasible(rows, [a, na], r.n) is not None:
                return False
        return True


# -- boolean operations on S^2 ------------------------------------------


def _require_s2(n):
    if n != 3:
        raise UnsupportedDimensionError(
            f"boolean region operations need n = 3 (got n = {n})"
        )


def overlay(*regions, extra_planes=()):
    """Arrangement of every bounding plane of the given S^2 regions."""
    from tamesphere.arrangements import Arrangement

    planes = set(extra_planes)
    for r in regions:
        _require_s2(r.n)
        planes.update(r.planes())
    if not planes:
        planes.add((0, 0, 1))
    return Arrangement(sorted(planes))


def boolean_ops(a, b, op, label=None):
    """union | intersection | difference of S^2 regions, as open cells."""
    _require_s2(a.n)
    _require_s2(b.n)
    arr = overlay(a, b)
    out = []
    for face in arr.faces:
        p = face.interior
        ina = a.contains(p)
        inb = b.contains(p)
        keep = {
            "union": ina or inb,
            "intersection": ina and inb,
            "difference": ina and not inb,
        }.get(op)
        if keep is None:
            raise InputError(f"unknown boolean op {op!r}")
        if keep:
            out.append(face.cone)
    return Region.from_cones(3, out, label=label)


def empty_region(n):
    return Region(n, ())


def regularize(r):
    if r.n != 3:
        return r
    return boolean_ops(r, empty_region(3), "union", label=r.label)


def complement_region(r):
    """Open regularized complement: faces of r's own arrangement missing r."""
    _require_s2(r.n)
    arr = overlay(r)
    out = [f.cone for f in arr.faces if not r.contains(f.interior)]
    return Region.from_cones(3, out)


def region_equal(a, b):
    """Equality as open point sets (symmetric difference empty)."""
    if a.n != b.n:
        return False
    if a.n != 3:
        return {c.key() for c in a.cells} == {c.key() for c in b.cells}
    arr = overlay(a, b)
    return all(
        a.contains(f.interior) == b.contains(f.interior) for f in arr.faces
    )


def region_subset(a, b):
    """Is the open set a contained in the open set b?"""
    if a.n != 3:
        raise UnsupportedDimensionError("exact containment implemented for n = 3")
    arr = overlay(a, b)
    return all(
        b.contains(f.interior) for f in arr.faces if a.contains(f.interior)
    )


def convexify(r):
    """Greedy merge of cells whose union is convex; same point set, fewer cells."""
    cones = [c.cone for c in r.cells]
    changed = True
    while changed:
        changed = False
        for i in range(len(cones)):
            for j in range(i + 1, len(cones)):
                a, b = cones[i], cones[j]
                meet = _closure_meet(a, b)
                if meet.is_zero or meet.dim() != r.n - 1:
                    continue
                k = minkowski_sum(a, b)
                if k.lineality or not k.fulldim:
                    continue
                if _covered_by_pair(k, a, b):
                    cones[i] = k
                    del cones[j]
                    changed = True
                    break
            if changed:
                break
    return Region.from_cones(r.n, cones, label=r.label)


def _covered_by_pair(k, a, b):
    """Is the closed cone k contained in closure(a) union closure(b)?"""
    for first, second in ((a, b), (b, a)):
        for facet in first.normals:
            piece = Cone.from_normals(
                k.n, list(k.normals) + [ops.vneg(facet)]
            )
            if piece.is_zero or piece.dim() < k.n:
                continue
            if not all(
                all(ops.vdot(nb, g) >= 0 for nb in second.normals)
                for g in piece.generators()
            ):
                return False
    return True


def open_thickening(closed_r, m):
    """Open region strictly containing the given closed cells, with
    closure still m-tame.

    Accepts a Region (cells read as closures) or an iterable of closed
    cones of any dimension (points and arcs allowed).  Each cell is
    thickened by coning over perturbed generators 2^k g +- e_i; k grows
    (the perturbation shrinks) until the closure of the result passes
    the exact m-tameness check.  Thickened cells that overlap are
    merged into their conic hull.
    """
    from tamesphere.tameness import closed_tame_witness

    label = None
    if isinstance(closed_r, Region):
        base = [c.cone for c in closed_r.cells]
        label = closed_r.label
    else:
        base = list(closed_r)
    if not base:
        raise InputError("nothing to thicken")
    n = base[0].n
    w = closed_tame_witness(base, m, n)
    if w is not None:
        raise NotTameError("input closure is not m-tame", witness=w)
    units = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    last_witness = None
    for k in range(2, 40):
        s = 1 << k
        cones = []
        for cone in base:
            gens = []
            for g in cone.generators():
                for e in units:
                    gens.append(ops.vadd(ops.vscale(s, g), e))
                    gens.append(ops.vadd(ops.vscale(s, g), ops.vneg(e)))
            cones.append(Cone.from_rays(n, gens))
        # merge overlapping thickenings so the cell list stays disjoint
        merged = True
        while merged:
            merged = False
            for i in range(len(cones)):
                for j in range(i + 1, len(cones)):
                    if _cells_overlap(cones[i], cones[j]):
                        cones[i] = minkowski_sum(cones[i], cones[j])
                        del cones[j]
                        merged = True
                        break
                if merged:
                    break
        if any(c.lineality for c in cones):
            continue
        cand = Region.from_cones(n, cones, label=label)
        w = closed_tame_witness([c.cone for c in cand.cells], m, n)
        if w is None:
            return cand
        last_witness = w
    raise NotTameError(
        "no thickening found: every tried relaxation creates a balanced subset",
        witness=last_witness,
    )
