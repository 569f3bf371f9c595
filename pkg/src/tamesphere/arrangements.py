"""Exact arrangements of great circles on the 2-sphere.

A great circle is the trace of a plane through the origin, recorded by
an unoriented primitive integer normal.  The arrangement is the induced
cell structure: vertices are pairwise intersection points (both
antipodes), edges are the open arcs between consecutive vertices along
each circle, and faces are the open 2-cells, identified with realizable
strict sign vectors over the circle normals.

Everything is computed in exact rational arithmetic.  Degenerate
configurations (three or more circles through a point) are handled
directly, never perturbed.
"""

import functools
import itertools
from dataclasses import dataclass

from tamesphere import ops
from tamesphere.cones import Cone
from tamesphere.errors import InputError
from tamesphere.exact_core import Ray


@dataclass(frozen=True)
class GreatCircle:
    """Great circle cut out by the plane normal to `normal` (unoriented)."""

    normal: tuple

    @classmethod
    def from_vector(cls, v):
        r = v if isinstance(v, Ray) else Ray.from_exact(tuple(v))
        if len(r.coords) != 3:
            raise InputError("great circles live on S^2; normal must be 3-dimensional")
        return cls(r.unoriented().coords)


@dataclass(frozen=True)
class Edge:
    """Open arc of circle `circle` between two vertex indices.

    `endpoints` is None for the single closed edge of a vertex-free
    circle.  Endpoints are ordered counterclockwise around the circle's
    normal: the arc runs from the first to the second.
    """

    circle: int
    endpoints: tuple | None


@dataclass(frozen=True)
class Face:
    """Open 2-cell: all points x with sign(n_i . x) = signs[i] for every circle."""

    signs: tuple
    cone: Cone
    interior: Ray

    @property
    def edge_count(self):
        return len(self.cone.normals)


def _angle_key(n_c, u):
    """Cyclic comparator for points on the circle with normal n_c.

    u is a reference point on the circle; angles increase
    counterclockwise around n_c.  Exact: compares direction vectors
    ((p.u)(w.w), (p.w)(u.u)) in the plane basis (u, w), w = n_c x u.
    """
    w = ops.cross3(n_c, u)
    uu = ops.vdot(u, u)
    ww = ops.vdot(w, w)

    def coords(p):
        return (ops.vdot(p, u) * ww, ops.vdot(p, w) * uu)

    def cmp(p, q):
        return ops.angle_cmp2(coords(p), coords(q))

    return functools.cmp_to_key(cmp), coords


class Arrangement:
    """Immutable incidence structure of a set of great circles on S^2."""

    def __init__(self, circles):
        canon = []
        seen = set()
        for c in circles:
            gc = c if isinstance(c, GreatCircle) else GreatCircle.from_vector(c)
            if gc.normal in seen:
                raise InputError(f"duplicate circle with normal {gc.normal}")
            seen.add(gc.normal)
            canon.append(gc)
        self.circles = tuple(sorted(canon, key=lambda g: g.normal))
        self._normals = tuple(g.normal for g in self.circles)
        self._build_vertices()
        self._build_edges()
        self._build_faces()

    # -- construction ------------------------------------------------------

    def _build_vertices(self):
        pts = set()
        for a, b in itertools.combinations(self._normals, 2):
            w = ops.cross3(a, b)
            w = ops.primitive(w)
            # distinct unoriented great-circle normals are never parallel
            pts.add(w)
            pts.add(ops.vneg(w))
        self.vertices = tuple(Ray(p) for p in sorted(pts))
        self._vertex_index = {v.coords: i for i, v in enumerate(self.vertices)}

    def _build_edges(self):
        edges = []
        self._circle_cycles = []
        for ci, n_c in enumerate(self._normals):
            inc = [v.coords for v in self.vertices if ops.vdot(n_c, v.coords) == 0]
            if not inc:
                edges.append(Edge(ci, None))
                self._circle_cycles.append(())
                continue
            key, _ = _angle_key(n_c, inc[0])
            inc.sort(key=key)
            cyc = tuple(self._vertex_index[p] for p in inc)
            self._circle_cycles.append(cyc)
            for k in range(len(cyc)):
                edges.append(Edge(ci, (cyc[k], cyc[(k + 1) % len(cyc)])))
        self.edges = tuple(edges)

    def _generic_point(self):
        for r in itertools.count(1):
            for p in itertools.product(range(-r, r + 1), repeat=3):
                if not any(p):
                    continue
                if all(ops.vdot(n, p) != 0 for n in self._normals):
                    return p
        raise AssertionError("unreachable")

    def _cone_of_signs(self, signs):
        return Cone.from_normals(
            3, [ops.vscale(s, n) for n, s in zip(self._normals, signs)]
        )

    def _build_faces(self):
        if not self._normals:
            raise InputError("arrangement needs at least one circle")
        norm_to_circle = {}
        for i, n in enumerate(self._normals):
            norm_to_circle[n] = (i, 1)
            norm_to_circle[ops.vneg(n)] = (i, -1)
        p0 = self._generic_point()
        s0 = tuple(ops.dot_sign(n, p0) for n in self._normals)
        faces = {}
        queue = [s0]
        while queue:
            s = queue.pop()
            if s in faces:
                continue
            cone = self._cone_of_signs(s)
            if not cone.fulldim:
                raise AssertionError(f"unrealizable face sign vector {s}")
            faces[s] = Face(s, cone, cone.interior_point())
            for a in cone.normals:
                ci, _ = norm_to_circle[a]
                t = list(s)
                t[ci] = -t[ci]
                t = tuple(t)
                if t not in faces:
                    queue.append(t)
        self.faces = tuple(faces[s] for s in sorted(faces))
        self._face_index = {f.signs: f for f in self.faces}

    # -- queries -----------------------------------------------------------

    def locate(self, x):
        """Classify x: ('face', Face), ('edge', Edge) or ('vertex', Ray)."""
        p = x.coords if isinstance(x, Ray) else Ray.from_exact(tuple(x)).coords
        signs = tuple(ops.dot_sign(n, p) for n in self._normals)
        zeros = [i for i, s in enumerate(signs) if s == 0]
        if not zeros:
            return ("face", self._face_index[signs])
        if len(zeros) >= 2:
            # at least two non-parallel tight planes pin the point
            return ("vertex", self.vertices[self._vertex_index[ops.primitive(p)]])
        ci = zeros[0]
        cyc = self._circle_cycles[ci]
        if not cyc:
            return ("edge", Edge(ci, None))
        n_c = self._normals[ci]
        ref = self.vertices[cyc[0]].coords
        key, _ = _angle_key(n_c, ref)
        kp = key(p)
        m = len(cyc)
        for k in range(m):
            a = key(self.vertices[cyc[k]].coords)
            b = key(self.vertices[cyc[(k + 1) % m]].coords)
            # p lies strictly inside the ccw arc (a, b)?
            if (a < kp < b) if a < b else (kp > a or kp < b):
                return ("edge", Edge(ci, (cyc[k], cyc[(k + 1) % m])))
        raise AssertionError("point on circle escaped every arc")

    def stats(self):
        v, e, f = len(self.vertices), len(self.edges), len(self.faces)
        by_edges = {}
        for face in self.faces:
            by_edges[face.edge_count] = by_edges.get(face.edge_count, 0) + 1
        single = len(self._normals) == 1
        return {
            "V": v,
            "E": e,
            "F": f,
            "euler": v - e + f,
            "euler_ok": (v - e + f == 2) or single,
            "faces_by_edge_count": dict(sorted(by_edges.items())),
        }

    def face_of_signs(self, signs):
        return self._face_index.get(tuple(signs))

    def coarsen_to_region(self, seed, label=None):
        """Union of the open faces meeting the open region `seed`.

        Every bounding plane of seed must appear among the circles, so
        seed is a union of (parts of) faces and the output contains it.
        """
        from tamesphere._lp import strict_feasible
        from tamesphere.regions import Region

        hit = []
        for face in self.faces:
            rows = [
                ops.vscale(s, n) for n, s in zip(self._normals, face.signs)
            ]
            for cell in seed.cells:
                cell_rows = [tuple(a) for a in cell.cone.normals]
                if strict_feasible(rows + cell_rows, [], 3) is not None:
                    hit.append(face)
                    break
        return Region.from_cones(3, [f.cone for f in hit], label=label)
