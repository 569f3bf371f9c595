"""Polyhedral cones with dual (H-rep) and generator (V-rep) forms.

Cones are built by the double description method, inserting one
halfspace at a time with exact rational arithmetic.  Lineality is
carried explicitly (a basis of the largest linear subspace inside the
cone); rays are the extreme rays modulo that subspace.  Both
representations are minimized: extreme rays are filtered by the
tight-constraint rank criterion, facets by the dual pass.

The spherical hull convention: a generator hull whose Euclidean hull
contains the origin traces to the whole sphere; such hulls are reported
as the distinguished WholeSphere value, never as a cone.
"""

from dataclasses import dataclass
from fractions import Fraction

from tamesphere import ops
from tamesphere.errors import DimensionError, InputError
from tamesphere.exact_core import Ray


def _rank(vectors, n):
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    col = 0
    while rows and col < n:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), -1)
        if piv < 0:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = 1 / prow[col]
        rows[rank] = prow = [v * inv for v in prow]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [v - f * p for v, p in zip(rows[i], prow)]
        rank += 1
        col += 1
    return rank


def _dd(normals, n):
    """Vertex description of {x : a.x >= 0 for a in normals}.

    Returns (lineality basis, extreme rays), canonical primitive integer
    tuples, deterministically ordered.
    """
    lin = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    rays = []
    inserted = []
    for a in sorted(set(tuple(x) for x in normals)):
        da = {r: ops.vdot(a, r) for r in rays}
        dl = [(l, ops.vdot(a, l)) for l in lin]
        hit = next(((l, d) for l, d in dl if d), None)
        if hit is not None:
            l0, d0 = hit
            if d0 < 0:
                l0, d0 = ops.vneg(l0), -d0
            new_lin = []
            for l, d in dl:
                if l == hit[0]:
                    continue
                if d:
                    l = ops.primitive(tuple(d0 * x - d * y for x, y in zip(l, l0)))
                if any(l):
                    new_lin.append(l)
            new_rays = []
            for r in rays:
                d = da[r]
                if d:
                    r = ops.primitive(tuple(d0 * x - d * y for x, y in zip(r, l0)))
                if any(r):
                    new_rays.append(r)
            new_rays.append(l0)
            lin = new_lin
            rays = _dedup(new_rays)
        else:
            pos = [r for r in rays if da[r] > 0]
            zero = [r for r in rays if da[r] == 0]
            neg = [r for r in rays if da[r] < 0]
            combos = []
            target = n - len(lin) - 2
            for rp in pos:
                for rn in neg:
                    if inserted:
                        tight = [b for b in inserted if ops.vdot(b, rp) == 0 and ops.vdot(b, rn) == 0]
                        if len(rays) > 2 and _rank(tight, n) < target:
                            continue
                    w = tuple(da[rp] * x - da[rn] * y for x, y in zip(rn, rp))
                    w = ops.primitive(w)
                    if any(w):
                        combos.append(w)
            rays = _dedup(pos + zero + combos)
        inserted.append(a)
        # Extreme-ray filter: tight constraints must have rank n-|lin|-1.
        want = n - len(lin) - 1
        if rays and want > 0:
            rays = [
                r
                for r in rays
                if _rank([b for b in inserted if ops.vdot(b, r) == 0], n) >= want
            ]
    # Drop rays lying inside the lineality space (redundant).
    if lin:
        rays = [r for r in rays if _rank(lin + [r], len(r)) > _rank(lin, len(r))]
    return sorted(lin), sorted(rays)


def _dedup(vecs):
    return sorted(set(vecs))


@dataclass(frozen=True)
class Cone:
    """A closed polyhedral cone with minimal H- and V-representations."""

    n: int
    rays: tuple  # extreme rays (primitive int tuples), modulo lineality
    lin: tuple  # lineality space basis
    normals: tuple  # facet normals a with a.x >= 0
    eqs: tuple  # equality normals a with a.x = 0 (span complement)

    @classmethod
    def from_normals(cls, n, normals, eqs=()):
        ns = [_as_ivec(v, n) for v in normals]
        for e in eqs:
            ev = _as_ivec(e, n)
            ns.append(ev)
            ns.append(ops.vneg(ev))
        lin, rays = _dd(ns, n)
        return cls._finish(n, rays, lin)

    @classmethod
    def from_rays(cls, n, rays, lin=()):
        gens = [_as_ivec(v, n) for v in rays]
        for l in lin:
            lv = _as_ivec(l, n)
            gens.append(lv)
            gens.append(ops.vneg(lv))
        if not gens:
            return cls(n, (), (), (), tuple(_unit(n, i) for i in range(n)))
        # Dual cone {a : a.g >= 0}; its lineality spans the complement of
        # span(gens), its rays are the facet normals.
        dlin, drays = _dd(gens, n)
        eqs = tuple(dlin)
        normals = tuple(drays)
        lin2, rays2 = _dd(list(normals) + [v for e in eqs for v in (e, ops.vneg(e))], n)
        return cls(n, tuple(rays2), tuple(lin2), normals, eqs)

    @classmethod
    def _finish(cls, n, rays, lin):
        dlin, drays = _dd([g for g in rays] + [v for l in lin for v in (l, ops.vneg(l))], n)
        return cls(n, tuple(rays), tuple(lin), tuple(drays), tuple(dlin))

    # -- structure ---------------------------------------------------------

    @property
    def fulldim(self):
        return not self.eqs

    @property
    def lineality(self):
        return bool(self.lin)

    @property
    def is_zero(self):
        return not self.rays and not self.lin

    def dim(self):
        gens = list(self.rays) + list(self.lin)
        if not gens:
            return 0
        return _rank(gens, self.n)

    def generators(self):
        """Spanning set: extreme rays plus +-lineality basis vectors."""
        out = list(self.rays)
        for l in self.lin:
            out.append(l)
            out.append(ops.vneg(l))
        return out

    # -- predicates --------------------------------------------------------

    def contains_closed(self, x):
        v = _as_ivec(x, self.n)
        return all(ops.vdot(e, v) == 0 for e in self.eqs) and all(
            ops.vdot(a, v) >= 0 for a in self.normals
        )

    def contains_relint(self, x):
        v = _as_ivec(x, self.n)
        return all(ops.vdot(e, v) == 0 for e in self.eqs) and all(
            ops.vdot(a, v) > 0 for a in self.normals
        )

    def contains_interior(self, x):
        return self.fulldim and self.contains_relint(x)

    def relint_point(self):
        if self.is_zero:
            raise InputError("zero cone has empty relative interior")
        gens = self.rays if self.rays else self.lin[:1]
        total = gens[0]
        for g in gens[1:]:
            total = ops.vadd(total, g)
        return Ray(ops.primitive(total))

    def interior_point(self):
        if not self.fulldim:
            raise InputError(
                f"cone is not full-dimensional (dim {self.dim()} in R^{self.n}); "
                "no interior point exists"
            )
        return self.relint_point()

    def negate(self):
        return Cone(
            self.n,
            tuple(sorted(ops.vneg(r) for r in self.rays)),
            self.lin,
            tuple(sorted(ops.vneg(a) for a in self.normals)),
            self.eqs,
        )

    def key(self):
        return (self.n, self.rays, self.lin, self.normals, self.eqs)


def _unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def _as_ivec(v, n):
    if isinstance(v, Ray):
        t = v.coords
    else:
        t = tuple(v)
        if any(isinstance(x, Fraction) and x.denominator != 1 for x in t):
            t = Ray.from_exact(t).coords if any(t) else tuple(0 for _ in t)
        else:
            t = ops.primitive(tuple(int(x) for x in t))
    if len(t) != n:
        raise DimensionError(f"expected dimension {n}, got {len(t)}")
    if not any(t):
        raise InputError("zero vector in cone data")
    return t


class WholeSphere:
    """Trace of a hull whose Euclidean hull contains the origin."""

    def __init__(self, n):
        self.n = n

    def __eq__(self, other):
        return isinstance(other, WholeSphere) and other.n == self.n

    def __repr__(self):
        return f"WholeSphere(S^{self.n - 1})"


def minkowski_sum(a, b):
    """Closed conic hull of the generators of both cones, minimal forms."""
    if a.n != b.n:
        raise DimensionError("cones live in different ambient dimensions")
    return Cone.from_rays(a.n, a.generators() + b.generators())


def hull_trace(cone):
    """Sphere trace of a generator hull under the paper-facing convention."""
    if cone.lineality:
        return WholeSphere(cone.n)
    return cone


@dataclass(frozen=True)
class Cell:
    """A cone together with a relative-openness flag.

    An open cell's sphere trace is the relative interior of the cone's
    trace; a closed cell traces to the full closed spherical polytope.
    """

    cone: Cone
    open_: bool = True

    def contains(self, x):
        if self.open_:
            return self.cone.contains_relint(x)
        return self.cone.contains_closed(x)

    @property
    def n(self):
        return self.cone.n

    def key(self):
        return self.cone.key() + (self.open_,)


def interior_point(cone):
    return cone.interior_point()
