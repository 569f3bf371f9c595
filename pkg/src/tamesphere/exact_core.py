"""Exact rational vectors, rays, and strict linear feasibility.

A Ray is a point of S^{n-1} represented by a primitive integer vector
(the canonical representative of its positive-scaling class).  All
predicates on rays reduce to integer arithmetic; all feasibility
decisions go through the exact simplex in tamesphere._lp.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from tamesphere import _lp, ops
from tamesphere.errors import ContractViolation, DimensionError, InputError

Rational = Fraction


def parse_rational(s):
    """Parse "p/q" or "p" (base 10, q > 0)."""
    try:
        q = Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {s!r}") from exc
    return q


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _to_int_vector(values):
    fracs = [Fraction(v) for v in values]
    mult = lcm(*(f.denominator for f in fracs)) if fracs else 1
    ints = tuple(int(f * mult) for f in fracs)
    return ops.primitive(ints)


@dataclass(frozen=True)
class Ray:
    """A nonzero rational vector modulo positive scaling, stored primitive."""

    coords: tuple

    @classmethod
    def of(cls, *values):
        return cls.from_exact(values)

    @classmethod
    def from_exact(cls, values):
        ints = _to_int_vector(values)
        if not any(ints):
            raise InputError("zero vector is not a ray")
        return cls(ints)

    @property
    def n(self):
        return len(self.coords)

    def dot(self, other):
        v = other.coords if isinstance(other, Ray) else tuple(other)
        if len(v) != len(self.coords):
            raise DimensionError("ray dimension mismatch")
        return ops.vdot(self.coords, v)

    def __neg__(self):
        return Ray(ops.vneg(self.coords))

    def unoriented(self):
        """Canonical representative ignoring orientation (for circles)."""
        for x in self.coords:
            if x:
                return self if x > 0 else -self
        raise InputError("zero vector is not a ray")

    def serialize(self):
        return [str(x) for x in self.coords]

    def __repr__(self):
        return f"Ray{self.coords}"


def ray_from_fractions(vec):
    return Ray.from_exact(vec)


@dataclass(frozen=True)
class LinearSystem:
    """Rows requiring row.v > 0 (strict) or row.v >= 0 (weak)."""

    strict_rows: tuple
    weak_rows: tuple = ()

    @classmethod
    def make(cls, strict_rows, weak_rows=()):
        strict = tuple(tuple(Fraction(x) for x in r) for r in strict_rows)
        weak = tuple(tuple(Fraction(x) for x in r) for r in weak_rows)
        dims = {len(r) for r in strict + weak}
        if len(dims) > 1:
            raise DimensionError("rows of mixed dimension")
        return cls(strict, weak)

    @property
    def n(self):
        for r in self.strict_rows + self.weak_rows:
            return len(r)
        return 0


def solve_strict(system):
    """A canonical ray v with row.v > 0 (strict) / >= 0 (weak), or None."""
    n = system.n
    if n < 1:
        raise InputError("system has no columns")
    v = _lp.strict_feasible(system.strict_rows, system.weak_rows, n)
    if v is None:
        return None
    ray = Ray.from_exact(v)
    for row in system.strict_rows:
        if ray.dot(row) <= 0:
            raise ContractViolation("strict witness failed substitution")
    for row in system.weak_rows:
        if ray.dot(row) < 0:
            raise ContractViolation("weak witness failed substitution")
    return ray


def farkas_certificate(system):
    """Nonnegative coefficients with zero weighted row sum, exact.

    Requires the system to be strictly infeasible; raises
    ContractViolation otherwise.  The certificate is scaled to primitive
    integers and is not all zero on the strict rows.
    """
    rows = list(system.strict_rows) + list(system.weak_rows)
    strict_idx = range(len(system.strict_rows))
    y = _lp.nonneg_nullcomb(rows, strict_idx)
    if y is None:
        if solve_strict(system) is not None:
            raise ContractViolation("farkas_certificate called on a feasible system")
        raise ContractViolation("no certificate found for an infeasible system")
    mult = lcm(*(c.denominator for c in y))
    ints = ops.primitive(tuple(int(c * mult) for c in y))
    n = system.n
    total = [0] * n
    for coeff, row in zip(ints, rows):
        for k in range(n):
            total[k] += coeff * Fraction(row[k])
    if any(total):
        raise ContractViolation("certificate failed substitution")
    if not any(ints[i] for i in strict_idx):
        raise ContractViolation("certificate vanishes on strict rows")
    return tuple(Fraction(c) for c in ints)
