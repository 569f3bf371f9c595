"""Randomized cross-checks for the exact engine.

Every sample is a rational ray with bounded denominators, so each probe
is itself an exact computation: the sampler can fail to find a
counterexample, but it can never report a false one.  Two independent
decision paths (balanced-subset feasibility vs the hull cones) are
compared point by point; any disagreement is a bug and raises.
"""

import random
from dataclasses import dataclass

from tamesphere import _lp, ops
from tamesphere.cones import minkowski_sum
from tamesphere.errors import InputError, InternalInvariantError
from tamesphere.exact_core import Ray
from tamesphere.tameness import is_balanced, is_m_tame


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    samples: int = 1000
    denominator_bound: int = 32

    def rng(self):
        return random.Random(self.seed)


def random_ray(rng, bound, n=3):
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(n))
        if any(v):
            return Ray.from_exact(v)


def cell_point(rng, cone, bound):
    """Random strictly interior rational point: positive random weights
    on the extreme generators."""
    gens = cone.generators()
    acc = (0,) * cone.n
    for g in gens:
        w = rng.randint(1, bound)
        acc = ops.vadd(acc, ops.vscale(w, tuple(g)))
    return Ray.from_exact(acc)


def falsify_tameness(region, m, cfg):
    """Search for a balanced <= m point subset with points drawn from
    random open cells.  A returned witness verifies exactly; None is
    evidence of tameness, not proof."""
    if m < 1:
        raise InputError("m must be at least 1")
    rng = cfg.rng()
    cells = region.cells
    if not cells:
        return None
    for _ in range(cfg.samples):
        size = rng.randint(1, m)
        pts = [
            cell_point(rng, rng.choice(cells).cone, cfg.denominator_bound)
            for _ in range(size)
        ]
        w = is_balanced(list({p.coords: p for p in pts}.values()))
        if w is not None:
            return w
    return None


def _nonaddable_direct(region, x):
    """Is -x in the open 2-hull, decided by raw feasibility LPs only?

    Single cells are tested by strict sign evaluation; for a cell pair
    (K_i, K_j) we ask for u in int K_i and t > 0 with
    K_j-normals . (t(-x) - u) > 0, i.e. -x in int K_i + int K_j,
    eliminating the second point.  No hull cones are constructed.
    """
    nx = ops.vneg(x.coords if isinstance(x, Ray) else tuple(x))
    n = region.n
    cells = region.cells
    for c in cells:
        if all(ops.dot_sign(a, nx) > 0 for a in c.cone.normals):
            return True
    for i in range(len(cells)):
        ai = [tuple(a) for a in cells[i].cone.normals]
        for j in range(i + 1, len(cells)):
            aj = [tuple(a) for a in cells[j].cone.normals]
            # variables (u_1..u_n, t)
            rows = [a + (0,) for a in ai]
            for a in aj:
                rows.append(tuple(-ak for ak in a) + (ops.vdot(a, nx),))
            rows.append((0,) * n + (1,))
            if _lp.strict_feasible(rows, [], n + 1) is not None:
                return True
    return False


def _hull_cones(region):
    out = []
    cells = region.cells
    for i in range(len(cells)):
        for j in range(i, len(cells)):
            out.append(minkowski_sum(cells[i].cone, cells[j].cone))
    return out


def cross_check_addable(region, cfg):
    """Compare the two characterizations of non-addability on random
    rational rays; disagreement is escalated, never swallowed."""
    verdict = is_m_tame(region, region.n)
    if not verdict.tame:
        raise InputError("cross_check_addable requires a tame region")
    rng = cfg.rng()
    hulls = _hull_cones(region)
    checked = addable = 0
    for _ in range(cfg.samples):
        x = random_ray(rng, cfg.denominator_bound, region.n)
        direct = _nonaddable_direct(region, x)
        nx = ops.vneg(x.coords)
        via_hulls = any(h.contains_interior(nx) for h in hulls)
        if direct != via_hulls:
            raise InternalInvariantError(
                f"addability disagreement at {x}: direct={direct} hulls={via_hulls}"
            )
        checked += 1
        if not direct:
            addable += 1
    return {
        "samples": checked,
        "addable": addable,
        "non_addable": checked - addable,
        "disagreements": 0,
        "seed": cfg.seed,
        "denominator_bound": cfg.denominator_bound,
    }
