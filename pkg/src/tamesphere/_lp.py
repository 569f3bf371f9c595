"""Exact linear programming over the rationals.

A small dense two-phase simplex with Bland's rule.  Every coefficient is
a Fraction, so feasibility decisions and optimal values are exact.  The
wrappers at the bottom phrase the handful of LP shapes the rest of the
package needs (strict homogeneous feasibility, positive null
combinations, grouped hemisphere searches, cone membership).

Problem form for ``solve_lp``: maximize c.x subject to rows (a, b, kind)
with kind in {"le", "ge", "eq"} and x >= 0.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class Unbounded(Exception):
    pass


class Infeasible(Exception):
    pass


def _pivot(tab, obj, basis, r, col):
    prow = tab[r]
    inv = ONE / prow[col]
    tab[r] = prow = [v * inv for v in prow]
    for i, row in enumerate(tab):
        if i != r and row[col]:
            f = row[col]
            tab[i] = [v - f * p for v, p in zip(row, prow)]
    if obj[col]:
        f = obj[col]
        for j, p in enumerate(prow):
            obj[j] -= f * p
    basis[r] = col


def _run(tab, obj, basis, ncols):
    # Bland's rule: entering = lowest-index improving column, leaving =
    # min ratio with lowest basis index on ties.  Guarantees termination.
    while True:
        col = -1
        for j in range(ncols):
            if obj[j] > 0:
                col = j
                break
        if col < 0:
            return
        best = None
        r = -1
        for i, row in enumerate(tab):
            a = row[col]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[r]):
                    best = ratio
                    r = i
        if r < 0:
            raise Unbounded
        _pivot(tab, obj, basis, r, col)


def solve_lp(c, rows):
    """Maximize c.x over x >= 0 subject to rows of (coeffs, rhs, kind).

    Returns (value, x).  Raises Infeasible or Unbounded.
    """
    n = len(c)
    rows = [(list(a), Fraction(b), kind) for a, b, kind in rows]
    for i, (a, b, kind) in enumerate(rows):
        if len(a) != n:
            raise ValueError("row length mismatch")
        if b < 0:
            if kind == "le":
                kind = "ge"
            elif kind == "ge":
                kind = "le"
            rows[i] = ([-x for x in a], -b, kind)

    m = len(rows)
    nslack = sum(1 for r in rows if r[2] in ("le", "ge"))
    art_rows = [i for i, r in enumerate(rows) if r[2] in ("eq", "ge")]
    nart = len(art_rows)
    ncols = n + nslack + nart  # + rhs
    tab = []
    basis = [0] * m
    si = 0
    ai = 0
    for i, (a, b, kind) in enumerate(rows):
        row = [Fraction(x) for x in a] + [ZERO] * (nslack + nart) + [b]
        if kind == "le":
            row[n + si] = ONE
            basis[i] = n + si
            si += 1
        elif kind == "ge":
            row[n + si] = -ONE
            row[n + nslack + ai] = ONE
            basis[i] = n + nslack + ai
            si += 1
            ai += 1
        else:
            row[n + nslack + ai] = ONE
            basis[i] = n + nslack + ai
            ai += 1
        tab.append(row)

    if nart:
        # Phase 1: maximize -sum(artificials).
        obj = [ZERO] * (ncols + 1)
        for j in range(n + nslack, ncols):
            obj[j] = -ONE
        for i in range(m):
            if basis[i] >= n + nslack:
                row = tab[i]
                for j in range(ncols + 1):
                    obj[j] += row[j]
        _run(tab, obj, basis, n + nslack)  # artificials never re-enter
        if obj[-1] > 0:
            # residual = sum of artificials still positive
            raise Infeasible
        for i in range(m):
            if basis[i] >= n + nslack:
                # Basic artificial at zero level: pivot it out if possible.
                row = tab[i]
                col = next((j for j in range(n + nslack) if row[j]), -1)
                if col >= 0:
                    _pivot(tab, obj, basis, i, col)
        keep = [i for i in range(m) if basis[i] < n + nslack]
        tab = [tab[i][: n + nslack] + [tab[i][-1]] for i in keep]
        basis = [basis[i] for i in keep]
        m = len(tab)
        ncols = n + nslack

    obj = [ZERO] * (ncols + 1)
    for j in range(n):
        obj[j] = Fraction(c[j])
    for i in range(m):
        b = basis[i]
        if b < n and obj[b]:
            f = obj[b]
            row = tab[i]
            for j in range(ncols + 1):
                obj[j] -= f * row[j]
    _run(tab, obj, basis, ncols)

    x = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            x[b] = tab[i][-1]
    value = sum(Fraction(c[j]) * x[j] for j in range(n))
    return value, x


# ---------------------------------------------------------------------------
# Feasibility wrappers


def strict_feasible(strict_rows, weak_rows, n):
    """A vector v with a.v > 0 on strict rows and a.v >= 0 on weak rows.

    Returns a tuple of Fractions, or None when no such v exists.  Free v
    is split as p - q; strictness is a slack t maximized up to 1, so the
    optimum is 0 or 1 and the decision is exact.
    """
    strict_rows = list(strict_rows)
    weak_rows = list(weak_rows)
    if not strict_rows:
        return _nonzero_weak(weak_rows, n)
    nv = 2 * n + 1  # p, q, t
    rows = []
    for a in strict_rows:
        coeffs = [-x for x in a] + [Fraction(x) for x in a] + [ONE]
        rows.append((coeffs, ZERO, "le"))
    for a in weak_rows:
        coeffs = [-x for x in a] + [Fraction(x) for x in a] + [ZERO]
        rows.append((coeffs, ZERO, "le"))
    tcol = [ZERO] * (nv - 1) + [ONE]
    rows.append((tcol, ONE, "le"))
    c = tcol
    value, x = solve_lp(c, rows)
    if value <= 0:
        return None
    return tuple(x[i] - x[n + i] for i in range(n))


def _nonzero_weak(weak_rows, n):
    """A nonzero v with a.v >= 0 for all rows, or None."""
    for i in range(n):
        for s in (1, -1):
            rows = []
            for a in weak_rows:
                coeffs = [-x for x in a] + [Fraction(x) for x in a]
                rows.append((coeffs, ZERO, "le"))
            c = [ZERO] * (2 * n)
            c[i if s > 0 else n + i] = ONE
            box = [ZERO] * (2 * n)
            box[i if s > 0 else n + i] = ONE
            rows.append((box, ONE, "le"))
            value, x = solve_lp(c, rows)
            if value > 0:
                return tuple(x[j] - x[n + j] for j in range(n))
    return None


def nonneg_nullcomb(vectors, strict_idx):
    """y >= 0 with sum y_i v_i = 0 and sum over strict_idx positive.

    Returns the list of coefficients or None.  This is the Farkas /
    Gordan certificate side: maximize the strict mass under y <= 1.
    """
    vectors = list(vectors)
    m = len(vectors)
    if m == 0:
        return None
    n = len(vectors[0])
    rows = []
    for k in range(n):
        coeffs = [Fraction(v[k]) for v in vectors]
        rows.append((coeffs, ZERO, "eq"))
    for i in range(m):
        box = [ZERO] * m
        box[i] = ONE
        rows.append((box, ONE, "le"))
    c = [ZERO] * m
    for i in strict_idx:
        c[i] = ONE
    value, y = solve_lp(c, rows)
    if value <= 0:
        return None
    return y


def positive_nullcomb(vectors):
    """mu > 0 (componentwise) with sum mu_i v_i = 0, or None.

    Decided exactly: write mu_i = t + s_i with s >= 0 and maximize t <= 1.
    """
    vectors = list(vectors)
    m = len(vectors)
    if m == 0:
        return None
    n = len(vectors[0])
    total = [sum(Fraction(v[k]) for v in vectors) for k in range(n)]
    nv = m + 1  # s_0..s_{m-1}, t
    rows = []
    for k in range(n):
        coeffs = [Fraction(v[k]) for v in vectors] + [total[k]]
        rows.append((coeffs, ZERO, "eq"))
    tcol = [ZERO] * m + [ONE]
    rows.append((tcol, ONE, "le"))
    value, x = solve_lp(tcol, rows)
    if value <= 0:
        return None
    t = x[m]
    return [x[i] + t for i in range(m)]


def positive_nullcomb_generic(vectors, weights):
    """Like positive_nullcomb but with a tie-breaking objective.

    weights perturb the objective so different vertex solutions of the
    feasible polytope are reached; used to escape degenerate witnesses.
    """
    vectors = list(vectors)
    m = len(vectors)
    if m == 0:
        return None
    n = len(vectors[0])
    total = [sum(Fraction(v[k]) for v in vectors) for k in range(n)]
    rows = []
    for k in range(n):
        coeffs = [Fraction(v[k]) for v in vectors] + [total[k]]
        rows.append((coeffs, ZERO, "eq"))
    tcol = [ZERO] * m + [ONE]
    rows.append((tcol, ONE, "le"))
    for i in range(m):
        box = [ZERO] * (m + 1)
        box[i] = ONE
        rows.append((box, ONE, "le"))
    eps = Fraction(1, 1000)
    c = [eps * Fraction(w) for w in weights[:m]] + [ONE]
    value, x = solve_lp(c, rows)
    t = x[m]
    if t <= 0:
        return None
    return [x[i] + t for i in range(m)]


def cone_member(target, gens):
    """Is target a nonnegative combination of gens?  Returns mu or None."""
    gens = list(gens)
    if not gens:
        return [] if all(x == 0 for x in target) else None
    n = len(target)
    m = len(gens)
    rows = []
    for k in range(n):
        coeffs = [Fraction(g[k]) for g in gens]
        rows.append((coeffs, Fraction(target[k]), "eq"))
    c = [ZERO] * m
    try:
        _, mu = solve_lp(c, rows)
    except Infeasible:
        return None
    return mu


def grouped_hemisphere(groups, strict_points=(), signs=None):
    """v with v.g >= 0 on all group vectors and positive mass per group.

    groups: list of vector lists; signs: optional per-group +-1 flips.
    strict_points: vectors requiring v.x > 0 outright.  Maximizes the
    minimum of (per-group generator sums, strict point values); returns
    v or None.  A full-dimensional group weakly on one side of v and not
    killed by v has positive generator sum, so v's boundary misses the
    group's relative interior.
    """
    groups = [list(g) for g in groups]
    if signs is None:
        signs = [1] * len(groups)
    if not groups and not strict_points:
        return None
    n = len(groups[0][0]) if groups else len(strict_points[0])
    nv = 2 * n + 1
    rows = []
    for gi, group in enumerate(groups):
        s = signs[gi]
        for g in group:
            coeffs = [-s * Fraction(x) for x in g] + [s * Fraction(x) for x in g] + [ZERO]
            rows.append((coeffs, ZERO, "le"))
        tot = [s * sum(Fraction(g[k]) for g in group) for k in range(n)]
        coeffs = [-x for x in tot] + [x for x in tot] + [ONE]
        rows.append((coeffs, ZERO, "le"))
    for x in strict_points:
        coeffs = [-Fraction(v) for v in x] + [Fraction(v) for v in x] + [ONE]
        rows.append((coeffs, ZERO, "le"))
    tcol = [ZERO] * (nv - 1) + [ONE]
    rows.append((tcol, ONE, "le"))
    value, sol = solve_lp(tcol, rows)
    if value <= 0:
        return None
    return tuple(sol[i] - sol[n + i] for i in range(n))
