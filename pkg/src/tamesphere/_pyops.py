"""Pure-Python integer-vector kernels.

Vectors are tuples of Python ints (arbitrary precision), so every
operation here is exact.  The compiled twin of this module is
tamesphere._fastops (built from _fastops.pyx); tamesphere.ops picks one
of the two at import time.  Keep the implementations in lockstep.
"""

from math import gcd


def vdot(a, b):
    s = 0
    for x, y in zip(a, b):
        s += x * y
    return s


def dot_sign(a, b):
    s = vdot(a, b)
    return (s > 0) - (s < 0)


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def vneg(a):
    return tuple(-x for x in a)


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vscale(k, a):
    return tuple(k * x for x in a)


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def sign_vector(x, normals):
    return tuple(dot_sign(n, x) for n in normals)


def angle_cmp2(p, q):
    """Compare nonzero 2-d integer vectors by angle ccw from the +x axis."""
    hp = 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1
    hq = 0 if (q[1] > 0 or (q[1] == 0 and q[0] > 0)) else 1
    if hp != hq:
        return -1 if hp < hq else 1
    c = p[0] * q[1] - p[1] * q[0]
    return -1 if c > 0 else (1 if c < 0 else 0)
