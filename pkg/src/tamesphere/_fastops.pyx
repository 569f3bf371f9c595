# cython: language_level=3
"""Compiled integer-vector kernels.

Semantics must match tamesphere._pyops exactly: inputs are tuples of
Python ints of arbitrary size, results are plain ints or tuples of ints.
The speedup comes from compiled loops and call overhead, not from
machine arithmetic, so exactness is preserved.
"""

from math import gcd as _gcd


def vdot(a, b):
    cdef Py_ssize_t i, n = len(a)
    s = 0
    for i in range(n):
        s += a[i] * b[i]
    return s


def dot_sign(a, b):
    cdef Py_ssize_t i, n = len(a)
    s = 0
    for i in range(n):
        s += a[i] * b[i]
    if s > 0:
        return 1
    if s < 0:
        return -1
    return 0


def cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def vneg(a):
    cdef Py_ssize_t i, n = len(a)
    return tuple([-a[i] for i in range(n)])


def vadd(a, b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] + b[i] for i in range(n)])


def vscale(k, a):
    cdef Py_ssize_t i, n = len(a)
    return tuple([k * a[i] for i in range(n)])


def primitive(v):
    cdef Py_ssize_t i, n = len(v)
    g = 0
    for i in range(n):
        g = _gcd(g, v[i])
    if g <= 1:
        return tuple(v)
    return tuple([v[i] // g for i in range(n)])


def sign_vector(x, normals):
    return tuple([dot_sign(n, x) for n in normals])


def angle_cmp2(p, q):
    cdef int hp = 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1
    cdef int hq = 0 if (q[1] > 0 or (q[1] == 0 and q[0] > 0)) else 1
    if hp != hq:
        return -1 if hp < hq else 1
    c = p[0] * q[1] - p[1] * q[0]
    return -1 if c > 0 else (1 if c < 0 else 0)
