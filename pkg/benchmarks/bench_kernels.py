"""Benchmark the compiled kernels against the pure-Python ones.

Runs each kernel on a fixed workload of random integer vectors (small
and large coordinates) and reports per-call timings for both backends.

Usage: python3 benchmarks/bench_kernels.py [--reps N]
"""

import argparse
import random
import time

from tamesphere import _pyops

try:
    from tamesphere import _fastops
except ImportError:
    _fastops = None


def workload(rng, count, digits):
    lo, hi = 10 ** (digits - 1), 10 ** digits
    vecs = []
    for _ in range(count):
        vecs.append(tuple(rng.randrange(lo, hi) * rng.choice((-1, 1))
                          for _ in range(3)))
    return vecs


def bench(mod, vecs, reps):
    out = {}
    pairs = list(zip(vecs, vecs[1:] + vecs[:1]))
    normals = vecs[:8]

    t = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            mod.vdot(a, b)
    out["vdot"] = time.perf_counter() - t

    t = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            mod.cross3(a, b)
    out["cross3"] = time.perf_counter() - t

    t = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            mod.dot_sign(a, b)
    out["dot_sign"] = time.perf_counter() - t

    t = time.perf_counter()
    for _ in range(reps):
        for a in vecs:
            mod.primitive(vadded(mod, a))
    out["primitive"] = time.perf_counter() - t

    t = time.perf_counter()
    for _ in range(reps):
        for a in vecs:
            mod.sign_vector(a, normals)
    out["sign_vector"] = time.perf_counter() - t

    t = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            mod.angle_cmp2(a[:2], b[:2])
    out["angle_cmp2"] = time.perf_counter() - t
    return out


def vadded(mod, a):
    return mod.vadd(mod.vscale(6, a), a)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=200)
    args = ap.parse_args()

    rng = random.Random(7)
    for digits in (3, 40):
        vecs = workload(rng, 100, digits)
        py = bench(_pyops, vecs, args.reps)
        print(f"-- {digits}-digit coordinates, "
              f"{args.reps * len(vecs)} calls per kernel --")
        if _fastops is None:
            print("compiled backend not available; pure Python only")
            for k, v in py.items():
                print(f"{k:12s} python {v:8.4f}s")
            continue
        fast = bench(_fastops, vecs, args.reps)
        for k in py:
            ratio = py[k] / fast[k] if fast[k] else float("inf")
            print(f"{k:12s} python {py[k]:8.4f}s   "
                  f"compiled {fast[k]:8.4f}s   x{ratio:.2f}")
        print()


if __name__ == "__main__":
    main()
