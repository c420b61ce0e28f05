"""Time the compiled kernels against the pure-Python fallback.

Usage::

    python benchmarks/bench_kernels.py [--order 2000] [--repeat 3]

Besides the raw kernels it times one end-to-end verification in a child
process for each backend (the backend is fixed at import time).
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from heckeq import _pykernels as py

try:
    from heckeq import _ckernels as cy
except ImportError:  # pragma: no cover
    cy = None


def cases(order, rng):
    dense = [rng.randint(-10**6, 10**6) for _ in range(order)]
    sparse = [0] * order
    for k in range(1, int((order * 2 / 3) ** 0.5) + 1):
        # pentagonal-like support, the common shape for eta products
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e < order:
                sparse[e] = -1 if k % 2 else 1
    sparse[0] = 1
    return {
        "conv dense": lambda m: m.conv(dense, dense, order),
        "conv sparse x dense": lambda m: m.conv(sparse, dense, order),
        "inv_unit sparse": lambda m: m.inv_unit(sparse, order),
        "geom_div": lambda m: m.geom_div(dense, 3, 2, order),
        "shift_axpy": lambda m: m.shift_axpy(list(dense), dense, 5, 7),
    }


def end_to_end(pure, rid, order):
    env = dict(os.environ, HECKEQ_PURE_PYTHON="1" if pure else "0")
    code = (f"import time; from heckeq.identities import verify; t=time.perf_counter(); "
            f"r=verify({rid!r}, {order}); print(r.status.value, time.perf_counter()-t)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True,
                         check=True).stdout.split()
    return out[0], float(out[1])


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--order", type=int, default=2000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    if cy is None:
        print("compiled kernels are not built; only the fallback is available")
        return 1
    rng = random.Random(args.seed)
    print(f"{'kernel':<22} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in cases(args.order, rng).items():
        assert fn(py) == fn(cy)
        tp = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:<22} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
    for rid, order in (("jacobi-cube", 300), ("eq-5-3", 200)):
        sp, tp = end_to_end(True, rid, order)
        sc, tc = end_to_end(False, rid, order)
        print(f"{'verify ' + rid + '@' + str(order):<22} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x  ({sp}/{sc})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
