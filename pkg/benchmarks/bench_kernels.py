"""Time the compiled and pure-Python MC kernels on the same workload.

Usage: python benchmarks/bench_kernels.py [--n 12] [--order 53] [--repeat 3]
"""
import argparse
import time

import numpy as np

from mcxc import kernels
from mcxc.angular import lebedev_grid
from mcxc.fields import make_scene, sample
from mcxc.functionals import LOCAL_TOYS, get_functional


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=12, help="grid points per axis")
    parser.add_argument("--order", type=int, default=53, help="Lebedev order")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    field = sample(make_scene("gaussian_blob"), [(-2.5, 2.5)] * 3, args.n)
    ang = lebedev_grid(args.order)
    backends = kernels.available_backends()
    print(f"{len(field)} points x {len(ang)} directions, "
          f"threads={kernels.num_threads()}, backends={','.join(backends)}")
    print(f"{'functional':<14}{'python s':>12}{'compiled s':>12}{'speedup':>10}{'max diff':>12}")
    for fid in ["slater_lsda", *LOCAL_TOYS]:
        func = get_functional(fid)
        times, outs = {}, {}
        for b in backends:
            outs[b] = kernels.mc_local(func, field, ang, backend=b)
            times[b] = best_time(lambda: kernels.mc_local(func, field, ang, backend=b),
                                 args.repeat)
        if "compiled" in times:
            diff = max(float(np.abs(x - y).max())
                       for x, y in zip(outs["python"], outs["compiled"]))
            print(f"{fid:<14}{times['python']:>12.3f}{times['compiled']:>12.3f}"
                  f"{times['python'] / times['compiled']:>10.1f}{diff:>12.2e}")
        else:
            print(f"{fid:<14}{times['python']:>12.3f}{'-':>12}{'-':>10}{'-':>12}")


if __name__ == "__main__":
    main()
