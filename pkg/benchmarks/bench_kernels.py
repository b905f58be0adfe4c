"""Compare the compiled and pure-Python kernels on large products.

    python benchmarks/bench_kernels.py [--size 300] [--repeat 3]
"""

import argparse
import timeit

from hierzagreb import _pykernels
from hierzagreb.families import cycle, path

try:
    from hierzagreb import _ckernels
except ImportError:
    _ckernels = None


def workloads(size):
    g, h = path(size), cycle(size)
    gu, gv = g.edge_arrays
    hu, hv = h.edge_arrays
    full = b"\x01" * h.n
    alternate = bytes(x % 2 for x in range(h.n))

    def product(impl, mask):
        return lambda: impl.hier_edges(g.n, gu, gv, h.n, hu, hv, mask)

    nanotube = _pykernels.hier_edges(g.n, gu, gv, h.n, hu, hv, full)
    n = g.n * h.n

    return {
        f"nanotube P{size} x C{size} edges": lambda impl: product(impl, full),
        f"polyhex-like P{size} Pi C{size}(odd) edges": lambda impl: product(impl, alternate),
        f"indices of nanotube ({n} vertices)": lambda impl: (lambda: impl.degree_indices(n, *nanotube)),
        "subset sums of nanotube": lambda impl: (lambda: impl.subset_sums(n, *nanotube, bytes(x % 3 == 0 for x in range(n)))),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=300)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = [("python", _pykernels)]
    if _ckernels is not None:
        impls.append(("cython", _ckernels))
    else:
        print("compiled kernels not built; timing the pure-Python backend only")

    print(f"{'workload':<48}" + "".join(f"{name:>12}" for name, _ in impls) + ("     speedup" if len(impls) == 2 else ""))
    for label, make in workloads(args.size).items():
        times = []
        for _, impl in impls:
            fn = make(impl)
            times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
        row = f"{label:<48}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
