"""Compare the two normal-form kernels.

Times the diagonalization step on random dense matrices and on the
boundary matrices of a realistic chain complex (the flagified
projective-plane alphabet with the two-point reference action).  Runs
fine without the compiled extension; it then just reports the pure
Python timings.

    python3 benchmarks/bench_snf.py [--sizes 20 40 60] [--repeat 3]
"""

import argparse
import random
import time

from tracehom import _snf_py
from tracehom.chains import DELTA, build_complex
from tracehom.msets import x0_mset
from tracehom.simplicial import barycentric_flagification

try:
    from tracehom import _snf_core
except ImportError:
    _snf_core = None

RP2_TRIANGLES = ["124", "126", "134", "135", "156",
                 "235", "236", "245", "346", "456"]


def random_rows(rng, size):
    return [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]


def best_of(kernel, rows, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        kernel.diagonalize(rows)
        best = min(best, time.perf_counter() - start)
    return best


def workloads(sizes, seed):
    rng = random.Random(seed)
    for size in sizes:
        yield f"random {size}x{size}", random_rows(rng, size)
    cx = build_complex(x0_mset(barycentric_flagification(RP2_TRIANGLES)),
                       DELTA)
    for n in range(1, cx.top + 1):
        d = cx.boundary(n)
        yield f"boundary d_{n} ({d.rows}x{d.cols})", d.to_rows()


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[20, 40, 60])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    if _snf_core is None:
        print("compiled kernel not built; timing the python kernel only")
    header = f"{'workload':<28}{'python':>12}"
    if _snf_core is not None:
        header += f"{'compiled':>12}{'speedup':>10}"
    print(header)
    for name, rows in workloads(args.sizes, args.seed):
        t_py = best_of(_snf_py, rows, args.repeat)
        line = f"{name:<28}{t_py * 1000:>10.2f}ms"
        if _snf_core is not None:
            t_c = best_of(_snf_core, rows, args.repeat)
            line += f"{t_c * 1000:>10.2f}ms{t_py / t_c:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
