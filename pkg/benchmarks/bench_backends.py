"""Compare the compiled and pure-Python batch kernels on a few distributions.

Run with ``python3 benchmarks/bench_backends.py``.  Set ``ALDR_DISABLE_NUMBA=1``
to confirm the fallback path runs on its own.
"""

import argparse

import numpy as np

from aldr import _kernels, bench

CASES = {
    "478": [4, 7, 8],
    "binary-quarter": [1, 3],
    "geometric-16": [2**j for j in range(16)],
    "random-256": [int(x) for x in np.random.default_rng(0).integers(1, 400, size=256)],
}


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("-n", "--samples", type=int, default=200_000)
    p.add_argument("--runs", type=int, default=3)
    p.add_argument("--methods", default="aldr,fldr,alias")
    args = p.parse_args(argv)

    print(f"numba available: {_kernels.NUMBA is not None}")
    print("case\tmethod\tpython_ns\tnumba_ns\tspeedup\tidentical")
    for name, ws in CASES.items():
        for method in args.methods.split(","):
            res = bench.compare_backends(ws, N=args.samples, method=method, runs=args.runs)
            py = res["python"]["ns_per_sample"]
            nb = res.get("numba")
            if nb is None:
                print(f"{name}\t{method}\t{py:.1f}\t-\t-\t-")
            else:
                ratio = py / nb["ns_per_sample"]
                print(f"{name}\t{method}\t{py:.1f}\t{nb['ns_per_sample']:.1f}\t{ratio:.1f}x\t{nb['matches_python']}")


if __name__ == "__main__":
    main()
