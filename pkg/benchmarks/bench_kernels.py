"""Compare the compiled kernels with the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Each case is timed with ``timeit`` (best of ``repeat``) on both backends and
the outputs are checked to agree.
"""
from __future__ import annotations

import argparse
import json
import timeit

import numpy as np

from liekin import groups, kernels


def _algebra_batch(kind, batch, scale, rng):
    return groups.coeffs_to_matrix(kind, scale * rng.standard_normal((batch, kind.algebra_dim)))


def cases(rng):
    out = []
    for kind, batch in [(groups.SpecialOrthogonal(3), 4096), (groups.SpecialOrthogonal(8), 1024),
                        (groups.Unitary(4), 2048), (groups.Unitary(8), 512)]:
        a = _algebra_batch(kind, batch, 0.1, rng)
        g = groups.haar_sample(kind, rng, batch)
        out.append((f"expm {kind.tag} x{batch}", lambda b, a=a: kernels.expm_batch(a, backend=b)))
        out.append((f"g expm(a) {kind.tag} x{batch}",
                    lambda b, g=g, a=a: kernels.right_mul_expm(g, a, backend=b)))
    n = 100_000
    x = rng.uniform(-np.pi, np.pi, n)
    mu = rng.uniform(-np.pi, np.pi, n)
    var = rng.uniform(0.01, 4.0, n)
    out.append((f"wrapped normal x{n}",
                lambda b: kernels.wrapped_normal_terms(x, mu, var, 5, backend=b)))
    return out


def _agree(x, y):
    if isinstance(x, tuple):
        return max(_agree(u, v) for u, v in zip(x, y))
    return float(np.max(np.abs(np.asarray(x) - np.asarray(y))))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    if kernels._ckernels is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")
    rng = np.random.default_rng(0)
    rows = []
    print(f"{'case':32s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s} {'max diff':>9s}")
    for name, fn in cases(rng):
        times = {}
        for backend in ("python", "cython"):
            fn(backend)
            times[backend] = min(timeit.repeat(lambda: fn(backend), number=1, repeat=args.repeat))
        diff = _agree(fn("python"), fn("cython"))
        rows.append({"case": name, "python_s": times["python"], "cython_s": times["cython"],
                     "speedup": times["python"] / times["cython"], "max_abs_diff": diff})
        print(f"{name:32s} {1e3 * times['python']:10.2f} {1e3 * times['cython']:10.2f} "
              f"{rows[-1]['speedup']:8.2f} {diff:9.1e}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
