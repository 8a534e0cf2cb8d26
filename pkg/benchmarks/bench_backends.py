"""Compare the numba kernels against the pure-numpy fallback.

Times each kernel on a batch of synthetic cluster matrices, then the full
disassociate pipeline under both backends.

Run: python benchmarks/bench_backends.py --records 10000 --items 400 --size 25
"""

import argparse
import time

import numpy as np

from disassoc import kernels
from disassoc.anonymize import disassociate
from disassoc.covers import detect_all_covers
from disassoc.synth import zipf_dataset


def make_matrices(rng, count, max_rows, max_cols, density=0.35):
    out = []
    for _ in range(count):
        n = int(rng.integers(2, max_rows + 1))
        d = int(rng.integers(2, max_cols + 1))
        out.append((rng.random((n, d)) < density).astype(np.uint8))
    return out


def bench_kernels(backend, matrices, repeats):
    results = {}
    t0 = time.perf_counter()
    for _ in range(repeats):
        for B in matrices:
            backend.column_supports(B)
    results["column_supports"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for _ in range(repeats):
        for B in matrices:
            backend.cooccurrence(B)
    results["cooccurrence"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for _ in range(repeats):
        for B in matrices:
            cols = np.arange(min(3, B.shape[1]), dtype=np.int64)
            backend.itemset_support(B, cols)
    results["itemset_support"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for _ in range(repeats):
        for B in matrices:
            cols = np.arange(B.shape[1] // 2, dtype=np.int64)
            backend.conditional_pair_counts(B, B.shape[1] - 1, cols)
    results["conditional_pair_counts"] = time.perf_counter() - t0
    return results


def bench_pipeline(name, dataset, k, m, size):
    kernels.set_backend(name)
    t0 = time.perf_counter()
    tstar = disassociate(dataset, k, m, size)
    t1 = time.perf_counter()
    covers = detect_all_covers(tstar)
    t2 = time.perf_counter()
    return t1 - t0, t2 - t1, len(tstar.clusters), len(covers)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--clusters", type=int, default=2000, help="matrices per kernel batch")
    parser.add_argument("--max-rows", type=int, default=50)
    parser.add_argument("--max-cols", type=int, default=30)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--records", type=int, default=10_000, help="pipeline dataset size")
    parser.add_argument("--items", type=int, default=400)
    parser.add_argument("--size", type=int, default=25, help="pipeline max cluster size")
    parser.add_argument("-k", type=int, default=3)
    parser.add_argument("-m", type=int, default=2)
    args = parser.parse_args()

    names = kernels.available_backends()
    if "numba" not in names:
        print("numba backend unavailable; nothing to compare")
        return

    rng = np.random.default_rng(0)
    matrices = make_matrices(rng, args.clusters, args.max_rows, args.max_cols)

    # warm the jit before timing
    warm = matrices[0]
    nb = kernels.get_backend("numba")
    nb.column_supports(warm)
    nb.cooccurrence(warm)
    nb.itemset_support(warm, np.array([0], dtype=np.int64))
    nb.conditional_pair_counts(warm, 0, np.array([0], dtype=np.int64))

    print(f"kernel batch: {args.clusters} matrices <= {args.max_rows}x{args.max_cols}, "
          f"{args.repeats} repeats")
    timings = {name: bench_kernels(kernels.get_backend(name), matrices, args.repeats) for name in names}
    for fn in timings[names[0]]:
        line = f"  {fn:<26}"
        for name in names:
            line += f" {name}={timings[name][fn] * 1000:8.1f} ms"
        if "numpy" in timings and "numba" in timings:
            speedup = timings["numpy"][fn] / max(timings["numba"][fn], 1e-9)
            line += f"  ({speedup:.1f}x)"
        print(line)

    print(f"\npipeline: disassociate {args.records} records, {args.items} items, "
          f"k={args.k} m={args.m} size={args.size}")
    dataset = zipf_dataset(args.records, args.items, seed=0)
    original = kernels.active_backend
    try:
        for name in names:
            bench_pipeline(name, dataset, args.k, args.m, args.size)  # warm path
            t_dis, t_cov, nclusters, ncovers = bench_pipeline(
                name, dataset, args.k, args.m, args.size
            )
            print(
                f"  {name:<6} disassociate={t_dis * 1000:8.1f} ms  "
                f"covers={t_cov * 1000:7.1f} ms  ({nclusters} clusters, {ncovers} covers)"
            )
    finally:
        kernels.set_backend(original)


if __name__ == "__main__":
    main()
