"""Compare the numba kernels with the pure-numpy fallback.

    python3 benchmarks/bench_backends.py [--repeat 3]
"""

import argparse
import time

import numpy as np

from gallai_ramsey.coloring import DoubleStarSpec, EdgeColoring
from gallai_ramsey.detectors import find_mono_double_star, find_rainbow_triangle
from gallai_ramsey.partition import find_gallai_partition, generate_random_gallai
from gallai_ramsey.search import SearchOptions, SearchProblem, search_valid_coloring


def _search(problem, **kw):
    def run(backend):
        return search_valid_coloring(problem, options=SearchOptions(backend=backend, **kw)).stats.nodes
    return run


def _detectors(colorings, spec):
    def run(backend):
        hits = 0
        for c in colorings:
            hits += find_rainbow_triangle(c, backend) is None
            hits += find_mono_double_star(c, spec, backend) is None
        return hits
    return run


def _partitions(colorings):
    def run(backend):
        return sum(len(find_gallai_partition(c, backend)) for c in colorings)
    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(1)
    random_k9 = []
    for _ in range(300):
        mat = np.triu(rng.integers(0, 3, size=(9, 9)), 1)
        random_k9.append(EdgeColoring((mat + mat.T - np.eye(9, dtype=int)).astype(np.int16), 3))
    generated = [generate_random_gallai(30, 4, s)[0] for s in range(60)]

    cases = [
        ("search K8 k=2 S(2,2) exhausted", _search(SearchProblem(8, 2, DoubleStarSpec(2, 2)))),
        ("search K6 k=3 S(1,1) rainbow", _search(SearchProblem(6, 3, DoubleStarSpec(1, 1), True))),
        ("search K5 k=3 S(1,1) unpruned", _search(SearchProblem(5, 3, DoubleStarSpec(1, 1), True),
                                                   prune=False)),
        ("detectors 300 random K9", _detectors(random_k9, DoubleStarSpec(2, 1))),
        ("partition 60 generated K30", _partitions(generated)),
    ]
    print(f"{'case':<34} {'numba s':>10} {'numpy s':>10} {'speedup':>8}")
    for name, fn in cases:
        times = {}
        results = {}
        for backend in ("numba", "numpy"):
            results[backend] = fn(backend)  # warm-up / compile
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                fn(backend)
                best = min(best, time.perf_counter() - t)
            times[backend] = best
        assert results["numba"] == results["numpy"], name
        print(f"{name:<34} {times['numba']:>10.4f} {times['numpy']:>10.4f} "
              f"{times['numpy'] / max(times['numba'], 1e-9):>7.1f}x")


if __name__ == "__main__":
    main()
