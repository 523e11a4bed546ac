"""Time the compiled kernels against the pure-Python twin.

    python benchmarks/bench_kernels.py [--repeat N]

Each row runs the same call on both backends, checks the results agree and
reports the best of N wall-clock timings.
"""

import argparse
import math
import sys
import timeit

from eucrhythm import _kernels

CASES = [
    ("deep_masks(14)", lambda k: k.deep_masks(14)),
    ("argmax_masks(16, 5, chordal)", lambda k: k.argmax_masks(16, 5, "chordal")),
    ("argmax_masks(18, 9, geodesic)", lambda k: k.argmax_masks(18, 9, "geodesic")),
    ("pair_sums x 2000 (n=32)", lambda k: [k.pair_sums(tuple(range(0, 32, 3)), 32) for _ in range(2000)]),
    ("euclidean_string_counts(7, 4)", lambda k: k.euclidean_string_counts(7, 4)),
]


def agree(a, b):
    if isinstance(a, float) or isinstance(b, float):
        return math.isclose(a, b, rel_tol=1e-12, abs_tol=1e-12)
    if isinstance(a, dict):
        return a.keys() == b.keys() and all(agree(a[x], b[x]) for x in a)
    if isinstance(a, (list, tuple)):
        return len(a) == len(b) and all(agree(x, y) for x, y in zip(a, b))
    return a == b


def best_time(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)

    found = _kernels.backends()
    if "cython" not in found:
        print("compiled extension not built; run `python setup.py build_ext --inplace`")
        return 1
    py, cy = found["python"], found["cython"]
    print(f"{'kernel':<32} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for name, call in CASES:
        if not agree(call(py), call(cy)):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        t_py = best_time(lambda: call(py), args.repeat)
        t_cy = best_time(lambda: call(cy), args.repeat)
        print(f"{name:<32} {t_py:>11.4f} {t_cy:>11.4f} {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
