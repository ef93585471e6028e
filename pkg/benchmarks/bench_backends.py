"""Compare the compiled and pure-Python kernel backends.

Usage: python benchmarks/bench_backends.py [--quick]
"""

import argparse
import time

from moorehodgson import _backend, solve, solve_fast
from moorehodgson.generator import GenSpec, adversarial_family, generate
from moorehodgson.oracle import brute_force

CASES = [
    # (label, spec, runner)
    ("fast   tight   n=1e6", GenSpec(3, 1_000_000, 30, "tight"), lambda i, b: solve_fast(i, backend=b)),
    ("fast   uniform n=1e6", GenSpec(3, 1_000_000, 30, "uniform"), lambda i, b: solve_fast(i, backend=b)),
    ("naive  tight   n=1e6", GenSpec(3, 1_000_000, 30, "tight"), lambda i, b: solve(i, backend=b)),
    ("naive  uniform n=3000", GenSpec(3, 3_000, 30, "uniform"), lambda i, b: solve(i, backend=b)),
    ("naive  all_ties n=3000", ("all_ties", 3_000), lambda i, b: solve(i, backend=b)),
    ("fast   all_late n=1e6", ("all_late", 1_000_000), lambda i, b: solve_fast(i, backend=b)),
    ("oracle uniform n=18", GenSpec(3, 18, 30, "uniform"), lambda i, b: brute_force(i, backend=b)),
]


def shrink(label, spec):
    """The --quick variant of a case: n=1e6 becomes n=1e5."""
    if not label.endswith("n=1e6"):
        return label, spec
    if isinstance(spec, tuple):
        return label[:-3] + "1e5", (spec[0], 100_000)
    return label[:-3] + "1e5", GenSpec(spec.seed, 100_000, spec.p_max, spec.d_mode)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="shrink the large cases to n=1e5")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = _backend.available()
    print(f"{'case':<24}" + "".join(f"{b:>12}" for b in backends) + "     speedup")
    for label, spec, run in CASES:
        if args.quick:
            label, spec = shrink(label, spec)
        inst = adversarial_family(*spec) if isinstance(spec, tuple) else generate(spec)
        inst.columns
        results, times = [], []
        for b in backends:
            t, result = best_of(lambda: run(inst, b), args.repeat)
            times.append(t)
            results.append(result[0] if isinstance(result, tuple) else result)
        assert all(r == results[0] for r in results), f"backends disagree on {label}"
        speedup = f"{times[-1] / times[0]:10.1f}x" if len(times) == 2 else ""
        print(f"{label:<24}" + "".join(f"{t:11.4f}s" for t in times) + speedup)


if __name__ == "__main__":
    main()
