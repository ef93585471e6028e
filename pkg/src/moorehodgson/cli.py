"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
3 verification failure.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from . import _backend, generator, oracle
from .algorithm import is_oppositely_ordered, solve, solve_fast, solve_weighted_opposite
from .errors import PreconditionError, SchedulingError
from .instance_io import read_instance, render_trace, solution_to_json, write_instance

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_VERIFY = 0, 1, 2, 3
CHECKS = ("opt", "prop1", "lemma1", "induction", "fast-equiv")
MAX_BENCH_N = 20_000_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ids(ids) -> str:
    return " ".join(map(str, ids))


def cmd_solve(args) -> int:
    instance = read_instance(args.file)
    if args.trace and args.algo == "fast":
        raise UsageError("--trace needs --algo naive; the fast solver records no trace")
    trace = None
    if args.weighted and not is_oppositely_ordered(instance):
        solve_weighted_opposite(instance)  # raises the precondition error
    if args.algo == "naive":
        solution, trace = solve(instance, backend=args.backend)
    else:
        solution = solve_fast(instance, backend=args.backend)

    if args.json:
        print(solution_to_json(solution))
    else:
        print(f"Schedule: {_ids(solution.schedule)}")
        print(f"On time: {_ids(solution.on_time)}")
        print(f"Rejected Jobs: {', '.join(map(str, solution.rejected))}")
        print("Completion times: " + " ".join(f"{j}:{c}" for j, c in solution.completion_times.items()))
        print(f"{solution.num_late} late")
        if args.weighted:
            print(f"weighted late: {solution.weighted_late}")
    if args.trace:
        print()
        print(render_trace(instance, trace), end="")
    return EXIT_OK


def _run_check(check: str, instance, weighted: bool) -> bool | None:
    """True/False for pass/fail, None when the check does not apply."""
    if check == "opt":
        if weighted:
            solution, _ = solve_weighted_opposite(instance)
            return solution.weighted_late == oracle.brute_force(instance, True).min_objective
        return solve(instance)[0].num_late == oracle.brute_force(instance).min_objective
    if check == "fast-equiv":
        return solve(instance)[0] == solve_fast(instance)
    if check == "prop1":
        return oracle.check_prop1(instance)
    if oracle.rejection_choice(instance) is None:
        return None
    if check == "lemma1":
        return oracle.check_lemma1(instance)
    return oracle.check_induction_step(instance)


def cmd_verify(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in checks if c not in CHECKS]
    if bad or not checks:
        raise UsageError(f"unknown checks {bad}; choose from {', '.join(CHECKS)}")
    if args.max_n > oracle.DEFAULT_CAP or args.max_n < 0:
        raise UsageError(f"--max-n must be within [0, {oracle.DEFAULT_CAP}]")
    if args.count < 0:
        raise UsageError("--count must be non-negative")

    tally = {c: [0, 0, 0] for c in checks}  # pass, fail, skipped
    first_failure = None
    instances = generator.suite(
        args.seed, args.count, args.max_n, p_max=args.p_max, weighted_opposite=args.weighted
    )
    for index, instance in enumerate(instances):
        for check in checks:
            outcome = _run_check(check, instance, args.weighted)
            slot = 2 if outcome is None else (0 if outcome else 1)
            tally[check][slot] += 1
            if outcome is False and first_failure is None:
                first_failure = (index, check, instance)

    for check in checks:
        passed, failed, skipped = tally[check]
        ran = passed + failed
        note = f" ({skipped} not applicable)" if skipped else ""
        print(f"{check}: {passed}/{ran} pass{note}")
    if first_failure is not None:
        index, check, instance = first_failure
        print(f"first failure: instance {index}, check {check}")
        print(write_instance(instance), end="")
        return EXIT_VERIFY
    return EXIT_OK


def cmd_gen(args) -> int:
    distribution_flags = (args.seed, args.p_max, args.d_mode, args.weighted_opposite or None)
    if args.family is not None:
        if any(f is not None for f in distribution_flags):
            raise UsageError("--family cannot be combined with --seed, --p-max, --d-mode or --weighted-opposite")
        instance = generator.adversarial_family(args.family, args.n)
    else:
        spec = generator.GenSpec(
            seed=0 if args.seed is None else args.seed,
            n=args.n,
            p_max=30 if args.p_max is None else args.p_max,
            d_mode=args.d_mode or "uniform",
            weighted_opposite=args.weighted_opposite,
        )
        instance = generator.generate(spec)
    text = write_instance(instance)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.n > MAX_BENCH_N:
        raise UsageError(f"-n {args.n} exceeds the memory guard of {MAX_BENCH_N} jobs")
    if args.repeat < 1:
        raise UsageError("--repeat must be at least 1")
    instance = generator.generate(generator.GenSpec(args.seed, args.n, args.p_max, "tight"))
    instance.columns  # column extraction is not part of the timing

    naive = solve(instance, backend=args.backend)[0]
    fast = solve_fast(instance, backend=args.backend)
    if naive != fast:
        print("naive and fast solvers disagree; refusing to report timings", file=sys.stderr)
        return EXIT_VERIFY

    if args.algo == "naive":
        run = lambda: solve(instance, backend=args.backend)
    else:
        run = lambda: solve_fast(instance, backend=args.backend)
    times = []
    for _ in range(args.repeat):
        start = time.perf_counter()
        run()
        times.append(time.perf_counter() - start)
    best, median = min(times), statistics.median(times)
    rate = args.n / best if best > 0 else float("inf")
    backend = args.backend if args.backend != "auto" else _backend.ACTIVE
    print(f"algo={args.algo} backend={backend} n={args.n} seed={args.seed} repeat={args.repeat}")
    print(f"num_late={fast.num_late}")
    print(f"min={best:.6f}s median={median:.6f}s throughput={rate:,.0f} jobs/s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="moorehodgson", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--backend", choices=("auto", *_backend.BACKENDS), default="auto", help="kernel backend"
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("file")
    p.add_argument("--weighted", action="store_true", help="minimize total weight of late jobs")
    p.add_argument("--algo", choices=("naive", "fast"), default="naive")
    p.add_argument("--trace", action="store_true", help="print the iteration table")
    p.add_argument("--json", action="store_true", help="emit one JSON solution record")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check solver and proof properties against the oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--p-max", type=int, default=30)
    p.add_argument("--weighted", action="store_true", help="use oppositely ordered weighted instances")
    p.add_argument("--checks", default="opt", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance")
    p.add_argument("--seed", type=int)
    p.add_argument("-n", type=int, default=10)
    p.add_argument("--p-max", type=int)
    p.add_argument("--d-mode", choices=generator.D_MODES)
    p.add_argument("--weighted-opposite", action="store_true")
    p.add_argument("--family", choices=generator.FAMILIES)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="time a solver on one generated instance")
    p.add_argument("-n", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p-max", type=int, default=30)
    p.add_argument("--algo", choices=("naive", "fast"), default="fast")
    p.add_argument("--repeat", type=int, default=5)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (SchedulingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
