"""Compare the compiled census kernel against the pure-Python fallback.

Run after installing the package:

    python benchmarks/bench_census.py
    python benchmarks/bench_census.py --heavy
"""
import argparse
import time

from subcount.groups import GroupType
from subcount.oracle import census_backend, subgroup_census
from subcount.recurrence import count_hironaka


CASES = [
    ((1, 1, 1), 2),
    ((2, 2), 3),
    ((1, 1, 1, 1, 1), 2),
    ((1, 2, 2), 2),
    ((2, 2, 2), 2),
    ((1, 1, 2), 3),
    ((2, 3, 3), 2),
]

HEAVY_CASES = [
    ((2, 2, 4), 2),
    ((3, 3, 4), 2),
    ((1, 3, 3), 3),
]


def run_backend(t, p, backend):
    start = time.perf_counter()
    result = subgroup_census(t, p, backend=backend)
    return time.perf_counter() - start, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--heavy", action="store_true",
                        help="include the slowest comparison cases")
    args = parser.parse_args()

    if census_backend() != "compiled":
        print("compiled kernel not available; nothing to compare")
        print("(the package still works, every census runs on the fallback)")
        return

    cases = CASES + (HEAVY_CASES if args.heavy else [])
    print("%-14s %-6s %12s %12s %9s" % ("type", "prime", "compiled", "pure", "speedup"))
    total_c = total_p = 0.0
    for parts, p in cases:
        t = GroupType(parts)
        t_compiled, fast = run_backend(t, p, "compiled")
        t_pure, slow = run_backend(t, p, "pure")
        if fast.counts != slow.counts:
            raise SystemExit("backend disagreement on %s at p=%d" % (t, p))
        expected = tuple(count_hironaka(t, b).eval_at(p)
                         for b in range(t.weight + 1))
        if fast.counts != expected:
            raise SystemExit("census disagrees with recurrence on %s" % (t,))
        total_c += t_compiled
        total_p += t_pure
        print("%-14s %-6d %10.3fs %10.3fs %8.1fx"
              % (t, p, t_compiled, t_pure, t_pure / t_compiled))
    print("%-14s %-6s %10.3fs %10.3fs %8.1fx"
          % ("overall", "", total_c, total_p, total_p / total_c))


if __name__ == "__main__":
    main()
