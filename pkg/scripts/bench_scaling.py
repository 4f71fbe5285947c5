"""Time the manipulation solver on growing candidate counts.

Builds one random instance per size (fixed ballot and manipulator counts)
and reports wall-clock solve time next to the decision, to show the
polynomial scaling at sizes the exhaustive oracle cannot touch.

Usage: python3 scripts/bench_scaling.py [--sizes 10 20 50 100] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from schulze_wcm.model import ManipulationInstance
from schulze_wcm.sampling import random_profile
from schulze_wcm.solver import solve_wcm


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes", type=int, nargs="+", default=[10, 20, 50, 100, 200]
    )
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--ballots", type=int, default=20)
    parser.add_argument("--manipulators", type=int, default=5)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    for m in args.sizes:
        profile = random_profile(rng, m, ballots=(args.ballots, args.ballots))
        weights = tuple(rng.randint(1, 3) for _ in range(args.manipulators))
        instance = ManipulationInstance(profile, weights, rng.randrange(m))
        start = time.perf_counter()
        outcome = solve_wcm(instance)
        elapsed = time.perf_counter() - start
        answer = "yes" if outcome.decision else "no"
        print(
            f"m={m:>4}  {elapsed:8.3f}s  manipulable={answer}"
            f"  rule applications={outcome.rule_applications}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
