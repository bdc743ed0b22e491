"""Run every verification campaign at its default bounds and print a summary table.

Usage: python3 scripts/run_campaigns.py [--workers K] [--seed S] [--skip NAME ...]
"""

import argparse
import sys

from coxpoly.campaigns import CAMPAIGNS, run_campaign


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--skip", nargs="*", default=[], choices=sorted(CAMPAIGNS))
    args = parser.parse_args()

    all_passed = True
    print(f"{'campaign':<22}{'instances':>11}{'failures':>10}{'seconds':>10}")
    for name in CAMPAIGNS:
        if name in args.skip:
            continue
        s = run_campaign(name, seed=args.seed, workers=args.workers)
        all_passed &= s.passed
        print(f"{name:<22}{s.instances_checked:>11}{len(s.failures):>10}{s.elapsed:>10.1f}", flush=True)
    print("all passed" if all_passed else "FAILURES present")
    return 0 if all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
