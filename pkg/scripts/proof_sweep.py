#!/usr/bin/env python3
"""Machine-check the APN argument across whole parameter ranges.

Runs the full proof-step report for every valid tuple at n = 3 and
n = 6 and for seeded-random tuples at n = 12, printing one summary line
per field and every failing tuple with its failed check names.
"""

import argparse
import random
import sys
import time

from apnquad import enumerate_params, make_field, proof_report, random_params


def sweep(ctx, tuples, theta_samples, seed) -> int:
    bad = 0
    for params in tuples:
        report = proof_report(ctx, params, theta_samples=theta_samples, seed=seed)
        if not report.all_passed:
            bad += 1
            names = [c.name for c in report.checks if not c.passed]
            print(f"FAIL {params.as_dict()} -> {names}")
    return bad


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n12-samples", type=int, default=10)
    ap.add_argument("--theta-samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    failures = 0
    for n, k, s in ((3, 1, 2), (6, 2, 1)):
        ctx = make_field(n)
        t0 = time.monotonic()
        tuples = list(enumerate_params(ctx, k, s))
        failures += sweep(ctx, tuples, args.theta_samples, args.seed)
        print(f"n={n}: {len(tuples)} tuples, {time.monotonic() - t0:.1f}s")

    ctx = make_field(12)
    rng = random.Random(args.seed)
    picked = []
    seen = set()
    while len(picked) < args.n12_samples:
        p = random_params(ctx, 4, 5, rng)
        if p not in seen:
            seen.add(p)
            picked.append(p)
    t0 = time.monotonic()
    failures += sweep(ctx, picked, args.theta_samples, args.seed)
    print(f"n=12: {len(picked)} sampled tuples, {time.monotonic() - t0:.1f}s")

    print("all proof steps hold" if not failures else f"{failures} tuples failed")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
