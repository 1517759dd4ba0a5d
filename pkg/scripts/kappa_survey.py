#!/usr/bin/env python3
"""Survey kappa_p and eta_0 over odd primes and print a short digest.

    python scripts/kappa_survey.py --max-p 100000 --out survey.csv
"""

import argparse
import collections
import time

from fermat_zeros.cli import render_survey, survey_summary
from fermat_zeros.parallel import default_jobs
from fermat_zeros.relations import sqrt_claim_survey


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=20000)
    ap.add_argument("--jobs", type=int, default=default_jobs())
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    start = time.perf_counter()
    rows = sqrt_claim_survey(args.max_p, jobs=args.jobs)
    elapsed = time.perf_counter() - start

    summary = survey_summary(rows)
    kappas = collections.Counter(r.kappa_p for r in rows)
    eta = [r.eta_0 for r in rows]
    print(f"{len(rows)} primes up to {args.max_p} in {elapsed:.1f}s")
    print(f"kappa distribution: {dict(sorted(kappas.items()))}")
    print(f"eta_0: min {min(eta)}, max {max(eta)}, mean {sum(eta) / len(eta):.2f}")
    print(f"max kappa/sqrt(eta_0) = {summary['max_ratio']} at p = {summary['argmax_p']}")
    print(f"kappa_p > isqrt(p) at: {summary['exceeds_sqrt']}")
    print(f"Wieferich (base 2): {[r.p for r in rows if r.wieferich_base2]}")
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(render_survey(rows, "csv"))


if __name__ == "__main__":
    main()
