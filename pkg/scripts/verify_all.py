#!/usr/bin/env python3
"""Run every verification suite at its default range and print one line per suite."""

import sys
import time

from fermat_zeros.suites import run_suite, summarize

start = time.perf_counter()
summary = summarize(run_suite("all"))
for name, s in summary["suites"].items():
    print(f"{'PASS' if s['passed'] else 'FAIL'} {name:<11} reports={s['primes_checked']:<4} cases={s['cases_checked']}")
print(f"total {time.perf_counter() - start:.1f}s")
sys.exit(0 if summary["passed"] else 1)
