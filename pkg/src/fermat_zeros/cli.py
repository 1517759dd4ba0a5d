"""Command-line front end: ``profile``, ``scan``, ``verify`` and ``survey``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .arith import MODULUS_CAP, PrimeContext
from .fermat import kappa, quotient_table, wieferich_scan
from .mirimanoff import orbit_decompose, zero_profile
from .parallel import default_jobs
from .relations import SurveyRow, sqrt_claim_survey
from .suites import SUITES, run_suite, summarize

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_prime(raw: str) -> PrimeContext:
    try:
        return PrimeContext(int(raw))
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None


def profile_data(ctx: PrimeContext) -> dict:
    table = quotient_table(ctx)
    profile = zero_profile(ctx, table)
    orbits = orbit_decompose(profile)
    return {
        "p": ctx.p,
        "kappa_from_quotients": kappa(ctx, table),
        "kappa_from_gamma": profile.kappa_from_gamma,
        "eta_0": profile.eta0,
        "zeros": list(profile.zeros),
        "orbits": [{"label": o.label.value, "members": o.sorted()} for o in orbits],
        "bound_quarter": ctx.bound_quarter,
        "bound_half": ctx.bound_half,
        "sqrt_floor": ctx.sqrt_floor,
        "wieferich_base2": table[2] == 0,
    }


def cmd_profile(args) -> int:
    ctx = _parse_prime(args.p)
    data = profile_data(ctx)
    if args.format == "json":
        _emit(json.dumps(data, indent=2) + "\n", args.out)
        return EXIT_OK
    lines = [
        f"p = {data['p']}",
        f"kappa (Fermat quotients) = {data['kappa_from_quotients']}",
        f"kappa (gamma zeros)      = {data['kappa_from_gamma']}",
        f"eta_0 = {data['eta_0']}",
        f"zeros = {data['zeros']}",
        f"wieferich_base2 = {str(data['wieferich_base2']).lower()}",
        "orbits:",
    ]
    lines += [f"  {o['label']:<10} {o['members']}" for o in data["orbits"]]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.base < 2:
        raise UsageError(f"base must be >= 2, got {args.base}")
    if not 3 <= args.limit or args.limit * args.limit > MODULUS_CAP:
        raise UsageError(f"limit must lie in [3, 2**31], got {args.limit}")
    hits = wieferich_scan(args.base, args.limit, jobs=args.jobs)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", f"q_p({args.base})"])
    writer.writerows([p, 0] for p in hits)
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    results = run_suite(args.suite, max_p=args.max_p, jobs=args.jobs, seed=args.seed)
    summary = summarize(results)
    for name, s in summary["suites"].items():
        status = "PASS" if s["passed"] else "FAIL"
        print(
            f"{status} {name}: {s['primes_checked']} reports, "
            f"{s['cases_checked']} cases, {s['violation_count']} violations",
            file=sys.stderr if args.out is None else sys.stdout,
        )
    if args.out:
        _emit(json.dumps(summary, indent=2) + "\n", args.out)
    else:
        _emit(json.dumps(summary) + "\n", None)
    return EXIT_OK if summary["passed"] else EXIT_VIOLATION


def survey_summary(rows: list[SurveyRow]) -> dict:
    best = max(rows, key=lambda r: (r.ratio, -r.p))
    return {
        "primes": len(rows),
        "max_ratio": f"{best.ratio:.6f}",
        "argmax_p": best.p,
        "exceeds_sqrt": [r.p for r in rows if r.exceeds_sqrt],
    }


def render_survey(rows: list[SurveyRow], fmt: str) -> str:
    summary = survey_summary(rows)
    if fmt == "json":
        payload = {"rows": [r.as_dict() for r in rows], "summary": summary}
        return json.dumps(payload, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["p", "kappa_p", "eta_0", "ratio", "bound_quarter", "sqrt_floor", "exceeds_sqrt", "wieferich_base2"]
    )
    for r in rows:
        writer.writerow(
            [
                r.p,
                r.kappa_p,
                r.eta_0,
                f"{r.ratio:.6f}",
                r.bound_quarter,
                r.sqrt_floor,
                str(r.exceeds_sqrt).lower(),
                str(r.wieferich_base2).lower(),
            ]
        )
    buf.write(f"# max_ratio={summary['max_ratio']} argmax_p={summary['argmax_p']}\n")
    buf.write("# exceeds_sqrt=" + " ".join(map(str, summary["exceeds_sqrt"])) + "\n")
    return buf.getvalue()


def cmd_survey(args) -> int:
    max_p = args.max_p if args.max_p is not None else 10_000
    if not 3 <= max_p or max_p * max_p > MODULUS_CAP:
        raise UsageError(f"--max-p must lie in [3, 2**31], got {max_p}")
    rows = sqrt_claim_survey(max_p, jobs=args.jobs)
    _emit(render_survey(rows, args.format), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--max-p", type=int, default=None, help="upper limit on p (suite-specific default)")
    shared.add_argument("--out", default=None, help="write output to FILE instead of stdout")
    shared.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes")
    shared.add_argument("--seed", type=int, default=0, help="seed for randomised spot checks")

    parser = argparse.ArgumentParser(
        prog="fermat-zeros",
        description="Fermat quotients and zeros of Mirimanoff polynomials modulo p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profile", parents=[shared], help="zero profile and orbits of one prime")
    p.add_argument("p")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_profile)

    s = sub.add_parser("scan", parents=[shared], help="primes with q_p(base) = 0")
    s.add_argument("base", type=int)
    s.add_argument("limit", type=int)
    s.set_defaults(func=cmd_scan)

    v = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    v.add_argument("suite", help=", ".join(SUITES))
    v.set_defaults(func=cmd_verify)

    sv = sub.add_parser("survey", parents=[shared], help="kappa_p against sqrt(eta_0) per prime")
    sv.add_argument("--format", choices=["csv", "json"], default="csv")
    sv.set_defaults(func=cmd_survey)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
