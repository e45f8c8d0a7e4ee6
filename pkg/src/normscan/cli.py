"""Command-line interface.

Exit codes: 0 when every applicable claim passed, 1 when at least one
claim failed, 2 on usage or input errors.
"""

import argparse
import json
import sys

from .classfield import h4_report
from .primality import is_prime
from .quadforms import (
    ambiguous_class_count,
    class_number,
    is_cyclic_quartic_classgroup,
    reduced_forms,
)
from .representation import cornacchia, represent_bruteforce
from .verify import (
    DEFAULT_MAX_EXPONENT,
    TOOL,
    check_equivalence,
    emit_report,
    report_exit_code,
    scan_eisenstein,
    scan_gaussian,
    scan_mersenne,
    scan_sqrt2_analog,
)
from .sequences import NormSequenceKind

_SCANNERS = {
    "gaussian": scan_gaussian,
    "eisenstein": scan_eisenstein,
    "mersenne": scan_mersenne,
    "analog": scan_sqrt2_analog,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normscan",
        description="Generate and verify prime families of the form "
                    "x^2 + d*y^2 with divisibility constraints on x or y.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="scan a prime family and emit a report")
    scan.add_argument("family", choices=sorted(_SCANNERS))
    scan.add_argument("--max-exponent", type=int, default=None,
                      help="largest prime exponent to scan")
    scan.add_argument("--d", type=int, default=None, choices=(7, 31),
                      help="form coefficient (mersenne scans only)")
    scan.add_argument("--format", choices=("json", "csv"), default="json")
    scan.add_argument("--out", help="write the report to this file")
    scan.add_argument("--plot", help="render a figure of the report here")
    scan.add_argument("--threads", type=int, default=None,
                      help="worker threads (default: available parallelism)")

    rep = sub.add_parser("represent", help="solve n = x^2 + d*y^2")
    rep.add_argument("--d", type=int, required=True)
    rep.add_argument("--n", type=int, required=True)

    cls = sub.add_parser("classnumber",
                         help="reduced forms and class number of a "
                              "negative discriminant")
    cls.add_argument("--disc", type=int, required=True)

    h4 = sub.add_parser("h4", help="quartic-extension report for (d, N)")
    h4.add_argument("--d", type=int, required=True)
    h4.add_argument("--N", type=int, required=True)
    h4.add_argument("--vau2-bound", type=int, default=100)

    equiv = sub.add_parser("equiv",
                           help="empirical x^2+dy^2 vs x^2+2dy^2 check")
    equiv.add_argument("--d", type=int, required=True)
    equiv.add_argument("--primes", required=True,
                       help="comma-separated primes")
    equiv.add_argument("--format", choices=("json", "csv"), default="json")
    equiv.add_argument("--out", help="write the report to this file")
    equiv.add_argument("--plot", help="render a figure of the report here")
    equiv.add_argument("--threads", type=int, default=None)

    return parser


def _write_output(data: bytes, out) -> None:
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _emit_and_exit(report, args) -> int:
    _write_output(emit_report(report, args.format), args.out)
    if args.plot:
        from .plots import render_report

        render_report(report, args.plot)
    return report_exit_code(report)


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _cmd_scan(args) -> int:
    p_max = args.max_exponent
    if p_max is None:
        p_max = DEFAULT_MAX_EXPONENT[NormSequenceKind(args.family)]
    if args.family == "mersenne":
        report = scan_mersenne(p_max, d=args.d or 7, threads=args.threads)
    else:
        if args.d is not None:
            raise ValueError("--d applies to mersenne scans only")
        report = _SCANNERS[args.family](p_max, threads=args.threads)
    return _emit_and_exit(report, args)


def _cmd_represent(args) -> int:
    if args.d < 1:
        raise ValueError("--d must be >= 1")
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    verdict = is_prime(args.n)
    use_cornacchia = (
        bool(verdict) and args.n > 2 and args.n % 2 == 1
        and args.d % args.n != 0
    )
    if use_cornacchia:
        rep = cornacchia(args.d, args.n)
        method = "cornacchia"
    else:
        rep = represent_bruteforce(args.d, args.n)
        method = "bruteforce"
    payload = {
        "tool": TOOL,
        "d": args.d,
        "n": str(args.n),
        "primality": verdict.verdict.value,
        "method": method,
        "found": rep is not None,
        "representation": None if rep is None
        else {"d": rep.d, "x": str(rep.x), "y": str(rep.y)},
        "x_mod8": None if rep is None else rep.x % 8,
        "y_mod8": None if rep is None else rep.y % 8,
        "x_mod7": None if rep is None else rep.x % 7,
        "y_mod7": None if rep is None else rep.y % 7,
    }
    _print_json(payload)
    return 0


def _cmd_classnumber(args) -> int:
    forms = reduced_forms(args.disc)
    payload = {
        "tool": TOOL,
        "disc": args.disc,
        "class_number": class_number(args.disc),
        "ambiguous_classes": ambiguous_class_count(args.disc),
        "cyclic_quartic": is_cyclic_quartic_classgroup(args.disc),
        "four_divides_class_number": class_number(args.disc) % 4 == 0,
        "forms": [list(f) for f in forms],
    }
    _print_json(payload)
    return 0


def _cmd_h4(args) -> int:
    report = h4_report(args.d, args.N, vau2_bound=args.vau2_bound)
    payload = {"tool": TOOL}
    payload.update(report.to_dict())
    _print_json(payload)
    return 0


def _cmd_equiv(args) -> int:
    try:
        primes = [int(tok) for tok in args.primes.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"bad --primes list: {args.primes}") from exc
    report = check_equivalence(args.d, primes, threads=args.threads)
    return _emit_and_exit(report, args)


_COMMANDS = {
    "scan": _cmd_scan,
    "represent": _cmd_represent,
    "classnumber": _cmd_classnumber,
    "h4": _cmd_h4,
    "equiv": _cmd_equiv,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"normscan: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
