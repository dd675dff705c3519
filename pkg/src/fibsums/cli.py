"""Command-line entry point: ``fibsums <command> [flags]``.

Exit status: 0 success, 1 verification mismatch (verify/bench), 2 usage error.
"""

from __future__ import annotations

import argparse
import functools
import sys

import gmpy2

from . import __version__
from .bench import run_bench
from .engine import SumQuery, power_sum_closed_form, power_sum_value
from .errors import UsageError
from .expansions import Form, Seq, expand_power
from .oracle import check_grid, direct_power_sum
from .render import FORMATS, render_closed_form, render_expansion


def parse_range(text: str) -> range:
    """``"7"`` -> 7..7, ``"0..20"`` -> 0..20 inclusive."""
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or A..B, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _single(r: range, flag: str) -> int:
    if len(r) != 1:
        raise UsageError(f"{flag} takes a single integer here")
    return r[0]


def _seqs(value: str) -> list[Seq]:
    return [Seq.F, Seq.L] if value == "both" else [Seq(value)]


def _parities(value: str) -> list[bool]:
    return {"no": [False], "yes": [True], "both": [False, True]}[value]


def _one_query(args, with_n: bool = True) -> SumQuery:
    if args.seq == "both" or args.alt == "both":
        raise UsageError("--seq both / --alt both are only valid for verify")
    n = _single(args.n, "--n") if with_n else None
    return SumQuery(
        Seq(args.seq), _single(args.m, "--m"), _single(args.j, "--j"), args.alt == "yes", n
    )


def _digits(v: int) -> str:
    # gmpy2 converts multi-million-digit values far faster than str(int)
    return gmpy2.mpz(v).digits()


def cmd_eval(args, out) -> int:
    print(_digits(power_sum_value(_one_query(args))), file=out)
    return 0


def cmd_oracle(args, out) -> int:
    q = _one_query(args)
    print(_digits(direct_power_sum(q.sequence, q.m, q.j, q.alternating, q.n)), file=out)
    return 0


def cmd_formula(args, out) -> int:
    print(render_closed_form(power_sum_closed_form(_one_query(args, with_n=False)), args.format), file=out)
    return 0


def cmd_expand(args, out) -> int:
    if args.seq == "both":
        raise UsageError("expand takes --seq F or --seq L")
    for j in args.j:
        print(render_expansion(expand_power(Seq(args.seq), j, Form(args.form)), args.format), file=out)
    return 0


def cmd_verify(args, out) -> int:
    if args.m[0] < 1 or args.j[0] < 1 or args.n[0] < 0:
        raise UsageError("need m >= 1, j >= 1, n >= 0")
    reports = check_grid(args.m, args.j, args.n, _seqs(args.seq), _parities(args.alt), args.workers)
    bad = [r for r in reports if not r.match]
    for r in bad:
        q = r.query
        print(
            f"MISMATCH seq={q.sequence.value} m={q.m} j={q.j} alt={int(q.alternating)} "
            f"n={q.n} expected={r.expected} actual={r.actual}",
            file=out,
        )
    if bad:
        print(f"{len(bad)} of {len(reports)} cases mismatch", file=out)
        return 1
    print(f"all {len(reports)} cases match", file=out)
    return 0


def cmd_bench(args, out) -> int:
    res = run_bench(_one_query(args), args.budget)
    q = res.query
    print(f"query: seq={q.sequence.value} m={q.m} j={q.j} alt={int(q.alternating)} n={q.n}", file=out)
    print(f"closed_form_seconds: {res.closed_seconds:.6f}", file=out)
    closed_s = _digits(res.closed_value)
    if res.finished:
        print(f"direct_seconds: {res.direct_seconds:.6f}", file=out)
        print(f"speedup: {res.speedup:.1f}x", file=out)
    else:
        print(
            f"direct_seconds: >{res.direct_seconds:.3f} "
            f"(budget exhausted after {res.terms_summed} of {q.n + 1} terms)",
            file=out,
        )
        print(f"speedup: >{res.speedup:.1f}x (lower bound)", file=out)
    if args.show_values:
        print(f"closed_value: {closed_s}", file=out)
        if res.finished:
            print(f"direct_value: {_digits(res.direct_value)}", file=out)
    else:
        print(f"closed_value_digits: {len(closed_s.lstrip('-'))}", file=out)
    if res.values_equal is None:
        print("values: not compared (direct summation unfinished)", file=out)
        return 1
    print("values: equal" if res.values_equal else "values: DIFFER", file=out)
    return 0 if res.values_equal else 1


@functools.lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fibsums",
        description="Closed forms for sums of powers of equally spaced Fibonacci and Lucas numbers.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def query_flags(sp, n=True, seq_default="F", m_default="1", j_default="1"):
        sp.add_argument("--seq", choices=["F", "L", "both"], default=seq_default)
        sp.add_argument("--m", type=parse_range, default=parse_range(m_default))
        sp.add_argument("--j", type=parse_range, default=parse_range(j_default))
        if n:
            sp.add_argument("--n", type=parse_range, required=True)
        sp.add_argument(
            "--alt", nargs="?", const="yes", default="no", choices=["no", "yes", "both"],
            help="alternating sum; bare --alt means yes",
        )

    sp = sub.add_parser("eval", help="value of the sum via its closed form")
    query_flags(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("oracle", help="value of the sum by direct summation")
    query_flags(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("formula", help="emit the closed form of the sum")
    query_flags(sp, n=False)
    sp.add_argument("--format", choices=FORMATS, default="text")
    sp.set_defaults(func=cmd_formula)

    sp = sub.add_parser("expand", help="show the expansion of X_n^j")
    sp.add_argument("--seq", choices=["F", "L"], default="F")
    sp.add_argument("--j", type=parse_range, required=True)
    sp.add_argument("--form", choices=[f.value for f in Form], default="canonical")
    sp.add_argument("--format", choices=FORMATS, default="text")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("verify", help="compare closed forms against direct sums on a grid")
    query_flags(sp, seq_default="both", m_default="1..8", j_default="1..8")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("bench", help="time closed form against direct summation")
    query_flags(sp, m_default="3", j_default="5")
    sp.add_argument("--budget", type=float, default=None, metavar="SECONDS",
                    help="stop direct summation after this many seconds")
    sp.add_argument("--show-values", action="store_true")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "expand" and args.j[0] < 1:
            raise UsageError("exponent j must be >= 1")
        return args.func(args, out)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
