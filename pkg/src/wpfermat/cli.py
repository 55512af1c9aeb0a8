"""Command line: ``wpfermat {report,sweep,resolve,smoothness}``.

Exit codes: 0 when every check passes, 1 for a disagreement, a singular
verdict or an internal error, 2 for bad input.
"""
from __future__ import annotations

import argparse
import sys
from math import gcd
from pathlib import Path

from . import report as R
from .cover import Weights
from .curve import smoothness_certificate
from .hj import hj_resolve

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _int(text: str, name: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise UsageError(f"--{name} must be an integer, got {text!r}") from None
    if v <= 0:
        raise UsageError(f"--{name} must be positive, got {v}")
    return v


def parse_range(text: str, name: str) -> range:
    """``"k"`` or ``"lo..hi"`` (inclusive)."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        lo, hi = _int(lo, name), _int(hi, name)
        if lo > hi:
            raise UsageError(f"--{name} range {text!r} is empty")
        return range(lo, hi + 1)
    v = _int(text, name)
    return range(v, v + 1)


def checked_weights(a: int, m: int, n: int) -> tuple[Weights, list[str]]:
    """Validate a single (a, m, n); the m <-> n swap is applied with a note, nothing else is rewritten."""
    notes = []
    g = gcd(m, n)
    if g != 1:
        raise UsageError(
            f"m={m} and n={n} share the factor {g}; P(1,{m},{n}) is isomorphic to "
            f"P(1,{m // g},{n // g}), but that changes how the curve degree is read. "
            f"Pass coprime --m/--n and the intended --a explicitly "
            f"(e.g. --a {a * g} --m {min(m, n) // g} --n {max(m, n) // g})."
        )
    if m == n:
        raise UsageError(f"m = n = {m}: need m < n")
    if m > n:
        notes.append(f"swapped x1 <-> x2: input (m,n)=({m},{n}) read as P(1,{n},{m})")
        m, n = n, m
    return Weights(a, m, n), notes


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_report(args) -> int:
    a = _int(args.a, "a")
    m, n = _int(args.m, "m"), _int(args.n, "n")
    w, notes = checked_weights(a, m, n)
    d = R.build_report(w, (a, m, n), notes)
    _emit(R.dumps(d) if args.format == "json" else R.report_text(d), args.out)
    return EXIT_OK if R.report_passes(d) else EXIT_FAIL


def cmd_resolve(args) -> int:
    m, n = _int(args.m, "m"), _int(args.n, "n")
    w, notes = checked_weights(1, m, n)
    res = hj_resolve(w)
    if args.format == "json":
        d = R.resolution_dict(res)
        d["notes"] = notes
        text = R.dumps(d)
    else:
        text = "".join(f"note: {s}\n" for s in notes) + R.resolution_text(res)
    _emit(text, args.out)
    return EXIT_OK if not res.check() else EXIT_FAIL


def cmd_smoothness(args) -> int:
    a = _int(args.a, "a")
    w, notes = checked_weights(a, _int(args.m, "m"), _int(args.n, "n"))
    cert = smoothness_certificate(w)
    if args.format == "json":
        d = R.smoothness_dict(cert)
        d["weights"] = R.weights_dict(w)
        d["notes"] = notes
        text = R.dumps(d)
    else:
        text = "".join(f"note: {s}\n" for s in notes) + R.smoothness_text(cert)
    _emit(text, args.out)
    return EXIT_OK if cert.smooth else EXIT_FAIL


def sweep_cases(a_range, m_range, n_range) -> list[Weights]:
    return [
        Weights(a, m, n)
        for a in a_range
        for m in m_range
        for n in n_range
        if m < n and gcd(m, n) == 1
    ]


def cmd_sweep(args) -> int:
    cases = sweep_cases(
        parse_range(args.a, "a"), parse_range(args.m, "m"), parse_range(args.n, "n")
    )
    if not cases:
        raise UsageError("no coprime m < n pairs in the given ranges")
    rows = []
    for w in cases:
        try:
            rows.append(R.sweep_row(w))
        except Exception as exc:
            raise RuntimeError(f"sweep aborted at (a,m,n)=({w.a},{w.m},{w.n}): {exc}") from exc
    ok = all(r["smooth"] and r["agree"] for r in rows)
    if args.format == "json":
        text = R.dumps({"rows": rows, "count": len(rows), "all_pass": ok})
    else:
        text = R.sweep_text(rows)
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wpfermat",
        description="Genus and smoothness of x0^amn + x1^an - x2^am on P(1,m,n), in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_a=True, a_default="1"):
        if need_a:
            p.add_argument("--a", default=a_default, help="curve degree factor a (default: %(default)s)")
        p.add_argument("--m", required=True)
        p.add_argument("--n", required=True)
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", help="write to this file instead of stdout")

    common(sub.add_parser("report", help="full pipeline for one (a, m, n)"))
    common(sub.add_parser("smoothness", help="smoothness certificate for one (a, m, n)"))
    common(sub.add_parser("resolve", help="Hirzebruch-Jung data of the U1 cone"), need_a=False)
    common(sub.add_parser("sweep", help="check every coprime m < n in ranges lo..hi"))
    return parser


COMMANDS = {
    "report": cmd_report,
    "resolve": cmd_resolve,
    "smoothness": cmd_smoothness,
    "sweep": cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"wpfermat {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:
        print(f"wpfermat {args.command}: internal error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
