"""Command-line entry point: ``colorful {count,table,verify,fixed}``."""
from __future__ import annotations

import argparse
import sys
import time

from . import counts, oracle, verify
from .counts import SequenceKind
from .group import GroupElement, S3Perm

FORMATS = ("plain", "csv", "markdown", "bfile")

_EXACT_COLORS = {
    SequenceKind.NECKLACE: SequenceKind.NECKLACE_EXACT_COLORS,
    SequenceKind.BRACELET: SequenceKind.BRACELET_EXACT_COLORS,
}
_EXACT_PERIOD = {
    SequenceKind.NECKLACE: SequenceKind.NECKLACE_EXACT_PERIOD,
    SequenceKind.BRACELET: SequenceKind.BRACELET_EXACT_PERIOD,
}


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _resolve_kind(name: str, exact_colors: bool = False, exact_period: bool = False) -> SequenceKind:
    try:
        kind = counts.parse_sequence_kind(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if exact_colors and exact_period:
        raise UsageError("--exact-colors and --exact-period cannot be combined")
    if exact_colors or exact_period:
        table = _EXACT_COLORS if exact_colors else _EXACT_PERIOD
        if kind not in table:
            flag = "--exact-colors" if exact_colors else "--exact-period"
            raise UsageError(f"{flag} applies only to the necklace and bracelet kinds")
        kind = table[kind]
    return kind


def _check_colors(kinds: list[SequenceKind], colors: int | None) -> None:
    if colors is not None and not any(k.needs_colors for k in kinds):
        raise UsageError("--colors applies only to classical-necklace and classical-bracelet")
    for k in kinds:
        if k.needs_colors and colors is None:
            raise UsageError(f"{k.value} requires --colors")


def _value(kind: SequenceKind, n: int, colors: int | None) -> int:
    return counts.sequence_value(kind, n, colors if kind.needs_colors else None)


def cmd_count(args) -> int:
    kind = _resolve_kind(args.kind, args.exact_colors, args.exact_period)
    _check_colors([kind], args.colors)
    print(_value(kind, args.n, args.colors))
    return 0


def render_table(kinds: list[SequenceKind], start: int, stop: int, fmt: str,
                 colors: int | None = None) -> str:
    """Rows for n = start..stop, one column per kind, as a single string."""
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    if not 1 <= start <= stop:
        raise UsageError(f"need 1 <= from <= to, got from={start} to={stop}")
    if fmt == "bfile" and len(kinds) != 1:
        raise UsageError("bfile output takes exactly one kind")
    rows = [(n, [_value(k, n, colors) for k in kinds]) for n in range(start, stop + 1)]
    names = [k.value for k in kinds]

    lines: list[str] = []
    if fmt == "plain":
        lines = [" ".join(map(str, vals)) for _, vals in rows]
    elif fmt == "bfile":
        lines = [f"{n} {vals[0]}" for n, vals in rows]
    elif fmt == "csv":
        lines = [",".join(["n"] + names)]
        lines += [",".join(map(str, [n] + vals)) for n, vals in rows]
    else:
        lines = ["| n | " + " | ".join(names) + " |", "|" + "---|" * (len(names) + 1)]
        lines += ["| " + " | ".join(map(str, [n] + vals)) + " |" for n, vals in rows]
    return "\n".join(lines) + "\n"


def parse_bfile(text: str) -> list[tuple[int, int]]:
    pairs = []
    for line in text.splitlines():
        n, value = line.split(" ")
        pairs.append((int(n), int(value)))
    return pairs


def cmd_table(args) -> int:
    kinds = [_resolve_kind(name) for name in args.kinds.split(",") if name.strip()]
    if not kinds:
        raise UsageError("--kinds is empty")
    _check_colors(kinds, args.colors)
    sys.stdout.write(render_table(kinds, args.start, args.stop, args.format, args.colors))
    return 0


def cmd_verify(args) -> int:
    try:
        cfg = verify.VerifyConfig(max_n=args.max_n, fixed_max_n=args.fixed_max_n, cap=args.cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = True
    t0 = time.perf_counter()
    for result in verify.run(cfg):
        print(result.line(), flush=True)
        ok = ok and result.passed
    print(f"{'ALL PASS' if ok else 'FAILED'} in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return 0 if ok else 1


def cmd_fixed(args) -> int:
    try:
        sigma = S3Perm.from_name(args.sigma)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.eps not in (0, 1):
        raise UsageError(f"--eps must be 0 or 1, got {args.eps}")
    g = GroupElement(args.n, sigma, args.eps, args.shift)
    closed = counts.fixed_points(args.n, g)
    if args.n > args.cap:
        print(closed)
        print(f"error: n={args.n} exceeds the enumeration cap {args.cap}; scan skipped", file=sys.stderr)
        return 1
    scan = oracle.fixed_point_scan(args.n, g, cap=args.cap)
    print(closed, scan, "EQUAL" if closed == scan else "DIFFER")
    return 0 if closed == scan else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorful",
        description="Exact counts of colorful three-color necklaces and bracelets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print one sequence value")
    p.add_argument("--kind", required=True,
                   help="alpha, necklace (K), bracelet (K'), classical-necklace, classical-bracelet")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--exact-colors", action="store_true", help="classes using all three colors")
    p.add_argument("--exact-period", action="store_true", help="classes of minimal period exactly n")
    p.add_argument("--colors", type=_positive, help="number of colors (classical kinds only)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="print a range of values")
    p.add_argument("--kinds", required=True, help="comma-separated kind names")
    p.add_argument("--from", dest="start", type=_positive, default=1)
    p.add_argument("--to", dest="stop", type=_positive, default=40)
    p.add_argument("--format", choices=FORMATS, default="plain")
    p.add_argument("--colors", type=_positive)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="compare closed forms with brute force and the published tables")
    p.add_argument("--max-n", type=_positive, default=14)
    p.add_argument("--fixed-max-n", type=_positive, default=12)
    p.add_argument("--cap", type=_positive, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixed", help="fixed-point count of one group element, closed form vs scan")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--sigma", required=True, help="id, t12, t13, t23, c or c2")
    p.add_argument("--eps", type=int, default=0)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--cap", type=_positive, default=oracle.DEFAULT_CAP)
    p.set_defaults(func=cmd_fixed)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
