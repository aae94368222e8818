"""Command-line interface: ``smallwitt {plane,census,witt,verify,autgroup}``.

Exit status is 0 on success, 1 when a verification finds a non-Steiner
design, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from smallwitt.automorphisms import DEFAULT_BASE, aut_group_summary
from smallwitt.census import census
from smallwitt.designs import Design, read_design, replication_counts, verify_steiner, write_design
from smallwitt.errors import DesignFormatError
from smallwitt.plane import build_plane
from smallwitt.witt import build_witt

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit(pairs: dict, fmt: str, out) -> None:
    """Text mode puts all pairs on one line, kv mode one pair per line."""
    items = [f"{k}={_fmt(v)}" for k, v in pairs.items()]
    out.write((" ".join(items) if fmt == "text" else "\n".join(items)) + "\n")


def parse_kv(text: str) -> dict[str, str]:
    """Inverse of :func:`emit` for either format (repeated keys keep the last value)."""
    pairs = {}
    for tok in text.split():
        key, sep, value = tok.partition("=")
        if sep:
            pairs[key] = value
    return pairs


def _order3(args, what: str):
    if args.q != 3:
        raise UsageError(f"{what} is only defined for q=3 (got --q {args.q})")
    return build_plane(3)


def _witt(args):
    plane = _order3(args, "the Witt design")
    if not 0 <= args.u < plane.size:
        raise UsageError(f"--u must lie in 0..{plane.size - 1}, got {args.u}")
    return build_witt(plane, args.u)


def _load_design(args) -> Design:
    if args.input is None:
        return _witt(args).to_design()
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
    return read_design(text)


def cmd_plane(args, out) -> int:
    plane = build_plane(args.q)
    n = plane.size
    if args.format == "kv":
        emit({"q": plane.q, "points": n, "lines": n}, "kv", out)
        for p in plane.points:
            out.write(f"point.{p.index}={','.join(map(str, p.triple))}\n")
        for l in plane.lines:
            out.write(f"line.{l.index}={','.join(map(str, l.triple))}\n")
            out.write(f"line.{l.index}.points={','.join(map(str, plane.points_on[l.index]))}\n")
        return EXIT_OK
    out.write(f"plane q={plane.q} points={n} lines={n}\n")
    for p in plane.points:
        out.write(f"point {p.index} ({','.join(map(str, p.triple))}) lines {' '.join(map(str, plane.lines_through[p.index]))}\n")
    for l in plane.lines:
        out.write(f"line {l.index} [{','.join(map(str, l.triple))}] points {' '.join(map(str, plane.points_on[l.index]))}\n")
    out.write("incidence\n")
    for row in plane.incidence:
        out.write("".join("1" if x else "0" for x in row) + "\n")
    return EXIT_OK


def cmd_census(args, out) -> int:
    report = census(_order3(args, "the 6-set census"))
    emit(report.as_dict(), args.format, out)
    return EXIT_OK


def cmd_witt(args, out) -> int:
    w = _witt(args)
    counts = {f"type{t.value}": n for t, n in w.type_counts().items()}
    if args.blocks:
        out.write(f"# blocks of W12 in plane point indices, U={w.u}\n")
        for b in w.blocks:
            out.write(f"{b.block_type.value} {' '.join(map(str, b.members))} {b.witness()}\n")
        return EXIT_OK
    body = write_design(w.to_design())
    if args.out:
        Path(args.out).write_text(body, encoding="utf-8")
        emit({"u": w.u, **counts, "b": len(w.blocks), "out": args.out}, args.format, out)
        return EXIT_OK
    u_coords = ",".join(map(str, w.U.triple))
    out.write(f"# W12 from PG(2,3) minus U={w.u} ({u_coords}); points renumbered 0..11\n")
    out.write("# " + " ".join(f"{k}={v}" for k, v in counts.items()) + "\n")
    out.write(body)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    design = _load_design(args)
    report = verify_steiner(design, args.t)
    emit(report.as_dict(), args.format, out)
    counts = replication_counts(design, args.t)
    for M in report.failures:
        if args.format == "kv":
            out.write(f"failure={','.join(map(str, M))}:{counts.get(M, 0)}\n")
        else:
            out.write(f"failure t-set {' '.join(map(str, M))} r={counts.get(M, 0)}\n")
    return EXIT_OK if report.is_steiner else EXIT_FAIL


def cmd_autgroup(args, out) -> int:
    design = _load_design(args)
    base = DEFAULT_BASE if args.base is None else tuple(int(x) for x in args.base.split(","))
    if not verify_steiner(design, 5).is_steiner:
        print("error: input is not an S(5,6,12); automorphism count refused", file=sys.stderr)
        return EXIT_FAIL
    summary = aut_group_summary(design, base)
    emit(summary.as_dict(), args.format, out)
    if args.dump:
        lines = [" ".join(map(str, p)) for p in sorted(summary.elements)]
        Path(args.dump).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return EXIT_OK if summary.sharply_5_transitive else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smallwitt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_u=True):
        p.add_argument("--q", type=int, default=3, choices=[2, 3, 5, 7])
        p.add_argument("--format", choices=["text", "kv"], default="text")
        if with_u:
            p.add_argument("--u", type=int, default=0, help="index of the deleted point U (0..12)")

    p = sub.add_parser("plane", help="dump points, lines and incidence of PG(2,q)")
    common(p, with_u=False)
    p.set_defaults(func=cmd_plane)

    p = sub.add_parser("census", help="count the four types of 6-sets of PG(2,3)")
    common(p, with_u=False)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("witt", help="build W12 and write it in design file format")
    common(p)
    p.add_argument("--out", help="write the design file here instead of stdout")
    p.add_argument("--blocks", action="store_true", help="list blocks with type tags and witnesses")
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("verify", help="check a design for the Steiner property")
    common(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--in", dest="input", help="design file, '-' for stdin (default: built-in W12)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("autgroup", help="count automorphisms of W12 by base-image extension")
    common(p)
    p.add_argument("--in", dest="input", help="design file, '-' for stdin (default: built-in W12)")
    p.add_argument("--base", help="comma-separated base 5-tuple (default 0,1,2,3,4)")
    p.add_argument("--dump", help="write every automorphism as a line of 12 images")
    p.set_defaults(func=cmd_autgroup)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, DesignFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
