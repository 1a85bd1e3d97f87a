"""Command-line interface: build and export the codes, print weights, run the verification suites."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from pacecode import gf3, perm, verifier, witt, zmodule
from pacecode.design_code import build_design_code

SCHEMA_VERSION = 1
THREADS_ENV = "PACECODE_THREADS"
VERIFY_SCOPES = ("group", "design", "lemmas", "cases", "theorem")


class UsageError(Exception):
    pass


def _points(text: str) -> list[int]:
    try:
        pts = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated points, got {text!r}") from None
    if any(not 1 <= p <= 12 for p in pts):
        raise argparse.ArgumentTypeError("points must lie in 1..12")
    return pts


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return 1


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _format_matrix(m, fmt: str) -> str:
    return gf3.format_matrix(m) if fmt == "text" else gf3.matrix_to_json(m) + "\n"


def cmd_build(args) -> int:
    if args.golay:
        if args.construction is not None or args.A is not None or args.B is not None or args.manifest:
            raise UsageError("--golay cannot be combined with --construction, --A, --B or --manifest")
        _emit(_format_matrix(witt.golay_generator(), args.format), args.output)
        return 0
    construction = args.construction or "m12"
    if construction == "m12":
        if args.A is not None or args.B is not None:
            raise UsageError("--A/--B only apply to --construction design")
        pg = zmodule.pace_generator_m12()
        matrix, manifest = pg.matrix, pg.manifest
    else:
        A = args.A if args.A is not None else [12]
        B = args.B if args.B is not None else [11]
        if set(A) & set(B):
            raise UsageError("A and B must be disjoint")
        built = build_design_code(witt.witt_design(), A, B)
        matrix, manifest = built.matrix, built.col_index
    if args.manifest:
        if args.format == "json":
            text = json.dumps([{"column": j, "block": list(b)} for j, b in enumerate(manifest)]) + "\n"
        else:
            text = "".join(f"{j} " + " ".join(map(str, b)) + "\n" for j, b in enumerate(manifest))
    else:
        text = _format_matrix(matrix, args.format)
    _emit(text, args.output)
    return 0


def cmd_design(args) -> int:
    blocks, info_sets = witt.classify_six_sets()
    sets = info_sets if args.info_sets else blocks
    text = witt.blocks_to_json(sets) + "\n" if args.format == "json" else witt.blocks_to_text(sets)
    _emit(text, args.output)
    return 0


def cmd_weights(args) -> int:
    if args.code == "golay":
        matrix = witt.golay_generator()
    else:
        matrix = zmodule.pace_generator_m12().matrix
    dist = gf3.LinearCode(matrix).weight_distribution(_threads(args))
    dist = {w: c for w, c in dist.items() if c}
    if args.format == "json":
        text = json.dumps({"schema_version": SCHEMA_VERSION, "code": args.code, "weights": {str(w): c for w, c in dist.items()}}) + "\n"
    else:
        text = "".join(f"{w} {c}\n" for w, c in dist.items())
    _emit(text, args.output)
    return 0


def cmd_orbits(args) -> int:
    g = perm.m12()
    design = witt.witt_design()
    rows = []
    for name, s in [("block", design.blocks[0]), ("information set", (1, 2, 3, 4, 5, 6)), ("2-set", (1, 2))]:
        rows.append({"orbit": name, "representative": list(s), "length": len(g.orbit_of_set(s)), "stabilizer": g.set_stabilizer_order(s)})
    stabs = zmodule.projective_point_stabilizer_orders(g)
    rows.append(
        {"orbit": "projective point z_X", "representative": list(design.blocks_avoiding(12)[0]), "length": len(stabs), "stabilizer": stabs[0]}
    )
    if args.format == "json":
        text = json.dumps({"schema_version": SCHEMA_VERSION, "group_order": g.order, "orbits": rows}) + "\n"
    else:
        lines = [f"group order {g.order}"]
        lines += [f"{r['orbit']}: length {r['length']}, stabilizer {r['stabilizer']}, rep {r['representative']}" for r in rows]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return 0


def format_reports(reports: Sequence[verifier.VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in reports], indent=1) + "\n"
    width = max((len(r.check) for r in reports), default=0)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.check:<{width}}  expected {r.expected}; got {r.actual}" for r in reports]
    failed = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - failed}/{len(reports)} checks passed")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    scopes = [s for s in VERIFY_SCOPES if getattr(args, s)]
    if args.all or not scopes:
        scopes = list(VERIFY_SCOPES)
    reports = verifier.run_suites(scopes, _threads(args))
    _emit(format_reports(reports, args.format), args.output)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--threads", type=int, help=f"worker threads (default: ${THREADS_ENV} or 1)")

    parser = argparse.ArgumentParser(prog="pacecode", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[common], help="write a generator matrix")
    p.add_argument("--construction", choices=("m12", "design"))
    p.add_argument("--golay", action="store_true", help="the 6x12 ternary Golay generator (I|P)")
    p.add_argument("--A", type=_points, help="comma-separated points (design construction, default 12)")
    p.add_argument("--B", type=_points, help="comma-separated points (design construction, default 11)")
    p.add_argument("--manifest", action="store_true", help="write the column -> block manifest instead")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("design", parents=[common], help="export the blocks of S(5,6,12)")
    p.add_argument("--info-sets", action="store_true", help="export the 792 information sets instead")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("weights", parents=[common], help="print a weight distribution")
    p.add_argument("--code", choices=("golay", "pace"), required=True)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--all", action="store_true")
    for scope in VERIFY_SCOPES:
        p.add_argument(f"--{scope}", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbits", parents=[common], help="orbit lengths and stabilizer orders")
    p.set_defaults(func=cmd_orbits)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pacecode: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"pacecode: I/O error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
