"""
Command-line entry point
========================
    python -m app.main [--json] <verify|example|enumerate|check-theorems|sweep> ...

Exit codes: 0 everything passed, 1 a mathematical check failed, 2 the
input could not be used.
"""

import argparse
import json
import logging
import re
import sys
from typing import List, Optional

from .checkers import StructureVerifier, theorem_suite
from .config import get_settings
from .core.bracoids import SkewBrace, SkewLeftBracoid, SkewRightBracoid, make_brace, make_left_bracoid, make_right_bracoid
from .core.errors import BracoidError, ExampleError, GroupError, SignatureMismatch, StructureFormatError
from .core.examples import DihedralExampleParams, dihedral_example
from .core.groups import parse_descriptor
from .core.two_sided import TwoSidedSkewBracoid, make_two_sided
from .enumeration import SearchSpec, contains, run_search, sweep_braces, sweep_lau_converse, sweep_two_sided
from .schemas import CheckReport, TheoremVerdict
from .storage import load_structure, store_structure

logger = logging.getLogger("bracoid.cli")

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Anything that should end the run with exit code 2."""


def _emit(args, payload, lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print("\n".join(lines))


def _report_line(report: CheckReport) -> str:
    line = f"{report.status:<14} {report.property}"
    return f"{line}  {' '.join(report.witness)}" if report.witness else line


def _verdict_line(verdict: TheoremVerdict) -> str:
    line = f"{verdict.flag:<26} {verdict.theorem}"
    return f"{line}  {' '.join(verdict.witness)}" if verdict.witness else line


def _load(path: str):
    try:
        return load_structure(path)
    except StructureFormatError as e:
        raise InputError(str(e)) from e


# ------------------------------------------------------------------
# Subcommands
# ------------------------------------------------------------------

def cmd_verify(args) -> int:
    reports = StructureVerifier(_load(args.path)).verify()
    failed = [r for r in reports if r.status == "fail"]
    _emit(args, [r.model_dump() for r in reports], [_report_line(r) for r in reports])
    if failed:
        logger.warning(f"{args.path}: {len(failed)} of {len(reports)} checks failed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_example(args) -> int:
    try:
        params = DihedralExampleParams(args.t, args.w, args.d)
    except (GroupError, ExampleError) as e:
        raise InputError(str(e)) from e
    structure = dihedral_example(params)
    reports = StructureVerifier(structure).verify()
    verdicts = theorem_suite(structure)
    failed = [r.property for r in reports if r.status == "fail"]
    failed += [v.theorem for v in verdicts if v.flag == "counterexample_to_theorem"]
    ok = not failed
    summary = CheckReport(property="dihedral_example", status="pass" if ok else "fail", witness=failed or None)
    if args.out:
        store_structure(structure, args.out)

    orders = {"G": structure.G.order, "H": structure.H.order, "N": structure.N.order}
    payload = {
        "params": {"t": args.t, "w": args.w, "d": args.d},
        "orders": orders,
        "reports": [r.model_dump() for r in reports],
        "verdicts": [v.model_dump() for v in verdicts],
        "summary": summary.model_dump(),
    }
    lines = [f"|G| = {orders['G']}  |H| = {orders['H']}  |N| = {orders['N']}"]
    lines += [_report_line(r) for r in reports] + [_verdict_line(v) for v in verdicts]
    lines.append(_report_line(summary))
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAILED


_DESCRIPTOR_VALUE = {"t": r"^GT(\d+)$", "w": r"^HW(\d+)$", "d": r"^D(\d+)$"}


def _descriptor_value(spec: Optional[str], key: str) -> Optional[int]:
    match = re.match(_DESCRIPTOR_VALUE[key], (spec or "").strip())
    return int(match.group(1)) if match else None


def _example_for(args):
    """The dihedral example matching the searched groups, projected to the searched kind."""
    d = _descriptor_value(args.N, "d")
    t = _descriptor_value(args.G, "t")
    w = _descriptor_value(args.H, "w")
    if d is None or (args.G and t is None) or (args.H and w is None):
        raise InputError("--contains-example needs N = D<d>, G = GT<t> and/or H = HW<w>")
    example = dihedral_example(DihedralExampleParams(t if t is not None else d, w if w is not None else d, d))
    if args.G and args.H:
        return example
    return example.left if args.G else example.right


def cmd_enumerate(args) -> int:
    spec = SearchSpec(
        G_spec=args.G,
        N_spec=args.N,
        H_spec=args.H,
        braces=args.braces,
        require_two_sided=args.two_sided,
        up_to_iso=args.up_to_iso,
        strategy=args.strategy,
        order_cap=args.order_cap,
    )
    try:
        result = run_search(spec)
        example = _example_for(args) if args.contains_example else None
    except (GroupError, ExampleError, SignatureMismatch, StructureFormatError, ValueError) as e:
        raise InputError(str(e)) from e

    payload = result.to_schema(count_only=args.count_only).model_dump()
    lines = [f"kind: {result.kind}", f"raw_count: {result.raw_count}"]
    if result.iso_class_count is not None:
        lines += [f"iso_class_count: {result.iso_class_count}", f"equivalence: {result.equivalence}"]
    code = EXIT_OK
    if example is not None:
        found = contains(result, example)
        payload["contains_example"] = found
        lines.append(f"contains_example: {found}")
        code = EXIT_OK if found else EXIT_FAILED
    _emit(args, payload, lines)
    return code


def _validated(structure):
    """Rebuild a loaded structure through the validating constructors."""
    if isinstance(structure, TwoSidedSkewBracoid):
        left = make_left_bracoid(structure.G, structure.N, structure.left.action.table)
        right = make_right_bracoid(structure.H, structure.N, structure.right.action.table)
        return make_two_sided(left, right)
    if isinstance(structure, SkewLeftBracoid):
        return make_left_bracoid(structure.G, structure.N, structure.action.table)
    if isinstance(structure, SkewRightBracoid):
        return make_right_bracoid(structure.H, structure.N, structure.action.table)
    return make_brace(structure.star_group, structure.dot_group)


def _verdict_exit(args, verdicts: List[TheoremVerdict]) -> int:
    _emit(args, [v.model_dump() for v in verdicts], [_verdict_line(v) for v in verdicts])
    flagged = [v for v in verdicts if v.flag == "counterexample_to_theorem"]
    return EXIT_FAILED if flagged else EXIT_OK


def cmd_check_theorems(args) -> int:
    loaded = _load(args.path)
    try:
        structure = _validated(loaded)
    except BracoidError as e:
        logger.error(f"{args.path} is not a valid structure: {e.kind} {list(e.witness)}")
        _emit(args, {"error": e.kind, "message": str(e), "witness": list(e.witness)}, [f"{e.kind}: {e}"])
        return EXIT_FAILED
    return _verdict_exit(args, theorem_suite(structure))


def cmd_sweep(args) -> int:
    try:
        if args.braces:
            verdicts = sweep_braces(parse_descriptor(args.braces), args.order_cap)
        else:
            if not (args.G and args.H and args.N):
                raise InputError("sweep needs --G, --H and --N, or --braces")
            G, H, N = (parse_descriptor(s) for s in (args.G, args.H, args.N))
            verdicts = sweep_lau_converse(G, H, N, args.order_cap) + sweep_two_sided(G, H, N, args.order_cap)
    except (GroupError, ExampleError, StructureFormatError, ValueError) as e:
        raise InputError(str(e)) from e
    return _verdict_exit(args, verdicts)


# ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bracoid", description="Skew bracoid and skew brace toolkit")
    parser.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    parser.add_argument("--log-level", default=None, help="overrides BRACOID_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="validate a structure file and run every identity checker")
    p.add_argument("path")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("example", help="build the dihedral two-sided example")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--out", default=None, help="write the structure JSON here")
    p.set_defaults(handler=cmd_example)

    p = sub.add_parser("enumerate", help="enumerate bracoids or braces on small groups")
    p.add_argument("--G", default=None)
    p.add_argument("--N", default=None)
    p.add_argument("--H", default=None)
    p.add_argument("--braces", action="store_true", help="enumerate skew braces with ⋆-group N")
    p.add_argument("--two-sided", action="store_true")
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--strategy", choices=["A", "B"], default="A")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--contains-example", action="store_true")
    p.add_argument("--order-cap", type=int, default=None)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("check-theorems", help="evaluate every applicable theorem on a structure file")
    p.add_argument("path")
    p.set_defaults(handler=cmd_check_theorems)

    p = sub.add_parser("sweep", help="run theorem sweeps over enumerated structures")
    p.add_argument("--G", default=None)
    p.add_argument("--H", default=None)
    p.add_argument("--N", default=None)
    p.add_argument("--braces", default=None, metavar="N", help="sweep the braces on this ⋆-group instead")
    p.add_argument("--order-cap", type=int, default=None)
    p.set_defaults(handler=cmd_sweep)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT

    try:
        level = (args.log_level or get_settings().log_level).upper()
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        return args.handler(args)
    except InputError as e:
        logger.error(f"input error: {e}")
        if args.json:
            print(json.dumps({"error": "input", "message": str(e)}, ensure_ascii=False))
        else:
            print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except BracoidError as e:
        logger.error(f"{e.kind}: {e} {list(e.witness)}")
        if args.json:
            print(json.dumps({"error": e.kind, "message": str(e), "witness": list(e.witness)}, ensure_ascii=False))
        else:
            print(f"{e.kind}: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
