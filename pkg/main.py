"""
Command-line entry point.

Every command prints one JSON document (or DOT text) on stdout; diagnostics go
to stderr. Exit codes: 0 success, 1 semantic failure or negative verdict,
2 unreadable or malformed input.
"""

import argparse
import logging
import sys
from typing import List, Optional

from config import EXIT_OK, EXIT_PARSE, EXIT_SEMANTIC, get_log_level
from errors import MonodromyError
from mcg.words import GenusContext
from mcg.relations import relation_check
from mcg.representations import cycle_type, point_images
from hurwitz.system import (
    HurwitzSystem, counts, divisibility_check, divisibility_modulus, euler_invariant,
    fiber_sum, is_chiral, is_irreducible, is_transitive, monodromy_images,
)
from hurwitz.basic import BASIC_NAMES, basic_system
from hurwitz.moves import Move, MoveCertificate, MoveType, apply_move
from stabilizer.normal_form import normal_form, realize_normal_form, stabilize
from stabilizer.certificate import verify_certificate
from stabilizer.macros import derive_w2h, derive_w2h_contracted
from stabilizer.search import search_equivalence
from chart.model import Chart
from chart.validate import census, validate
from chart.compile import Capping, compile_certificate
from chart.builders import BUILDER_NAMES, build_named
from chart.local_moves import CollapseSite, ExpandSite, LocalMoveKind, local_move_with_inverse
from chart.dot import to_dot
from formats.io import PARSE_ERRORS, Report, dumps, read_as

logger = logging.getLogger("main")


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj))


def _emit_report(name: str, data: dict) -> None:
    _emit(Report(name, data))


def _int_list(text: str) -> List[int]:
    return [int(x) for x in text.split(",") if x.strip()]


# ─────────────────────────────────────────────────────────────
# Hurwitz System Commands
# ─────────────────────────────────────────────────────────────

def cmd_counts(args) -> int:
    s = read_as(args.file, HurwitzSystem)
    data = counts(s).to_dict()
    data.update(chiral=is_chiral(s), irreducible=is_irreducible(s), transitive=is_transitive(s))
    _emit_report("counts", data)
    return EXIT_OK


def cmd_invariant(args) -> int:
    s = read_as(args.file, HurwitzSystem)
    g = s.genus.g
    E = euler_invariant(counts(s))
    _emit_report("invariant", {"E": E, "modulus": divisibility_modulus(g), "divisible": divisibility_check(E, g)})
    return EXIT_OK


def cmd_normalize(args) -> int:
    s = read_as(args.file, HurwitzSystem)
    _emit_report("normal_form", normal_form(counts(s)).to_dict())
    return EXIT_OK


def cmd_basic(args) -> int:
    _emit(basic_system(args.name, GenusContext(args.genus), args.h))
    return EXIT_OK


def cmd_sum(args) -> int:
    _emit(fiber_sum(*(read_as(path, HurwitzSystem) for path in args.files)))
    return EXIT_OK


def cmd_move(args) -> int:
    s = read_as(args.file, HurwitzSystem)
    _emit(apply_move(s, Move(MoveType(args.kind), args.pos, h=args.h)))
    return EXIT_OK


def cmd_stabilize(args) -> int:
    _emit(stabilize(read_as(args.file, HurwitzSystem), args.m))
    return EXIT_OK


def cmd_realize(args) -> int:
    s = read_as(args.file, HurwitzSystem)
    _emit(realize_normal_form(normal_form(counts(s)), args.m))
    return EXIT_OK


def cmd_rep(args) -> int:
    s = read_as(args.file, HurwitzSystem)
    perm, symp = monodromy_images(s)
    if args.kind == "perm":
        data = {
            "images": list(point_images(perm)),
            "cycle_type": list(cycle_type(perm)),
            "identity": perm.is_Identity,
        }
    else:
        data = {"matrix": symp.tolist(), "identity": symp.is_identity, "minus_identity": symp.is_minus_identity}
    _emit_report(f"rep_{args.kind}", data)
    return EXIT_OK


def cmd_relations(args) -> int:
    report = relation_check(GenusContext(args.genus))
    _emit_report("relations", report.to_dict())
    return EXIT_OK if report.ok else EXIT_SEMANTIC


# ─────────────────────────────────────────────────────────────
# Certificate Commands
# ─────────────────────────────────────────────────────────────

def cmd_derive_w2h(args) -> int:
    derive = derive_w2h_contracted if args.contract else derive_w2h
    _emit(derive(args.genus, args.h, args.budget))
    return EXIT_OK


def cmd_verify(args) -> int:
    result = verify_certificate(read_as(args.file, MoveCertificate))
    _emit_report("verify", result.to_dict())
    if not result.ok:
        print(f"verification failed at step {result.failed_step}: {result.reason}", file=sys.stderr)
        return EXIT_SEMANTIC
    return EXIT_OK


def cmd_search(args) -> int:
    s1 = read_as(args.first, HurwitzSystem)
    s2 = read_as(args.second, HurwitzSystem)
    cert = search_equivalence(s1, s2, budget=args.budget, cyclic=args.cyclic)
    if cert is None:
        _emit_report("search", {"found": False, "budget": args.budget})
        print("no certificate found within budget", file=sys.stderr)
        return EXIT_SEMANTIC
    _emit(cert)
    return EXIT_OK


# ─────────────────────────────────────────────────────────────
# Chart Commands
# ─────────────────────────────────────────────────────────────

def cmd_chart_validate(args) -> int:
    report = validate(read_as(args.file, Chart))
    _emit_report("chart_validate", report.to_dict())
    for v in report.violations:
        print(f"vertex {v.vertex}: {v.message}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_SEMANTIC


def cmd_chart_census(args) -> int:
    c = census(read_as(args.file, Chart))
    data = c.to_dict()
    data["chiral"] = c.n0_minus == 0 and not any(c.nh_minus)
    _emit_report("chart_census", data)
    return EXIT_OK


def cmd_chart_compile(args) -> int:
    _emit(compile_certificate(read_as(args.file, MoveCertificate), Capping(args.capping)))
    return EXIT_OK


def cmd_chart_dot(args) -> int:
    sys.stdout.write(to_dot(read_as(args.file, Chart)))
    return EXIT_OK


def cmd_chart_build(args) -> int:
    _emit(build_named(args.name, args.genus, args.h))
    return EXIT_OK


def cmd_chart_move(args) -> int:
    chart = read_as(args.file, Chart)
    kind = LocalMoveKind(args.kind)
    if kind.is_inverse:
        strands = _int_list(args.strands or "")
        flags = [bool(x) for x in _int_list(args.in_first or "")]
        site = ExpandSite(args.black, tuple(strands), tuple(flags))
    else:
        if args.vertex is None:
            raise MonodromyError(f"{kind.value} needs --vertex")
        site = CollapseSite(args.vertex, args.black)
    out, inverse = local_move_with_inverse(chart, kind, site)
    logger.info(f"inverse site: {inverse}")
    _emit(out)
    return EXIT_OK


# ─────────────────────────────────────────────────────────────
# Parser
# ─────────────────────────────────────────────────────────────

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hlf",
        description="Hurwitz systems, stabilization and charts of hyperelliptic Lefschetz fibrations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def file_command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.set_defaults(handler=handler)
        return p

    file_command("counts", cmd_counts, "singular fiber census and flags")
    file_command("invariant", cmd_invariant, "E(f) and its divisibility")
    file_command("normalize", cmd_normalize, "stabilization normal form")

    p = sub.add_parser("basic", help="emit a basic Hurwitz system")
    p.add_argument("name", choices=BASIC_NAMES)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.set_defaults(handler=cmd_basic)

    p = sub.add_parser("sum", help="fiber sum")
    p.add_argument("files", nargs="+")
    p.set_defaults(handler=cmd_sum)

    p = file_command("move", cmd_move, "apply one move")
    p.add_argument("--kind", required=True, choices=[k.value for k in MoveType])
    p.add_argument("--pos", type=int, required=True)
    p.add_argument("--h", type=int, default=None)

    p = file_command("stabilize", cmd_stabilize, "fiber sum with m copies of W0")
    p.add_argument("--m", type=int, required=True)

    p = file_command("realize", cmd_realize, "system realizing the normal form")
    p.add_argument("--m", type=int, default=0)

    p = file_command("rep", cmd_rep, "image of the total monodromy")
    p.add_argument("--kind", choices=("perm", "symp"), default="symp")

    p = sub.add_parser("relations", help="check the defining relations")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(handler=cmd_relations)

    p = sub.add_parser("derive-w2h", help="certificate from (h+1)W0 to W'2h")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--contract", action="store_true", help="end in W2h instead of W'2h")
    p.set_defaults(handler=cmd_derive_w2h)

    file_command("verify", cmd_verify, "replay a certificate")

    p = sub.add_parser("search", help="bounded search for a certificate")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(handler=cmd_search)

    chart = sub.add_parser("chart", help="chart tools")
    chart_sub = chart.add_subparsers(dest="chart_command", required=True)

    def chart_command(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        p = chart_sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.set_defaults(handler=handler)
        return p

    chart_command("validate", cmd_chart_validate, "check vertex conditions and planarity")
    chart_command("census", cmd_chart_census, "count black vertices by type")
    p = chart_command("compile", cmd_chart_compile, "chart of a certificate")
    p.add_argument("--capping", choices=[c.value for c in Capping], default=Capping.BLACK_BOTH.value)
    chart_command("dot", cmd_chart_dot, "Graphviz export")

    p = chart_sub.add_parser("build", help="named chart")
    p.add_argument("name", choices=BUILDER_NAMES)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--h", type=int, default=1)
    p.set_defaults(handler=cmd_chart_build)

    p = chart_command("move", cmd_chart_move, "apply a C2/C3/C4 move or its inverse")
    p.add_argument("--kind", required=True, choices=[k.value for k in LocalMoveKind])
    p.add_argument("--black", type=int, required=True)
    p.add_argument("--vertex", type=int, default=None)
    p.add_argument("--strands", default=None, help="comma-separated edge ids (inverse moves)")
    p.add_argument("--in-first", dest="in_first", default=None, help="comma-separated 0/1 flags (inverse moves)")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=get_log_level(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.handler(args)
    except PARSE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except MonodromyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    raise SystemExit(main())
