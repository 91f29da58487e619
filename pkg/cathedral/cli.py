#!/usr/bin/env python
"""
Command-line entry point.

Every command maps onto one library operation; results go to stdout (or
--output) and logs to stderr. Exit codes: 0 success, 1 a property or
theorem failed, 2 usage or input error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from tabulate import tabulate

from cathedral.config import LOGGING_CONFIG, VERIFY_CONFIG
from cathedral.decomposition import decompose, primal_decompose, synthesize
from cathedral.distance import profile_summary
from cathedral.exceptions import CathedralError, TheoremViolation
from cathedral.io import (
    document_from_graft,
    dump_document,
    emit_certificate,
    emit_decomposition,
    emit_dot,
    emit_json,
    gen_random_graft,
    load_graft_file,
    spec_from_documents,
)
from cathedral.joins import min_join, min_join_bruteforce
from cathedral.structure import grow_maximal_bipartitic_extreme
from cathedral.verify import run_verify_suite, summary_rows

logger = logging.getLogger(__name__)


def setup_logging(level: Optional[str] = None) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if LOGGING_CONFIG["file"]:
        handlers.append(logging.FileHandler(Path(LOGGING_CONFIG["file"])))
    logging.basicConfig(
        level=level or LOGGING_CONFIG["level"],
        format=LOGGING_CONFIG["format"],
        handlers=handlers,
        force=True,
    )


def _write(args: argparse.Namespace, data: bytes) -> None:
    if getattr(args, "output", None):
        Path(args.output).write_bytes(data)
        logger.info(f"Wrote {args.output}")
    else:
        sys.stdout.write(data.decode("utf-8"))


def cmd_minjoin(args: argparse.Namespace) -> int:
    graft = load_graft_file(args.file).to_graft()
    join = min_join_bruteforce(graft) if args.oracle else min_join(graft)
    if args.table:
        rows = [[u, v] for u, v in join.sorted_edges()]
        sys.stdout.write(tabulate(rows, headers=["u", "v"], tablefmt="fancy_grid") + f"\nsize: {join.size}\n")
    else:
        _write(args, emit_json({"size": join.size, "join": [list(e) for e in join.sorted_edges()]}))
    return 0


def cmd_dist(args: argparse.Namespace) -> int:
    graft = load_graft_file(args.file).to_graft()
    table = profile_summary(graft, min_join(graft), args.source)
    if args.table:
        rows = [[v, "-" if d is None else d, part] for v, d, part in table["rows"]]
        sys.stdout.write(tabulate(rows, headers=["vertex", "distance", "part"], tablefmt="fancy_grid") + "\n")
    else:
        _write(args, emit_json(table))
    return 0


def cmd_primal(args: argparse.Namespace) -> int:
    bg = load_graft_file(args.file).to_bipartite()
    certificate = primal_decompose(bg, args.root)
    _write(args, emit_certificate(certificate))
    return 0


def _decomposition(args: argparse.Namespace):
    bg = load_graft_file(args.file).to_bipartite()
    join = min_join(bg.graft)
    spine = grow_maximal_bipartitic_extreme(bg, join, args.seed_vertex)
    return decompose(bg, join, spine)


def cmd_decompose(args: argparse.Namespace) -> int:
    decomposition = _decomposition(args)
    certificates = None
    if args.certificates:
        certificates = {t.label: primal_decompose(t.graft, t.root, t.join) for t in decomposition.teeth}
    _write(args, emit_dot(decomposition) if args.dot else emit_decomposition(decomposition, certificates))
    return 0


def cmd_synthesize(args: argparse.Namespace) -> int:
    skeleton = load_graft_file(args.skeleton)
    teeth = [load_graft_file(path) for path in args.tooth or []]
    graft = synthesize(spec_from_documents(skeleton, teeth))
    _write(args, dump_document(document_from_graft(graft)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verify_suite(args.suite, args.max_n, args.trials, args.seed, args.progress or None, not args.no_minimize)
    if args.json:
        _write(args, (report.model_dump_json(indent=2) + "\n").encode("utf-8"))
    else:
        rows = summary_rows(report)
        sys.stdout.write(f"suite: {report.suite}  instances: {report.instances}  failures: {len(report.failures)}\n")
        if rows:
            sys.stdout.write(tabulate(rows, headers=["suite", "property", "detail"], tablefmt="fancy_grid") + "\n")
    return report.exit_code


def cmd_gen(args: argparse.Namespace) -> int:
    m = args.m if args.m is not None else max(args.n - 1, 0)
    doc = gen_random_graft(args.n, m, args.density, args.seed, args.bipartite)
    _write(args, dump_document(doc))
    return 0


def cmd_export(args: argparse.Namespace) -> int:
    as_json = args.format == "json"
    if args.seed_vertex:
        decomposition = _decomposition(args)
        _write(args, emit_decomposition(decomposition) if as_json else emit_dot(decomposition))
        return 0
    graft = load_graft_file(args.file).to_graft()
    join = min_join(graft)
    if as_json:
        doc = document_from_graft(graft).model_dump(exclude_none=True, exclude={"attachments"})
        _write(args, emit_json({"graft": doc, "join": [list(e) for e in join.sorted_edges()]}))
    else:
        _write(args, emit_dot(graft, join))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cathedral", description="Minimum joins, distances and cathedral decompositions of grafts")
    parser.add_argument("--log-level", default=None, help="Overrides LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_output(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--output", "-o", help="Write to this file instead of stdout")
        return p

    p = with_output(sub.add_parser("minjoin", help="Minimum join of a graft file"))
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="Use the brute-force oracle")
    p.add_argument("--table", action="store_true", help="Print a table instead of JSON")
    p.set_defaults(handler=cmd_minjoin)

    p = with_output(sub.add_parser("dist", help="Distances and A/D/C parts from a root"))
    p.add_argument("file")
    p.add_argument("--from", dest="source", required=True, help="Root vertex")
    p.add_argument("--table", action="store_true")
    p.set_defaults(handler=cmd_dist)

    p = with_output(sub.add_parser("primal", help="Recursive certificate of a primal bipartite graft"))
    p.add_argument("file")
    p.add_argument("--root", required=True)
    p.set_defaults(handler=cmd_primal)

    p = with_output(sub.add_parser("decompose", help="Decompose around the maximal extreme set grown from a vertex"))
    p.add_argument("file")
    p.add_argument("--seed-vertex", required=True)
    p.add_argument("--dot", action="store_true", help="Emit DOT instead of JSON")
    p.add_argument("--certificates", action="store_true", help="Attach a primal certificate to every tooth")
    p.set_defaults(handler=cmd_decompose)

    p = with_output(sub.add_parser("synthesize", help="Glue tooth files into a skeleton comb file"))
    p.add_argument("--skeleton", required=True)
    p.add_argument("--tooth", action="append", help="Tooth file (repeatable)")
    p.set_defaults(handler=cmd_synthesize)

    p = with_output(sub.add_parser("verify", help="Run a property suite"))
    p.add_argument("--suite", default="all")
    p.add_argument("--max-n", type=int, default=VERIFY_CONFIG["max_n"])
    p.add_argument("--trials", type=int, default=VERIFY_CONFIG["trials"])
    p.add_argument("--seed", type=int, default=VERIFY_CONFIG["seed"])
    p.add_argument("--progress", action="store_true")
    p.add_argument("--no-minimize", action="store_true", help="Report failing instances unshrunk")
    p.add_argument("--json", action="store_true", help="Emit the full report as JSON")
    p.set_defaults(handler=cmd_verify)

    p = with_output(sub.add_parser("gen", help="Random connected graft document"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="Edge count (default n - 1)")
    p.add_argument("--density", type=float, default=0.5, help="Terminal probability")
    p.add_argument("--seed", type=int, default=VERIFY_CONFIG["seed"])
    p.add_argument("--bipartite", action="store_true")
    p.set_defaults(handler=cmd_gen)

    p = with_output(sub.add_parser("export", help="DOT or JSON export of a graft with its minimum join, or of a decomposition"))
    p.add_argument("file")
    p.add_argument("--seed-vertex", default=None, help="Export the decomposition around this vertex")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", dest="format", action="store_const", const="dot", help="DOT output (default)")
    fmt.add_argument("--json", dest="format", action="store_const", const="json", help="JSON output")
    p.set_defaults(format="dot")
    p.set_defaults(handler=cmd_export)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    try:
        return args.handler(args)
    except TheoremViolation as e:
        logger.error(f"Property failed: {e}")
        logger.debug("Traceback", exc_info=True)
        return 1
    except (CathedralError, OSError) as e:
        logger.error(f"Error: {e}")
        logger.debug("Traceback", exc_info=True)
        return 2
    except KeyboardInterrupt:
        logger.info("Operation cancelled by user.")
        return 2


if __name__ == "__main__":
    sys.exit(main())
