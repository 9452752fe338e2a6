"""
kblab command line

Subcommands read one graph (graph6 or edge list) from --in PATH, --g6 RECORD
or a positional argument (a file path, else an inline graph6 record) and
write graph6, JSON, DOT or text to stdout. Progress goes to stderr.

Exit codes:
    0  success, or the checked property holds
    1  sound negative verdict (P3 violation, counterexample, not a biclique graph)
    2  usage or input error
    3  inconclusive (no certificate either way)

Examples:
    kblab kb --in C7.g6
    kblab check-p3 --g6 Bw
    kblab analyze graph.g6 --max-n 7
    kblab verify lemma1 --n 7 --jobs 4
    kblab gen --n 6 --twin-free --store database/atlas.db
    kblab conjecture 1 --max-n 7 --jobs 4 --store
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Dict, List, Optional

from kblab.atlas.atlas_constants import DEFAULT_ATLAS_DB_PATH, GENERATION_CAP
from kblab.atlas.generate import connected_graphs, ingest_graph6
from kblab.core.console import fail, say
from kblab.core.constants import MAX_VERTICES
from kblab.core.errors import KBLabError, VerificationError
from kblab.core.formats import parse_graph_text, to_dot, to_graph6, vertex_list, write_graph6_file
from kblab.core.graph import Graph, mask_of
from kblab.lab import conjectures, verify
from kblab.lab.figures import draw_graph
from kblab.lab.lab_constants import (
    CLAIM_CONJECTURE2,
    DEFAULT_CONJECTURE2_K_MAX,
    DEFAULT_CONJECTURE_MAX_N,
    DEFAULT_FIGURE_DIR,
    DEFAULT_PREIMAGE_MAX_N,
    DEFAULT_REPORT_DIR,
    EXIT_INCONCLUSIVE,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_USAGE,
    OBSERVATION1_K_MAX,
    OBSERVATION1_K_MIN,
    REPORT_CLAIM,
    REPORT_COUNTS,
    REPORT_EXCEPTIONAL,
    REPORT_ITEMS,
    REPORT_PARAMETERS,
    REPORT_WALL_TIME,
    ROUNDTRIP_MAX_N,
    ROUNDTRIP_MIN_N,
    STATUS_PROVED_NO,
    VERDICT_INCONCLUSIVE,
    VERDICT_IS_BICLIQUE,
    VERDICT_NOT_BICLIQUE,
)
from kblab.lab.lab_utils import generate_report_index, reverify_report, write_report
from kblab.lab.preimage import find_preimage
from kblab.removal.analyze import analyze_not_biclique
from kblab.removal.degree2 import remove_degree2
from kblab.structure.bicliques import brute_force_bicliques, enumerate_bicliques
from kblab.structure.conditions import check_theorem1, p3_violations
from kblab.structure.kb import biclique_graph
from kblab.structure.twins import false_twin_classes, is_twin_free, twin_reduce

FORMATS = ("text", "json", "graph6", "dot")

# Expected number of exceptional graphs of the base-case scan per order
LEMMA1_EXPECTED_EXCEPTIONAL = {6: 3, 7: 0, 8: 0}


class UsageError(KBLabError):
    """Bad combination of command-line arguments."""


# =============================================================================
# INPUT AND OUTPUT
# =============================================================================

def read_input(args: argparse.Namespace) -> Graph:
    """Exactly one of --in, --g6 or the positional source."""
    sources = [s for s in (args.input, args.g6, args.source) if s is not None]
    if len(sources) != 1:
        raise UsageError("Give exactly one input: --in PATH, --g6 RECORD or a positional source")
    if args.g6 is not None:
        return parse_graph_text(args.g6)
    path = Path(args.input or args.source)
    if args.input is not None or path.exists():
        return parse_graph_text(path.read_text())
    return parse_graph_text(args.source)


def emit(text: str, out: Optional[str] = None) -> None:
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def emit_json(payload, out: Optional[str] = None) -> None:
    emit(json.dumps(payload, indent=2, sort_keys=True), out)


def emit_graph(g: Graph, fmt: str, out: Optional[str] = None, name: str = "G",
               highlight: int = 0, extra: Optional[Dict] = None) -> None:
    if fmt == "dot":
        emit(to_dot(g, name, highlight), out)
    elif fmt == "json":
        emit_json({"graph6": to_graph6(g), "n": g.n, "edges": g.edges(), **(extra or {})}, out)
    else:
        emit(to_graph6(g), out)


def _check_max_n(value: int) -> int:
    if not 1 <= value <= GENERATION_CAP:
        raise UsageError(f"--max-n must lie in 1..{GENERATION_CAP}, got {value}")
    return value


# =============================================================================
# SUBCOMMANDS
# =============================================================================

def cmd_bicliques(args) -> int:
    g = read_input(args)
    family = brute_force_bicliques(g) if args.oracle else enumerate_bicliques(g)
    if args.format == "json":
        emit_json([{"left": list(b.left_list()), "right": list(b.right_list())} for b in family], args.out)
    else:
        emit("\n".join(str(b) for b in family), args.out)
    return EXIT_OK


def cmd_kb(args) -> int:
    g = read_input(args)
    kb = biclique_graph(g)
    mapping = {str(q): str(b) for q, b in enumerate(kb.bicliques)}
    if args.format == "text":
        emit(to_graph6(kb.graph) + "\n" + json.dumps(mapping, sort_keys=False), args.out)
    else:
        emit_graph(kb.graph, args.format, args.out, name="KB", extra={"bicliques": mapping})
    return EXIT_OK


def cmd_twins(args) -> int:
    g = read_input(args)
    partition = false_twin_classes(g)
    reduction = twin_reduce(g, partition)
    classes = [vertex_list(mask) for mask in partition.classes]
    if args.format == "json":
        emit_json({
            "classes": [list(map(int, c.split())) for c in classes],
            "representatives": list(partition.representatives),
            "reduced": to_graph6(reduction.graph),
        }, args.out)
    elif args.format in ("graph6", "dot"):
        emit_graph(reduction.graph, args.format, args.out, name="Tw")
    else:
        emit("\n".join(f"{{{c}}}" for c in classes) + "\n" + to_graph6(reduction.graph), args.out)
    return EXIT_OK


def cmd_check_p3(args) -> int:
    g = read_input(args)
    report = check_theorem1(g, trace=args.trace)
    if args.format == "json":
        payload = report.to_dict()
        if args.all:
            payload["violations"] = [list(t) for t in p3_violations(g)]
        emit_json(payload, args.out)
    else:
        lines = [report.verdict]
        if report.witness:
            lines.append("witness: " + " ".join(map(str, report.witness)))
        if args.all:
            lines.extend("violation: " + " ".join(map(str, t)) for t in p3_violations(g))
        for p3, w in sorted(report.containment.items()):
            lines.append(f"{' '.join(map(str, p3))} in {w.kind} with {' '.join(map(str, w.vertices))}")
        emit("\n".join(lines), args.out)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_remove_deg2(args) -> int:
    h = read_input(args)
    result = remove_degree2(h, args.kb_vertex, store_path=args.store)
    if args.format == "json":
        emit_json({
            "h_prime": to_graph6(result.h_prime),
            "plan": result.plan.to_dict(),
            "verified": result.verified,
            "construction": result.construction,
            "diagnostic": result.diagnostic,
            "transcript": result.transcript,
        }, args.out)
    elif args.format == "dot":
        emit(to_dot(result.h_prime, "H_prime"), args.out)
    else:
        emit(to_graph6(result.h_prime), args.out)
        for line in result.transcript:
            say(line)
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = read_input(args)
    result = analyze_not_biclique(g, _check_max_n(args.max_n), exhaustive=args.exhaustive,
                                  store_path=args.store)
    emit_json(result.to_dict(), args.out)
    return {
        VERDICT_IS_BICLIQUE: EXIT_OK,
        VERDICT_NOT_BICLIQUE: EXIT_NEGATIVE,
        VERDICT_INCONCLUSIVE: EXIT_INCONCLUSIVE,
    }[result.verdict]


def cmd_preimage(args) -> int:
    g = read_input(args)
    host = find_preimage(g, _check_max_n(args.max_n), store_path=args.store)
    if host is None:
        say(f"No preimage with at most {args.max_n} vertices")
        return EXIT_INCONCLUSIVE
    emit_graph(host, args.format, args.out, name="H")
    return EXIT_OK


def cmd_gen(args) -> int:
    n = args.n
    if args.ingest:
        graphs = ingest_graph6(args.ingest, n)
    else:
        graphs = connected_graphs(n, args.jobs, args.store, verbose=args.verbose)
    if args.twin_free:
        graphs = tuple(g for g in graphs if is_twin_free(g))
    if args.format == "json":
        emit_json({"n": n, "twin_free": args.twin_free, "count": len(graphs)}, args.out)
    elif args.out:
        write_graph6_file(args.out, graphs)
    else:
        emit("\n".join(to_graph6(g) for g in graphs))
    return EXIT_OK


def _finish_claim(report: Dict, args) -> None:
    reverify_report(report)
    if not args.no_write:
        write_report(report, args.out, verbose=args.verbose)
        generate_report_index(args.out)
    summary = {key: report[key] for key in (REPORT_CLAIM, REPORT_PARAMETERS, REPORT_COUNTS, REPORT_WALL_TIME)}
    if report.get(REPORT_EXCEPTIONAL):
        summary[REPORT_EXCEPTIONAL] = report[REPORT_EXCEPTIONAL]
    emit_json(summary)


def cmd_verify(args) -> int:
    if args.claim == "lemma1":
        report = verify.verify_lemma1_base(args.n, args.jobs, args.verbose, store_path=args.store)
        good = report[REPORT_COUNTS]["exceptional_graphs"] == LEMMA1_EXPECTED_EXCEPTIONAL[args.n]
        if args.n == 6:
            # The exceptional bicliques all meet exactly two others.
            good = good and all(row["kb_degree"] == 2 for row in report[REPORT_ITEMS])
    elif args.claim == "observation1":
        report = verify.verify_observation1(range(args.k_min, args.k_max + 1), args.verbose)
        good = report[REPORT_COUNTS]["violations"] == 0
    else:
        report = verify.verify_theorem2_roundtrip(args.min_n, _check_max_n(args.max_n), args.jobs, args.verbose,
                                                  store_path=args.store)
        good = report[REPORT_COUNTS]["failures"] == 0
    _finish_claim(report, args)
    return EXIT_OK if good else EXIT_NEGATIVE


def cmd_conjecture(args) -> int:
    max_n = _check_max_n(args.max_n)
    if args.number == 1:
        report = conjectures.test_conjecture1(max_n, args.verbose, jobs=args.jobs, store_path=args.store)
    elif args.number == 2:
        report = conjectures.test_conjecture2(args.k_max, max_n, args.verbose, jobs=args.jobs,
                                               store_path=args.store)
    else:
        report = conjectures.test_conjecture3(max_n, args.verbose, jobs=args.jobs, store_path=args.store)
    _finish_claim(report, args)
    if report[REPORT_CLAIM] == CLAIM_CONJECTURE2:
        return EXIT_NEGATIVE if report[REPORT_COUNTS]["inconsistent"] else EXIT_OK
    return EXIT_NEGATIVE if report[REPORT_COUNTS].get(STATUS_PROVED_NO, 0) else EXIT_OK


def cmd_draw(args) -> int:
    g = read_input(args)
    highlight = 0
    title = args.title
    if args.highlight:
        highlight = mask_of(int(v) for v in args.highlight.split())
    elif args.biclique is not None:
        b = enumerate_bicliques(g)[args.biclique]
        highlight = b.vertices
        title = title or f"biclique {b}"
    elif args.p3:
        witness = check_theorem1(g).witness
        if witness:
            highlight = mask_of(witness)
            title = title or f"uncontained P3 {' '.join(map(str, witness))}"
    out = args.out or str(Path(DEFAULT_FIGURE_DIR) / f"{to_graph6(g)}.png")
    path = draw_graph(g, out, highlight, title)
    say(f"Figure written to {path}")
    return EXIT_OK


# =============================================================================
# PARSER
# =============================================================================

def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("source", nargs="?", default=None, help="graph file or inline graph6 record")
    p.add_argument("--in", dest="input", default=None, help="graph6 or edge-list file")
    p.add_argument("--g6", default=None, help="inline graph6 record")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--out", default=None, help="write the result to this file instead of stdout")


def _add_store_argument(p: argparse.ArgumentParser) -> None:
    p.add_argument("--store", nargs="?", const=DEFAULT_ATLAS_DB_PATH, default=None,
                   help=f"SQLite atlas cache (default path {DEFAULT_ATLAS_DB_PATH})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kblab",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"Graphs are limited to {MAX_VERTICES} vertices; generation to {GENERATION_CAP}.",
    )
    ap.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bicliques", help="enumerate the bicliques of a graph")
    _add_input(p)
    p.add_argument("--oracle", action="store_true", help="use the subset-scan oracle")
    p.set_defaults(func=cmd_bicliques)

    p = sub.add_parser("kb", help="biclique graph KB(G) and its biclique map")
    _add_input(p)
    p.set_defaults(func=cmd_kb)

    p = sub.add_parser("twins", help="false-twin classes and Tw(G)")
    _add_input(p)
    p.set_defaults(func=cmd_twins)

    p = sub.add_parser("check-p3", help="induced P3 containment check (exit 1 on violation)")
    _add_input(p)
    p.add_argument("--trace", action="store_true", help="list the diamond/gem of every contained P3")
    p.add_argument("--all", action="store_true", help="list every uncontained P3")
    p.set_defaults(func=cmd_check_p3)

    p = sub.add_parser("remove-deg2", help="build H' with KB(H') = KB(H) - q")
    _add_input(p)
    p.add_argument("--kb-vertex", type=int, required=True, help="degree-2 vertex q of KB(H)")
    _add_store_argument(p)
    p.set_defaults(func=cmd_remove_deg2)

    p = sub.add_parser("analyze", help="strip degree-2 vertices and certify (exit 0/1/3)")
    _add_input(p)
    p.add_argument("--max-n", type=int, default=DEFAULT_PREIMAGE_MAX_N, help="preimage search bound")
    p.add_argument("--exhaustive", action="store_true", help="explore every deletion order")
    _add_store_argument(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("preimage", help="search a host H with KB(H) = G (exit 3 if none)")
    _add_input(p)
    p.add_argument("--max-n", type=int, default=DEFAULT_PREIMAGE_MAX_N)
    _add_store_argument(p)
    p.set_defaults(func=cmd_preimage)

    p = sub.add_parser("gen", help="connected graphs on n vertices, up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--twin-free", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    _add_store_argument(p)
    p.add_argument("--ingest", default=None, help="use this graph6 file as the level instead of generating")
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="reproduce a computer-checked claim")
    p.add_argument("claim", choices=("lemma1", "observation1", "theorem2"))
    p.add_argument("--n", type=int, default=7, choices=sorted(LEMMA1_EXPECTED_EXCEPTIONAL))
    p.add_argument("--k-min", type=int, default=OBSERVATION1_K_MIN)
    p.add_argument("--k-max", type=int, default=OBSERVATION1_K_MAX)
    p.add_argument("--min-n", type=int, default=ROUNDTRIP_MIN_N)
    p.add_argument("--max-n", type=int, default=ROUNDTRIP_MAX_N)
    p.add_argument("--jobs", type=int, default=1)
    _add_store_argument(p)
    p.add_argument("--out", default=DEFAULT_REPORT_DIR, help="report directory")
    p.add_argument("--no-write", action="store_true", help="print the summary only")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="gather evidence on a conjecture")
    p.add_argument("number", type=int, choices=(1, 2, 3))
    p.add_argument("--max-n", type=int, default=DEFAULT_CONJECTURE_MAX_N)
    p.add_argument("--k-max", type=int, default=DEFAULT_CONJECTURE2_K_MAX)
    p.add_argument("--jobs", type=int, default=1)
    _add_store_argument(p)
    p.add_argument("--out", default=DEFAULT_REPORT_DIR, help="report directory")
    p.add_argument("--no-write", action="store_true", help="print the summary only")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("draw", help="render a graph to PNG")
    p.add_argument("source", nargs="?", default=None)
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--g6", default=None)
    p.add_argument("--out", default=None, help=f"PNG path (default {DEFAULT_FIGURE_DIR}/<graph6>.png)")
    p.add_argument("--title", default=None)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--highlight", default=None, help='vertices to draw bold, e.g. "0 1 2"')
    group.add_argument("--biclique", type=int, default=None, help="draw the i-th biclique bold")
    group.add_argument("--p3", action="store_true", help="draw the first uncontained P3 bold")
    p.set_defaults(func=cmd_draw)
    return ap


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the subcommand and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except VerificationError as e:
        fail(f"ERROR: verification failed: {e}")
        return EXIT_USAGE
    except (KBLabError, ValueError, OSError) as e:
        fail(f"ERROR: {e}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
