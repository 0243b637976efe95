"""Command-line front end: ``halin <command> ...``.

Exit codes: 0 for any answer (including "not Halin"), 2 for bad input,
3 for oracle-bound or retry-budget errors, 4 for internal consistency failures.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

from .coloring import (
    ColoringGap,
    OrientationError,
    SearchExhausted,
    four_color_exact,
    orient_representation,
    three_color_wheel_free,
    verify_proper,
)
from .generator import GeneratorParams, RetryBudgetExhausted, generate_halin
from .graph import Graph, GraphError, graph_from_edge_list, min_degree, to_edge_list
from .recognition import (
    DEFAULT_ORACLE_BOUND,
    OracleBoundExceeded,
    Reason,
    RecognitionReport,
    recognize_oracle,
    recognize_paper,
    shortest_path_certificate,
    verify_certificate,
)
from .wheels import (
    CHROMATIC_ORACLE_BOUND,
    WHEEL_ORACLE_BOUND,
    BoundExceeded,
    brute_force_chromatic,
    chromatic_number_halin,
    find_odd_wheel,
    oracle_find_odd_wheel,
)

EXIT_OK, EXIT_INPUT, EXIT_BOUND, EXIT_INTERNAL = 0, 2, 3, 4
COMPARE_MAX_N = 12
MANIFEST = "manifest.json"


class CommandError(Exception):
    def __init__(self, exit_code: int, message: str, report: dict | None = None):
        super().__init__(message)
        self.exit_code = exit_code
        self.report = report or {}


@dataclass
class CommandOutcome:
    exit_code: int
    report: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    text: str = ""


def _read_graph(source: str) -> Graph:
    try:
        data = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise CommandError(EXIT_INPUT, f"cannot read {source}: {exc.strerror}") from exc
    try:
        return graph_from_edge_list(data)
    except GraphError as exc:
        raise CommandError(EXIT_INPUT, f"{source}: {exc}") from exc


def _bound_warning(flag: str, value: int, default: int) -> list[str]:
    if value > default:
        return [f"{flag} {value} exceeds the default {default}; exhaustive search may take very long"]
    return []


def _not_halin_note(report: RecognitionReport, g: Graph) -> str:
    if report.roots_tried and report.roots_tried[0][0] is None:
        why = report.roots_tried[0][1]
        if why is Reason.LOW_DEGREE:
            return f"min degree {min_degree(g)}"
        if why is Reason.DISCONNECTED:
            return "disconnected"
        return "fewer than 4 vertices"
    if report.oracle_used:
        return "no spanning tree yields a certificate"
    return "no BFS root yields a certificate"


def _verdict_line(report: RecognitionReport, g: Graph) -> str:
    if report.is_halin:
        cert = report.certificate
        return f"Halin; root {cert.tree.root}; leaf cycle " + " ".join(map(str, cert.leaf_cycle))
    return f"not Halin ({_not_halin_note(report, g)})"


def _recognize_for_coloring(g: Graph, bound: int) -> tuple[RecognitionReport, dict]:
    """Paper test first; the oracle settles negatives it can afford."""
    report = recognize_paper(g)
    info = {"recognized_by": "paper"}
    if not report.is_halin and g.vertex_count <= bound:
        report = recognize_oracle(g, bound)
        info["recognized_by"] = "oracle"
    info["verdict"] = report.verdict.value
    info["summary"] = _verdict_line(report, g)
    return report, info


# -- commands ---------------------------------------------------------------

def cmd_recognize(args) -> CommandOutcome:
    g = _read_graph(args.input)
    warnings = _bound_warning("--max-oracle-n", args.max_oracle_n, DEFAULT_ORACLE_BOUND)
    paper = recognize_paper(g)
    report: dict[str, Any] = {
        "command": "recognize",
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "summary": _verdict_line(paper, g),
        "paper": paper.to_dict(),
    }
    if args.oracle:
        try:
            oracle = recognize_oracle(g, args.max_oracle_n)
        except OracleBoundExceeded as exc:
            raise CommandError(EXIT_BOUND, str(exc), report) from exc
        report["oracle"] = oracle.to_dict()
        report["agree"] = oracle.verdict == paper.verdict

    lines = [report["summary"]]
    if paper.is_halin:
        lines.append("tree edges: " + " ".join(f"{u}-{v}" for u, v in paper.certificate.tree.edges()))
    if not args.quiet:
        for root, why in paper.roots_tried:
            if root is not None:
                lines.append(f"root {root} rejected: {why.value}")
    if args.oracle:
        lines.append(f"oracle: {report['oracle']['verdict']}; agreement: {'yes' if report['agree'] else 'no'}")
    return CommandOutcome(EXIT_OK, report, warnings, "\n".join(lines) + "\n")


def cmd_color(args) -> CommandOutcome:
    g = _read_graph(args.input)
    warnings = _bound_warning("--max-oracle-n", args.max_oracle_n, DEFAULT_ORACLE_BOUND)
    recog, report = _recognize_for_coloring(g, args.max_oracle_n)
    report = {"command": "color", **report}
    if not recog.is_halin:
        return CommandOutcome(EXIT_OK, report, warnings, report["summary"] + "\n")
    cert = recog.certificate
    chi = chromatic_number_halin(g, cert)
    report["chromatic_number"] = chi
    lines = [f"χ={chi}"]
    rep = orient_representation(g, cert)
    coloring = None
    fell_back = False
    if chi == 3:
        try:
            coloring = three_color_wheel_free(g, rep)
            report["method"] = "three_color_wheel_free"
        except ColoringGap as exc:
            partial = {str(v): c for v, c in sorted(exc.partial.items())}
            if not args.fallback_4:
                report["error"] = str(exc)
                report["partial_coloring"] = partial
                raise CommandError(EXIT_INTERNAL, f"three-colouring failed: {exc}", report) from exc
            warnings.append(f"three-colouring failed ({exc}); fell back to exact search")
            fell_back = True
    else:
        witness = find_odd_wheel(g)
        report["odd_wheel"] = witness.to_dict()
        lines[0] += f"; odd wheel: hub {witness.hub} rim " + " ".join(map(str, witness.rim))
    if coloring is None and (chi == 4 and args.fallback_4 or fell_back):
        coloring = four_color_exact(g, rep)
        report["method"] = "four_color_exact"

    if coloring is not None:
        if not verify_proper(g, coloring):
            raise CommandError(EXIT_INTERNAL, "refusing to emit an improper colouring", report)
        report["colors_used"] = coloring.num_colors
        report["coloring"] = {str(v): c for v, c in enumerate(coloring.assignment)}
        lines.append(f"verified proper; {coloring.num_colors} colours")
        lines.append(coloring.to_text().rstrip("\n"))
        if args.dot:
            try:
                Path(args.dot).write_text(coloring.to_dot(g), encoding="utf-8")
            except OSError as exc:
                raise CommandError(EXIT_INPUT, f"cannot write {args.dot}: {exc.strerror}", report) from exc
    return CommandOutcome(EXIT_OK, report, warnings, "\n".join(lines) + "\n")


def cmd_chromatic(args) -> CommandOutcome:
    g = _read_graph(args.input)
    warnings = _bound_warning("--max-oracle-n", args.max_oracle_n, DEFAULT_ORACLE_BOUND)
    recog, report = _recognize_for_coloring(g, args.max_oracle_n)
    report = {"command": "chromatic", **report}
    if not recog.is_halin:
        return CommandOutcome(EXIT_OK, report, warnings, report["summary"] + "\n")
    chi = chromatic_number_halin(g, recog.certificate)
    report["chromatic_number"] = chi
    text = f"χ={chi}"
    if chi == 4:
        witness = find_odd_wheel(g)
        report["odd_wheel"] = witness.to_dict()
        text += f"; odd wheel: hub {witness.hub} rim " + " ".join(map(str, witness.rim))
    return CommandOutcome(EXIT_OK, report, warnings, text + "\n")


def cmd_wheels(args) -> CommandOutcome:
    g = _read_graph(args.input)
    witness = find_odd_wheel(g)
    report: dict[str, Any] = {"command": "wheels", "odd_wheel": witness.to_dict() if witness else None}
    text = f"odd wheel: {witness.to_text()}" if witness else "no induced odd wheel"
    if args.oracle:
        try:
            other = oracle_find_odd_wheel(g, WHEEL_ORACLE_BOUND)
        except BoundExceeded as exc:
            raise CommandError(EXIT_BOUND, str(exc), report) from exc
        report["oracle_agrees"] = (other is None) == (witness is None)
        text += f"\noracle agrees: {'yes' if report['oracle_agrees'] else 'no'}"
    return CommandOutcome(EXIT_OK, report, [], text + "\n")


def instance_name(params: GeneratorParams) -> str:
    key = f"internal={params.target_internal};max_children={params.max_children};odd_wheel_free={params.require_odd_wheel_free}"
    digest = hashlib.sha256(key.encode()).hexdigest()[:8]
    return f"halin_{digest}_s{params.seed}.edges"


def cmd_generate(args) -> CommandOutcome:
    entries = []
    chunks = []
    try:
        for i in range(args.count):
            params = GeneratorParams(args.internal, args.max_children, args.seed + i, args.odd_wheel_free)
            g, cert = generate_halin(params)
            witness = find_odd_wheel(g)
            oracle = recognize_oracle(g).verdict.value if g.vertex_count <= COMPARE_MAX_N else "skipped"
            name = instance_name(params)
            entries.append({
                "file": name,
                "params": params.to_dict(),
                "vertices": g.vertex_count,
                "edges": g.edge_count,
                "oracle_verdict": oracle,
                "odd_wheel": witness.to_dict() if witness else None,
                "certificate": cert.to_dict(),
            })
            chunks.append((name, to_edge_list(g)))
    except ValueError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from exc
    except RetryBudgetExhausted as exc:
        raise CommandError(EXIT_BOUND, str(exc)) from exc

    report = {"command": "generate", "instances": entries}
    if args.out:
        out = Path(args.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
            for name, body in chunks:
                (out / name).write_text(body, encoding="utf-8")
            (out / MANIFEST).write_text(json.dumps(entries, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        except OSError as exc:
            raise CommandError(EXIT_INPUT, f"cannot write to {out}: {exc.strerror}") from exc
        text = f"wrote {len(chunks)} instance(s) and {MANIFEST} to {out}\n"
    else:
        text = "".join(f"# {name}\n{body}" for name, body in chunks)
    return CommandOutcome(EXIT_OK, report, [], text)


def compare_corpus(files: list[Path], max_n: int, oracle_bound: int) -> dict[str, Any]:
    """Paper test vs oracle on each file, plus the odd-wheel chromatic check."""
    rows = []
    totals = dict.fromkeys(
        ["instances", "skipped", "oracle_halin", "paper_halin", "agree", "paper_false_negatives",
         "order_independent_misses", "paper_false_positives", "chromatic_checked", "chromatic_consistent"], 0)
    for path in files:
        g = graph_from_edge_list(path.read_bytes())
        if g.vertex_count > max_n:
            totals["skipped"] += 1
            rows.append({"file": path.name, "vertices": g.vertex_count, "skipped": True})
            continue
        totals["instances"] += 1
        paper = recognize_paper(g)
        oracle = recognize_oracle(g, oracle_bound)
        false_pos = paper.is_halin and not (oracle.is_halin and verify_certificate(g, paper.certificate))
        row: dict[str, Any] = {
            "file": path.name,
            "vertices": g.vertex_count,
            "paper": paper.verdict.value,
            "oracle": oracle.verdict.value,
            "agree": paper.verdict == oracle.verdict,
        }
        totals["oracle_halin"] += oracle.is_halin
        totals["paper_halin"] += paper.is_halin
        totals["agree"] += row["agree"]
        if oracle.is_halin and not paper.is_halin:
            totals["paper_false_negatives"] += 1
            order_free = shortest_path_certificate(g, oracle_bound) is None
            row["miss"] = "order-independent" if order_free else "order-dependent"
            totals["order_independent_misses"] += order_free
        totals["paper_false_positives"] += false_pos
        if oracle.is_halin and g.vertex_count <= min(COMPARE_MAX_N, CHROMATIC_ORACLE_BOUND):
            classified = chromatic_number_halin(g, oracle.certificate)
            exact = brute_force_chromatic(g)
            row["chromatic"] = {"classified": classified, "brute_force": exact}
            totals["chromatic_checked"] += 1
            totals["chromatic_consistent"] += classified == exact
        rows.append(row)
    return {"command": "compare", "rows": rows, "summary": totals}


def cmd_compare(args) -> CommandOutcome:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise CommandError(EXIT_INPUT, f"{corpus} is not a directory")
    files = sorted(corpus.glob("*.edges"))
    if not files:
        raise CommandError(EXIT_INPUT, f"no .edges files in {corpus}")
    warnings = _bound_warning("--max-n", args.max_n, COMPARE_MAX_N)
    try:
        report = compare_corpus(files, args.max_n, max(args.max_n, DEFAULT_ORACLE_BOUND))
    except GraphError as exc:
        raise CommandError(EXIT_INPUT, str(exc)) from exc

    s = report["summary"]
    lines = []
    if not args.quiet:
        lines.append(f"{'file':<40} {'n':>4} {'bfs':>9} {'oracle':>9} {'agree':>5} {'chi':>7}")
        for row in report["rows"]:
            if row.get("skipped"):
                lines.append(f"{row['file']:<40} {row['vertices']:>4} {'skipped':>9}")
                continue
            chi = row.get("chromatic")
            chi_s = f"{chi['classified']}/{chi['brute_force']}" if chi else "-"
            lines.append(f"{row['file']:<40} {row['vertices']:>4} {row['paper']:>9} {row['oracle']:>9} "
                         f"{'yes' if row['agree'] else 'NO':>5} {chi_s:>7}")
    lines += [
        f"instances: {s['instances']} (skipped {s['skipped']} above n={args.max_n})",
        f"oracle Halin: {s['oracle_halin']}/{s['instances']}; BFS test Halin: {s['paper_halin']}/{s['instances']}",
        f"agreement: {s['agree']}/{s['instances']}",
        f"BFS test false negatives: {s['paper_false_negatives']} "
        f"({s['order_independent_misses']} fail under every BFS neighbour order); "
        f"BFS test false positives: {s['paper_false_positives']}",
        f"odd-wheel chromatic check: {s['chromatic_consistent']}/{s['chromatic_checked']} consistent",
    ]
    return CommandOutcome(EXIT_OK, report, warnings, "\n".join(lines) + "\n")


# -- argument parsing -------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit a JSON report")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="omit per-item detail")

    parser = argparse.ArgumentParser(prog="halin", description="Halin graph recognition and colouring")
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--quiet", action="store_true", help="omit per-item detail")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    def oracle_bound(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-oracle-n", type=int, default=DEFAULT_ORACLE_BOUND,
                       help=f"vertex bound for exhaustive recognition (default {DEFAULT_ORACLE_BOUND})")

    p = add("recognize", cmd_recognize, "test whether a graph is Halin")
    p.add_argument("input", help="edge-list file, or - for stdin")
    p.add_argument("--oracle", action="store_true", help="also run the spanning-tree oracle")
    oracle_bound(p)

    p = add("color", cmd_color, "colour a Halin graph optimally")
    p.add_argument("input")
    p.add_argument("--fallback-4", action="store_true", help="use exact search when three colours are not produced")
    p.add_argument("--dot", metavar="PATH", help="also write a coloured DOT file")
    oracle_bound(p)

    p = add("chromatic", cmd_chromatic, "classify the chromatic number of a Halin graph")
    p.add_argument("input")
    oracle_bound(p)

    p = add("wheels", cmd_wheels, "find an induced odd wheel")
    p.add_argument("input")
    p.add_argument("--oracle", action="store_true", help=f"cross-check by exhaustive search (n <= {WHEEL_ORACLE_BOUND})")

    p = add("generate", cmd_generate, "generate random Halin graphs")
    p.add_argument("--internal", type=int, required=True, help="number of internal tree vertices")
    p.add_argument("--max-children", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--odd-wheel-free", action="store_true")
    p.add_argument("--out", metavar="DIR", help="write files and a manifest here instead of stdout")

    p = add("compare", cmd_compare, "compare the BFS test against the oracle over a corpus")
    p.add_argument("corpus", help="directory of .edges files")
    p.add_argument("--max-n", type=int, default=COMPARE_MAX_N)
    return parser


def dispatch(args: argparse.Namespace) -> CommandOutcome:
    try:
        return args.func(args)
    except CommandError as exc:
        return CommandOutcome(exc.exit_code, {**exc.report, "error": str(exc)}, [], "")
    except (OracleBoundExceeded, BoundExceeded, RetryBudgetExhausted) as exc:
        return CommandOutcome(EXIT_BOUND, {"error": str(exc)}, [], "")
    except (ColoringGap, SearchExhausted, OrientationError) as exc:
        return CommandOutcome(EXIT_INTERNAL, {"error": str(exc)}, [], "")


def run(argv: list[str] | None = None) -> CommandOutcome:
    return dispatch(build_parser().parse_args(argv))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    outcome = dispatch(args)
    for w in outcome.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.json:
        report = {**outcome.report, "exit_code": outcome.exit_code, "warnings": outcome.warnings}
        print(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False))
    elif outcome.exit_code == EXIT_OK:
        sys.stdout.write(outcome.text)
    if outcome.exit_code != EXIT_OK:
        print(f"error: {outcome.report.get('error', 'failed')}", file=sys.stderr)
        if "partial_coloring" in outcome.report and not args.json:
            print("partial colouring:", file=sys.stderr)
            for v, c in outcome.report["partial_coloring"].items():
                print(f"{v} {c}", file=sys.stderr)
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
