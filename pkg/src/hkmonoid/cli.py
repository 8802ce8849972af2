"""Command-line interface: ``hk info|enumerate|rep|classify|verify|catalan``.

Exit codes: 0 success, 1 a check failed or an enumeration did not finish,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .combinat import WordBudgetExceeded, avoiders_321, catalan, special_words_count, strongly_special_classes
from .heckea import MAX_RANK, kiselman_quotient
from .mixedgraph import GraphError, MixedGraph, classify_shape, linear_path, parse_graph
from .monoid import format_word
from .rewrite import (
    BUDGET_EXCEEDED,
    FINITE,
    EnumerationResult,
    default_budgets,
    enumerate_monoid,
    hk_monoid,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------------
# helpers


def read_graph(path: str) -> MixedGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        try:
            return MixedGraph.from_json(text)
        except (KeyError, TypeError, ValueError) as e:
            raise GraphError(f"bad graph JSON: {e}") from e
    return parse_graph(text)


def is_type_a_labelled(g: MixedGraph) -> bool:
    return {(a, b) for a, b, _ in g.edges} == {(i, i + 1) for i in range(1, g.n)} and 1 <= g.n <= MAX_RANK


def _budgets(args) -> dict:
    b = default_budgets()
    if getattr(args, "max_rules", None) is not None:
        b["max_rules"] = args.max_rules
    if getattr(args, "max_elements", None) is not None:
        b["max_elements"] = args.max_elements
    return b


def run_engine(g: MixedGraph, engine: str, budgets: dict):
    """(engine used, EnumerationResult, HKBuild or None)."""
    if engine == "auto":
        engine = "hecke-a" if is_type_a_labelled(g) else "rewrite"
    if engine == "hecke-a":
        if not is_type_a_labelled(g):
            raise UsageError("engine mismatch: hecke-a needs the path 1 - 2 - ... - n with n <= 7")
        Q = kiselman_quotient(g)
        en = EnumerationResult(
            g.n, FINITE, [tuple(w) for w in Q.words], [list(r) for r in Q.rc], list(Q.content), True, Q.size
        )
        return engine, en, None
    build = hk_monoid(g, budgets["max_rules"], None, budgets["max_elements"])
    if build.enumeration is None:
        en = EnumerationResult(g.n, BUDGET_EXCEEDED, [], [], [])
    elif build.certified_infinite:
        en = enumerate_monoid(build.system, budgets["max_elements"])
        en.certified_finite = False
    else:
        en = build.enumeration
    return engine, en, build


def status_text(en: EnumerationResult, build) -> str:
    if en.finite:
        return FINITE
    if build is not None and build.certified_infinite:
        return "Infinite"
    return BUDGET_EXCEEDED


def emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def figure_path(args) -> str | None:
    if getattr(args, "plot", None):
        return args.plot
    if getattr(args, "out", None):
        return str(Path(args.out).with_suffix(".png"))
    return None


def shape_text(g: MixedGraph) -> str:
    s = classify_shape(g)
    parts = [
        "dynkin=" + ("+".join(s.components) if s.is_simply_laced_dynkin_union else "no"),
        "type_a_path=" + ("yes" if s.is_type_a_path else "no"),
        "linear=" + ("yes" if s.is_linear_orientation else "no"),
    ]
    if s.eq3_witness:
        parts.append("sink_triple=" + "".join(map(str, s.eq3_witness)))
    if s.eq3_witness_opposite:
        parts.append("source_triple=" + "".join(map(str, s.eq3_witness_opposite)))
    return " ".join(parts)


def _cross_check(g: MixedGraph, en: EnumerationResult, engine: str, budgets: dict) -> str | None:
    other = "rewrite" if engine == "hecke-a" else "hecke-a"
    if not is_type_a_labelled(g):
        return "cross-check: skipped (hecke-a needs a type-A path)"
    _, en2, _ = run_engine(g, other, budgets)
    same = en.finite and en2.finite and en.elements == en2.elements and en.right_cayley == en2.right_cayley
    return f"cross-check with {other}: " + ("agree" if same else "DISAGREE")


# ----------------------------------------------------------------------------
# subcommands


def cmd_info(args) -> int:
    g = read_graph(args.graph)
    budgets = _budgets(args)
    engine, en, build = run_engine(g, args.engine, budgets)
    status = status_text(en, build)
    report = {"graph": g.to_json(), "engine": engine, "status": status, "shape": shape_text(g)}
    if en.finite:
        report["size"] = en.size
        report.update(en.to_monoid().green_report())
    code = EXIT_OK
    if args.cross_check:
        line = _cross_check(g, en, engine, budgets)
        report["cross_check"] = line
        if "DISAGREE" in line:
            code = EXIT_FAIL
    if args.format == "json":
        emit(json.dumps(report, indent=2) + "\n", args.out)
        return code
    lines = [f"graph: {g.to_text().strip().replace(chr(10), '; ')}", f"engine: {engine}", f"status: {status}"]
    if en.finite:
        lines += [
            f"size: {en.size}",
            f"idempotents: {report['num_idempotents']}",
            f"j_trivial: {str(report['j_trivial']).lower()}",
            f"irreducible_generators: {' '.join(report['irreducible_generators'])}",
        ]
    lines.append(f"shape: {report['shape']}")
    if args.cross_check:
        lines.append(report["cross_check"])
    emit("\n".join(lines) + "\n", args.out)
    return code


def cmd_enumerate(args) -> int:
    g = read_graph(args.graph)
    budgets = _budgets(args)
    engine, en, build = run_engine(g, args.engine, budgets)
    code = EXIT_OK if en.finite else EXIT_FAIL
    note = None
    if args.cross_check:
        note = _cross_check(g, en, engine, budgets)
        if "DISAGREE" in note:
            code = EXIT_FAIL
    if args.format == "json":
        data = en.to_json()
        data["status"] = status_text(en, build)
        text = json.dumps(data) + "\n"
    elif args.format == "dot":
        text = en.to_dot()
    elif args.format == "csv":
        if not en.finite:
            print(f"error: no multiplication table, status {status_text(en, build)}", file=sys.stderr)
            return EXIT_FAIL
        text = en.to_monoid().multiplication_csv()
    else:
        lines = [f"status: {status_text(en, build)}", f"size: {en.size}" + ("" if en.finite else " (partial)")]
        lines += [format_word(w, g.n) or "e" for w in en.elements]
        text = "\n".join(lines) + "\n"
    emit(text, args.out)
    if note:
        print(note, file=sys.stderr)
    return code


def cmd_rep(args) -> int:
    from .reps import RepresentationError, action_dot, check_faithful, tau_generators

    g = read_graph(args.graph)
    try:
        if args.format == "dot":
            if args.kind != "transformation":
                raise UsageError("dot output is available for the transformation representation only")
            points, taus = tau_generators(g)
            names = [_point_name(p) for p in points]

            def act(k, name):
                return names[taus[k - 1][names.index(name)] - 1]

            emit(action_dot(names, act, g.n), args.out)
            return EXIT_OK
        build = hk_monoid(g, _budgets(args)["max_rules"])
        size = build.monoid.size if build.monoid is not None else None
        report = check_faithful(g, args.kind, size)
    except RepresentationError as e:
        raise UsageError(str(e)) from e
    if args.format == "json":
        emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    else:
        lines = [
            f"kind: {report.kind}",
            f"image_size: {report.image_size}",
            f"monoid_size: {report.monoid_size if report.monoid_size is not None else 'unknown'}",
            f"faithful: {_flag(report.faithful)}" + ("" if report.settled else " (faithfulness open for this graph)"),
            f"relations: {'ok' if not report.relation_failures else ', '.join(report.relation_failures)}",
        ]
        if report.points:
            lines.append("points: " + " ".join(_point_name(p) for p in report.points))
        for i, img in enumerate(report.images, start=1):
            lines.append(f"generator {i}: {_image_text(img)}")
        emit("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if report.relation_failures else EXIT_OK


def _flag(v) -> str:
    return "unknown" if v is None else str(v).lower()


def _point_name(p) -> str:
    if p[0] == "edge":
        return f"{p[1]}>{p[2]}"
    return {"sink": "s", "sink2": "t", "source": "r"}[p[0]] + str(p[1])


def _image_text(img) -> str:
    if img and isinstance(img[0], tuple):
        return " / ".join(" ".join(map(str, row)) for row in img)
    return " ".join(map(str, img))


def cmd_classify(args) -> int:
    from .classify import MAX_CLASSIFY_VERTICES, classify

    if not 1 <= args.n <= MAX_CLASSIFY_VERTICES:
        raise UsageError(f"classify supports 1 <= n <= {MAX_CLASSIFY_VERTICES}")
    c = classify(args.n)
    ok = c.iso_matches() and c.anti_matches() and len(c.monoid_classes()) == len(c.graphs)
    if args.format == "json":
        emit(json.dumps(c.to_json(), indent=2) + "\n", args.out)
    else:
        lines = [f"graph classes: {len(c.graphs)}", f"monoid classes: {len(c.monoid_classes())}"]
        for k, (g, s, z) in enumerate(zip(c.graphs, c.statuses, c.sizes)):
            body = ", ".join(f"{a}{dict(un='--', fwd='->', bwd='<-')[kind]}{b}" for a, b, kind in g.edges)
            lines.append(f"{k:3d}  {z if z is not None else s:>8}  {body or 'no edges'}")
        lines.append(f"iso matrix equals graph iso matrix: {str(c.iso_matches()).lower()}")
        lines.append(f"anti-iso matrix equals graph anti-iso matrix: {str(c.anti_matches()).lower()}")
        for k in c.skipped:
            lines.append(f"skipped class {k}: over budget")
        emit("\n".join(lines) + "\n", args.out)
    fig = figure_path(args)
    if fig:
        from .plotting import class_sizes_figure

        class_sizes_figure([str(k) for k in range(len(c.graphs))], c.sizes, fig)
    return EXIT_OK if ok else EXIT_FAIL


def parse_ranks(text: str | None):
    if text is None:
        return None
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out += range(int(lo), int(hi) + 1)
        else:
            out.append(int(part))
    if not out or min(out) < 1:
        raise UsageError(f"bad rank selection {text!r}")
    return out


def cmd_verify(args) -> int:
    from .verify import run_cases, select_cases

    try:
        ids = select_cases(args.selector)
    except KeyError as e:
        raise UsageError(e.args[0]) from e
    try:
        ns = parse_ranks(args.n)
    except ValueError as e:
        raise UsageError(f"bad rank selection {args.n!r}") from e
    results = run_cases(ids, ns, jobs=args.jobs)
    if args.format == "json":
        data = [
            {"id": r.id, "parameters": r.parameters, "expected": r.expected, "outcome": r.outcome,
             "runtime": round(r.runtime, 3), "detail": r.detail}
            for r in results
        ]
        emit(json.dumps(data, indent=2) + "\n", args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "outcome", "runtime", "expected", "detail"])
        for r in results:
            w.writerow([r.id, r.outcome, f"{r.runtime:.3f}", r.expected, r.detail])
        emit(buf.getvalue(), args.out)
    else:
        lines = []
        for r in results:
            lines.append(f"{r.id:<10} {r.outcome.upper():<8} {r.runtime:7.2f}s  {r.expected}")
            if args.verbose or r.outcome != "pass":
                lines += ["    " + line for line in r.lines if args.verbose or not line.startswith("ok")]
        emit("\n".join(lines) + "\n", args.out)
    fig = figure_path(args)
    if fig:
        from .plotting import runtime_figure

        runtime_figure([r.id for r in results], [r.runtime for r in results], [r.outcome for r in results], fig)
    return EXIT_FAIL if any(r.outcome == "fail" for r in results) else EXIT_OK


CATALAN_COLUMNS = ["n", "catalan", "avoiders", "strongly_special_classes", "special_words", "hk_size"]


def catalan_rows(n_max: int) -> list[dict]:
    rows = []
    for n in range(1, n_max + 1):
        row = {"n": n, "catalan": catalan(n + 1)}
        row["avoiders"] = avoiders_321(n + 1) if n + 1 <= 9 else None
        row["strongly_special_classes"] = strongly_special_classes(n) if n <= 6 else None
        try:
            row["special_words"] = special_words_count(n) if n <= 4 else None
        except WordBudgetExceeded:
            # the length cap bound the search; the count would be a lower bound only
            row["special_words"] = None
        build = hk_monoid(linear_path(n))
        row["hk_size"] = build.monoid.size if build.monoid is not None else None
        rows.append(row)
    return rows


def cmd_catalan(args) -> int:
    if not 1 <= args.n <= 8:
        raise UsageError("catalan table supports 1 <= n <= 8")
    rows = catalan_rows(args.n)
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CATALAN_COLUMNS, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: "" if r[k] is None else r[k] for k in CATALAN_COLUMNS})
        text = buf.getvalue()
    else:
        widths = [max(len(c), 8) for c in CATALAN_COLUMNS]
        lines = ["  ".join(c.rjust(wd) for c, wd in zip(CATALAN_COLUMNS, widths))]
        for r in rows:
            lines.append("  ".join(("-" if r[c] is None else str(r[c])).rjust(wd) for c, wd in zip(CATALAN_COLUMNS, widths)))
        text = "\n".join(lines) + "\n"
    emit(text, args.out)
    fig = figure_path(args)
    if fig:
        from .plotting import catalan_figure

        catalan_figure(rows, fig)
    ok = all(r["catalan"] == r["hk_size"] for r in rows if r["hk_size"] is not None)
    ok = ok and all(r[c] in (None, r["catalan"]) for r in rows for c in ("avoiders", "strongly_special_classes"))
    return EXIT_OK if ok else EXIT_FAIL


# ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hk", description="Hecke-Kiselman monoids of mixed graphs")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats, graph=True):
        if graph:
            sp.add_argument("graph", help="graph file ('-' for stdin, .json for the JSON form)")
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    def engine(sp):
        sp.add_argument("--engine", choices=["rewrite", "hecke-a", "auto"], default="auto")
        sp.add_argument("--cross-check", action="store_true", help="run both engines and compare")
        sp.add_argument("--max-rules", type=int)
        sp.add_argument("--max-elements", type=int)

    sp = sub.add_parser("info", help="size, idempotents, J-triviality, irreducibles, shape")
    common(sp, ["text", "json"])
    engine(sp)
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("enumerate", help="list elements, Cayley graph or multiplication table")
    common(sp, ["text", "json", "csv", "dot"])
    engine(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("rep", help="transformation, matrix or Boolean representation")
    common(sp, ["text", "json", "dot"])
    sp.add_argument("--kind", choices=["transformation", "matrix", "boolean"], default="transformation")
    sp.add_argument("--max-rules", type=int)
    sp.set_defaults(func=cmd_rep)

    sp = sub.add_parser("classify", help="group all graph classes on n vertices by monoid isomorphism")
    sp.add_argument("n", type=int)
    common(sp, ["text", "json"], graph=False)
    sp.add_argument("--plot", metavar="PNG")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="run registered verification cases")
    sp.add_argument("selector", nargs="?", default="all", help="case id, comma list, or 'all'")
    sp.add_argument("--n", help="rank or ranks, e.g. 4 or 1-5")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--verbose", "-v", action="store_true")
    common(sp, ["text", "json", "csv"], graph=False)
    sp.add_argument("--plot", metavar="PNG")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("catalan", help="Catalan-family counts for n = 1..N")
    sp.add_argument("n", type=int)
    common(sp, ["text", "csv", "json"], graph=False)
    sp.add_argument("--plot", metavar="PNG")
    sp.set_defaults(func=cmd_catalan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
