"""Command-line surface for the ordered-graph Ramsey toolkit.

Subcommands: classify, validate, tree find, match find, construct, oracle,
ramsey, kneser (build/chi/critical/m2), verify, draw.  Exit status 0 on
success, 1 on domain errors (bad input files, precondition failures, bad
flags) with a one-line diagnostic on stderr, 2 when a search ends
unresolved (budget exhausted, or no threshold within the explored range).

Every document the tool writes can be read back by the tool; written
colorings and certificates round-trip identically.  Output documents
embed the tool version and the name of the producing operation.
"""

import argparse
import json
import sys
from typing import List, Optional, Sequence

from ordram import __version__ as TOOL_VERSION
from ordram import (
    BudgetExceeded,
    Constraint,
    OrderedColoring,
    OrdramError,
    Relation,
    classify_pair,
    validate_certificate,
)
from ordram import drawing as drawing_mod
from ordram import kneser as kneser_mod
from ordram import matchings as matchings_mod
from ordram import search as search_mod
from ordram import trees as trees_mod
from ordram.core import (
    Edge,
    certificate_to_json,
    coloring_to_text,
    load_certificate,
    load_coloring,
    save_certificate,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNRESOLVED = 2


class CliError(Exception):
    """Bad flags or unusable input; maps to exit status 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep 2 for unresolved
        raise CliError(message)


# ------------------------------------------------------------
# Small helpers
# ------------------------------------------------------------

def _parse_vertex_list(text: str) -> List[int]:
    try:
        return [int(p) for p in text.replace(";", ",").split(",") if p.strip()]
    except ValueError as exc:
        raise CliError(f"bad vertex list {text!r}: {exc}") from exc

def _parse_edge(text: str) -> Edge:
    raw = text.strip().strip("()")
    for sep in ("-", ","):
        if sep in raw:
            parts = raw.split(sep)
            if len(parts) == 2:
                try:
                    return Edge(int(parts[0]), int(parts[1]))
                except (ValueError, OrdramError) as exc:
                    raise CliError(f"bad edge {text!r}: {exc}") from exc
    raise CliError(f"bad edge {text!r}: expected LO-HI")


def _parse_edge_list(text: str) -> List[Edge]:
    return [_parse_edge(tok) for tok in text.split(",") if tok.strip()]


def _parse_sizes(text: str) -> List[int]:
    sizes = _parse_vertex_list(text)
    if not sizes:
        raise CliError(f"bad size list {text!r}")
    return sizes


def _require(args, flag: str):
    value = getattr(args, flag.lstrip("-").replace("-", "_"), None)
    if value is None:
        raise CliError(f"{args.subcommand}: {flag} is required here")
    return value


def _load_coloring_arg(args) -> OrderedColoring:
    path = getattr(args, "infile", None)
    if path is None:
        raise CliError(f"{args.subcommand}: --in coloring file is required here")
    try:
        return load_coloring(path)
    except FileNotFoundError as exc:
        raise CliError(f"cannot read coloring {path!r}: {exc}") from exc


def _meta_comment(operation: str) -> str:
    return f"# tool ordram {TOOL_VERSION}\n# producer {operation}\n"


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _write_coloring(args, col: OrderedColoring, operation: str) -> None:
    _write_text(args.out, _meta_comment(operation) + coloring_to_text(col))


def _write_json(path: str, operation: str, payload: dict) -> None:
    doc = {"format": "ordram-document", "tool_version": TOOL_VERSION,
           "operation": operation}
    doc.update(payload)
    _write_text(path, json.dumps(doc, indent=2) + "\n")


def _constraint_from_args(args) -> Constraint:
    picked = [x for x in (args.required, args.forbid or None, args.constraint)
              if x]
    if len(picked) > 1:
        raise CliError("give at most one of --required / --forbid / --constraint")
    if args.required:
        return Constraint.require(Relation.from_name(args.required))
    if args.forbid:
        return Constraint.forbid(*(Relation.from_name(r) for r in args.forbid))
    if args.constraint:
        return _parse_constraint(args.constraint)
    return Constraint.none()


def _parse_constraint(text: str) -> Constraint:
    spec = text.strip()
    if spec in ("", "none", "unconstrained"):
        return Constraint.none()
    if ":" not in spec:
        raise CliError(f"bad constraint {spec!r}: use none, require:REL or "
                       f"forbid:REL[,REL...]")
    head, _, tail = spec.partition(":")
    try:
        if head == "require":
            return Constraint.require(Relation.from_name(tail))
        if head == "forbid":
            return Constraint.forbid(*(Relation.from_name(r)
                                       for r in tail.split(",") if r))
    except (KeyError, ValueError, OrdramError) as exc:
        raise CliError(f"bad constraint {spec!r}: {exc}") from exc
    raise CliError(f"bad constraint {spec!r}")


def _print_certificate(cert, coloring) -> None:
    report = validate_certificate(coloring, cert)
    if not report.ok:
        raise OrdramError(
            f"internal check failed: produced certificate does not validate "
            f"({report.reason})")
    edges = " ".join(f"{e.lo}-{e.hi}" for e in cert.edges)
    print(f"{cert.kind} color={cert.color} edges=[{edges}] "
          f"constraint=\"{cert.constraint.describe()}\" producer={cert.producer}")


def _maybe_save_certificate(args, cert) -> None:
    if args.out:
        if args.out == "-":
            sys.stdout.write(certificate_to_json(cert))
        else:
            save_certificate(cert, args.out)
            print(f"certificate written to {args.out}")


# ------------------------------------------------------------
# Subcommand handlers
# ------------------------------------------------------------

def cmd_classify(args) -> int:
    e = _parse_edge(args.edges[0])
    f = _parse_edge(args.edges[1])
    print(str(classify_pair(e, f)))
    return EXIT_OK


def cmd_validate(args) -> int:
    col = _load_coloring_arg(args)
    try:
        cert = load_certificate(_require(args, "--cert"))
    except FileNotFoundError as exc:
        raise CliError(f"cannot read certificate: {exc}") from exc
    report = validate_certificate(col, cert)
    print(str(report))
    return EXIT_OK if report.ok else EXIT_ERROR


TREE_SOLVERS = {
    "non-crossing": trees_mod.find_tree_noncrossing,
    "non-nested": trees_mod.find_tree_nonnested,
    "non-separated": trees_mod.find_tree_nonseparated,
}


def cmd_tree_find(args) -> int:
    col = _load_coloring_arg(args)
    cert = TREE_SOLVERS[args.relation](col)
    _print_certificate(cert, col)
    _maybe_save_certificate(args, cert)
    return EXIT_OK


def cmd_match_find(args) -> int:
    col = _load_coloring_arg(args)
    which = args.theorem
    if which in ("14", "16", "11", "12", "17", "18", "19"):
        n = _require(args, "--n")
        fn = {
            "14": matchings_mod.find_matching_noncrossing,
            "16": matchings_mod.find_matching_nonseparated,
            "11": matchings_mod.solve_r_star_2,
            "12": matchings_mod.solve_r_star_3,
            "17": matchings_mod.extract_nested_matching,
            "18": matchings_mod.extract_crossing_matching,
            "19": matchings_mod.extract_separated_matching,
        }[which]
        cert = fn(col, n)
    elif which == "9i":
        clique = _parse_vertex_list(_require(args, "--vertices"))
        cert = matchings_mod.find_nonnested_given_red_clique(col, clique)
    else:  # 9ii
        left = _parse_vertex_list(_require(args, "--left"))
        right = _parse_vertex_list(_require(args, "--right"))
        cert = matchings_mod.find_nonnested_given_blue_biclique(col, left, right)
    _print_certificate(cert, col)
    _maybe_save_certificate(args, cert)
    return EXIT_OK


GENERATORS = {
    "prop6i": ("n", lambda a: trees_mod.construct_prop6("noncrossing", a.n)),
    "prop6ii": ("n", lambda a: trees_mod.construct_prop6("nonnested", a.n)),
    "thm8-separated": ("n", lambda a: trees_mod.construct_thm8("separated", a.n)),
    "thm8-nested": ("n", lambda a: trees_mod.construct_thm8("nested", a.n)),
    "thm8-crossing": ("n", lambda a: trees_mod.construct_thm8("crossing", a.n)),
    "nested-lb": ("tn", lambda a: matchings_mod.construct_nested_lb(a.t, a.n)),
    "crossing-lb": ("tn", lambda a: matchings_mod.construct_crossing_lb(a.t, a.n)),
    "separated-lb": ("tn", lambda a: matchings_mod.construct_separated_lb(a.t, a.n)),
    "prop15": ("t", lambda a: matchings_mod.construct_prop15(a.t)),
    "rstar2-lb": ("n", lambda a: matchings_mod.construct_rstar2_lb(a.n)),
    "rstar3-lb": ("n", lambda a: matchings_mod.construct_rstar3_lb(a.n)),
    "random": ("random", None),
}


def cmd_construct(args) -> int:
    needs, builder = GENERATORS[args.name]
    if needs == "random":
        m = _require(args, "--m")
        t = _require(args, "--t")
        if args.seed is None:
            raise CliError("construct --name random needs an explicit --seed")
        col = search_mod.random_coloring(m, t, args.seed)
        operation = f"random_coloring(m={m}, t={t}, seed={args.seed})"
    else:
        if "t" in needs:
            _require(args, "--t")
        if "n" in needs:
            _require(args, "--n")
        col = builder(args)
        operation = args.name
    if args.out and args.out != "-":
        _write_coloring(args, col, operation)
        print(f"coloring m={col.m} t={col.t} written to {args.out}")
    else:
        _write_coloring(args, col, operation)
    return EXIT_OK


ORACLES = {
    "matching": matchings_mod.max_constrained_matching,
    "subtree": trees_mod.max_constrained_subtree,
    "subgraph": trees_mod.max_constrained_subgraph,
}


def cmd_oracle(args) -> int:
    col = _load_coloring_arg(args)
    con = _constraint_from_args(args)
    color = _require(args, "--color")
    if not 0 <= color < col.t:
        raise CliError(f"color {color} out of range for t={col.t}")
    size, cert = ORACLES[args.kind](col, con, color)
    unit = "vertices" if args.kind == "subtree" else "edges"
    print(f"max {args.kind} color={color} constraint=\"{con.describe()}\" "
          f"size={size} {unit}")
    _print_certificate(cert, col)
    _maybe_save_certificate(args, cert)
    return EXIT_OK


def cmd_ramsey(args) -> int:
    sizes = _parse_sizes(_require(args, "--n"))
    t = _require(args, "--t")
    query = search_mod.query_for_family(
        args.family, t, sizes[0] if len(sizes) == 1 else sizes)
    result = search_mod.ramsey_number(
        query, _require(args, "--max-m"), budget=args.budget, jobs=args.jobs)
    nstr = "-".join(str(s) for s in sizes)
    stem = f"{args.family}-t{t}-n{nstr}"
    witness_path = None
    if result.witness is not None:
        witness_path = args.out or f"{stem}-witness.color"
        _write_text(witness_path,
                    _meta_comment(f"ramsey witness {query.describe()}")
                    + coloring_to_text(result.witness))
    manifest_path = args.manifest or f"{stem}-manifest.json"
    _write_json(manifest_path, "ramsey", {
        "query": query.describe(),
        "family": args.family,
        "t": t,
        "sizes": sizes,
        "max_m": args.max_m,
        "jobs": args.jobs,
        "budget": args.budget,
        "result": result.to_dict(),
        "witness_path": witness_path,
    })
    if result.value is not None:
        print(result.value)
        if witness_path:
            print(f"witness (m={result.witness.m}) written to {witness_path}")
        print(f"manifest written to {manifest_path}")
        return EXIT_OK
    if result.complete:
        print(f"unresolved: threshold exceeds --max-m {args.max_m}",
              file=sys.stderr)
    else:
        print("unresolved: coloring budget exhausted before a verdict",
              file=sys.stderr)
    print(f"manifest written to {manifest_path}")
    return EXIT_UNRESOLVED


def cmd_kneser(args) -> int:
    if args.action == "m2":
        col = _load_coloring_arg(args)
        cert = kneser_mod.m2_from_edge_coloring(col)
        _print_certificate(cert, col)
        _maybe_save_certificate(args, cert)
        return EXIT_OK
    t = _require(args, "--t")
    g = kneser_mod.build_g(t)
    if args.action == "build":
        text = _meta_comment(f"pair graph t={t}") + kneser_mod.graph_to_text(g)
        _write_text(args.out, text)
        if args.out and args.out != "-":
            print(f"graph with {g.vertex_count} vertices written to {args.out}")
        return EXIT_OK
    if args.action == "chi":
        k, witness = kneser_mod.chromatic_number(g)
        print(f"t={t} vertices={g.vertex_count} chi={k}")
        if args.out:
            _write_json(args.out, "kneser chi", {
                "t": t,
                "vertices": g.vertex_count,
                "chi": k,
                "coloring": [[v.lo, v.hi, c] for v, c in sorted(witness.items())],
            })
        return EXIT_OK
    # criticality report: per vertex, does removal drop the chromatic number?
    k, _ = kneser_mod.chromatic_number(g)
    critical = set(kneser_mod.critical_vertices(g))
    print(f"t={t} vertices={g.vertex_count} chi={k}")
    rows = []
    for v in g.vertices:
        drop = v in critical
        rows.append([v.lo, v.hi, drop])
        print(f"vertex ({v.lo},{v.hi}): removal "
              f"{'drops chi to ' + str(k - 1) if drop else 'keeps chi at ' + str(k)}")
    for name, v in (("(2,t+2)", Edge(2, t + 2)), ("(2,t+3)", Edge(2, t + 3))):
        verdict = "critical" if v in critical else "not critical"
        print(f"named vertex {name} = ({v.lo},{v.hi}): {verdict}")
    print(f"critical vertices: {len(critical)} of {g.vertex_count}")
    if args.out:
        _write_json(args.out, "kneser critical", {
            "t": t, "chi": k,
            "vertices": [[v.lo, v.hi] for v in g.vertices],
            "critical": rows,
        })
    return EXIT_OK


def cmd_verify(args) -> int:
    sizes = _parse_sizes(_require(args, "--n"))
    report = search_mod.verify_conjecture(
        args.conjecture, sizes, budget=args.budget, jobs=args.jobs)
    nstr = "-".join(str(s) for s in sizes)
    stem = f"{args.conjecture}-n{nstr}"
    counterexample_path = None
    if report.counterexample is not None:
        counterexample_path = f"{stem}-counterexample.color"
        _write_text(counterexample_path,
                    _meta_comment(f"counterexample {args.conjecture} sizes={sizes}")
                    + coloring_to_text(report.counterexample))
    out_path = args.out or f"{stem}-report.json"
    payload = report.to_dict()
    payload["counterexample_path"] = counterexample_path
    _write_json(out_path, "verify", payload)
    print(report.summary)
    if counterexample_path:
        print(f"counterexample written to {counterexample_path}")
    print(f"report written to {out_path}")
    return EXIT_OK if report.holds is not None else EXIT_UNRESOLVED


def cmd_draw(args) -> int:
    if args.infile:
        obj = load_coloring(args.infile)
    elif args.cert:
        obj = load_certificate(args.cert)
    else:
        obj = _parse_edge_list(args.edges or "")
        if not obj and args.m is None:
            raise CliError("draw needs --in, --cert, or --edges (with --m "
                           "for an empty edge set)")
    svg = drawing_mod.render_svg(
        obj, args.style, m=args.m,
        label=f"{args.style} drawing | ordram {TOOL_VERSION}")
    _write_text(args.out, svg)
    if args.out and args.out != "-":
        print(f"SVG written to {args.out}")
    return EXIT_OK


# ------------------------------------------------------------
# Parser
# ------------------------------------------------------------

def _add_io(p, out_help="output file path ('-' for stdout)"):
    p.add_argument("--in", dest="infile", metavar="PATH",
                   help="input coloring file")
    p.add_argument("--out", metavar="PATH", help=out_help)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="ordram",
                  description="Certificate-producing solvers, exact oracles, "
                              "exhaustive searches and drawings for edge "
                              "colorings of vertex-ordered complete graphs.")
    top.add_argument("--version", action="version",
                     version=f"ordram {TOOL_VERSION}")
    subs = top.add_subparsers(dest="subcommand", required=True,
                              metavar="SUBCOMMAND")

    p = subs.add_parser("classify", help="relation between two independent edges")
    p.add_argument("edges", nargs=2, metavar="EDGE",
                   help="edge as LO-HI, e.g. 1-4")
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("validate",
                        help="check a certificate against a coloring")
    _add_io(p)
    p.add_argument("--cert", metavar="PATH", help="certificate file to check")
    p.set_defaults(func=cmd_validate)

    p = subs.add_parser("tree", help="spanning-structure solvers")
    tree_subs = p.add_subparsers(dest="action", required=True)
    pf = tree_subs.add_parser("find",
                              help="monochromatic constrained spanning tree")
    pf.add_argument("--relation", required=True,
                    choices=sorted(TREE_SOLVERS),
                    help="which pair relation the tree must avoid")
    _add_io(pf, "write the certificate here")
    pf.set_defaults(func=cmd_tree_find)

    p = subs.add_parser("match", help="matching solvers")
    match_subs = p.add_subparsers(dest="action", required=True)
    pf = match_subs.add_parser(
        "find", help="certificate-producing matching solvers")
    pf.add_argument(
        "--theorem", required=True,
        choices=["14", "16", "9i", "9ii", "11", "12", "17", "18", "19"],
        help="14: non-crossing matching of size n; "
             "16: non-separated matching of size n; "
             "9i: non-nested matching from a red clique (--vertices); "
             "9ii: non-nested matching from a blue biclique (--left/--right); "
             "11: red non-nested pair or blue non-nested matching on [2n+1]; "
             "12: red non-nested triple or blue non-nested matching on [2n+2]; "
             "17/18/19: nested/crossing/separated matching at threshold size")
    pf.add_argument("--n", type=int, help="matching size")
    pf.add_argument("--vertices", metavar="LIST",
                    help="comma-separated red-clique vertices (9i)")
    pf.add_argument("--left", metavar="LIST",
                    help="comma-separated left block (9ii)")
    pf.add_argument("--right", metavar="LIST",
                    help="comma-separated right block (9ii)")
    _add_io(pf, "write the certificate here")
    pf.set_defaults(func=cmd_match_find)

    p = subs.add_parser("construct", help="named coloring generators")
    p.add_argument("--name", required=True, choices=sorted(GENERATORS),
                   help="which generator; 'random' needs --m --t --seed")
    p.add_argument("--t", type=int, help="number of colors")
    p.add_argument("--n", type=int, help="size parameter")
    p.add_argument("--m", type=int, help="vertex count (random)")
    p.add_argument("--seed", type=int,
                   help="RNG seed; required for randomized generators")
    p.add_argument("--out", metavar="PATH",
                   help="write the coloring here ('-' or absent: stdout)")
    p.set_defaults(func=cmd_construct)

    p = subs.add_parser("oracle",
                        help="exact maximum monochromatic substructures")
    p.add_argument("kind", choices=sorted(ORACLES),
                   help="what to maximize")
    p.add_argument("--color", type=int, help="color class to search")
    p.add_argument("--required", metavar="REL",
                   help="every independent pair must realize this relation")
    p.add_argument("--forbid", metavar="REL", action="append",
                   help="no independent pair may realize this relation "
                        "(repeatable)")
    p.add_argument("--constraint", metavar="SPEC",
                   help="none | require:REL | forbid:REL[,REL...]")
    _add_io(p, "write the witness certificate here")
    p.set_defaults(func=cmd_oracle)

    p = subs.add_parser("ramsey",
                        help="least m forcing a monochromatic matching, "
                             "by exhaustion")
    p.add_argument("--family", required=True,
                   choices=sorted(search_mod.FAMILY_CONSTRAINTS),
                   help="matching family the query asks for")
    p.add_argument("--t", type=int, help="number of colors")
    p.add_argument("--n", metavar="N[,N...]",
                   help="size, or per-color sizes")
    p.add_argument("--max-m", dest="max_m", type=int,
                   help="largest vertex count to try")
    p.add_argument("--jobs", type=int, default=1, help="parallel shards")
    p.add_argument("--budget", type=int,
                   help="max colorings to enumerate per attempt")
    p.add_argument("--out", metavar="PATH", help="witness coloring path")
    p.add_argument("--manifest", metavar="PATH", help="run manifest path")
    p.set_defaults(func=cmd_ramsey)

    p = subs.add_parser("kneser", help="pair-graph tools")
    p.add_argument("action", choices=["build", "chi", "critical", "m2"],
                   help="build: emit the graph; chi: chromatic number; "
                        "critical: per-vertex criticality report; "
                        "m2: non-nested pair from a coloring of [t+3]")
    p.add_argument("--t", type=int, help="number of colors")
    _add_io(p)
    p.set_defaults(func=cmd_kneser)

    p = subs.add_parser("verify",
                        help="exhaustively test a matching conjecture "
                             "at its tight instance size")
    p.add_argument("--conjecture", required=True,
                   choices=sorted(search_mod.CONJECTURES),
                   help="which statement to test")
    p.add_argument("--n", metavar="N[,N...]", help="per-color sizes")
    p.add_argument("--jobs", type=int, default=1, help="parallel shards")
    p.add_argument("--budget", type=int,
                   help="max colorings to enumerate")
    p.add_argument("--out", metavar="PATH", help="report path")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("draw", help="render a coloring or edge set as SVG")
    p.add_argument("--style", required=True, choices=list(drawing_mod.STYLES),
                   help="convex: independent edges intersect iff crossing; "
                        "twisted: independent edges intersect iff nested")
    p.add_argument("--edges", metavar="LIST",
                   help="edge list like 1-4,2-3 (may be empty with --m)")
    p.add_argument("--m", type=int, help="vertex count override")
    p.add_argument("--cert", metavar="PATH", help="draw a certificate file")
    _add_io(p, "SVG output path ('-' or absent: stdout)")
    p.set_defaults(func=cmd_draw)

    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except BudgetExceeded as exc:
        print(f"unresolved: {exc}", file=sys.stderr)
        return EXIT_UNRESOLVED
    except OrdramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
