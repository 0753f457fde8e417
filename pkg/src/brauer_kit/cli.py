"""Command-line front end.

Subcommands operate on ``.bg`` (graded Brauer graph) and ``.qa`` (gentle
presentation) files.  Every subcommand supports ``--format json`` for
machine-readable output with deterministic ordering.  Exit codes: 0 on
success (including negative mathematical answers such as "no shift exists",
which are results, not errors), 1 on domain errors (malformed files,
invalid graphs, impossible moves), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Mapping, Optional, Sequence

from . import fixtures
from .algebra import (
    Quiver,
    cut_algebra,
    cut_of_arrows,
    dimension_of,
    format_relations,
    quiver_of,
    relations,
    trivext_bigrading,
    trivial_extension_graph,
)
from .equivalence import (
    DEFAULT_MATRIX,
    shift_equivalence,
    tilting_summary,
    transformed_equivalence,
    triangular_split,
)
from .formats import FormatError, dump_bg, dump_qa, parse_bg, parse_qa
from .gentle import (
    GentlePresentation,
    GentleError,
    ag_invariant,
    check_gentle,
    dimension,
    global_dimension,
)
from .graph import (
    BrauerGraph,
    BrauerGraphError,
    GradedBrauerGraph,
    Grading,
    enumerate_admissible_cuts,
    homogeneity,
    is_admissible_cut,
    surface_invariants,
)
from .mutation import Sector, grading_transport, maximal_sectors, sector_degrees, sector_move, subset_move


class CliError(Exception):
    """A domain error surfaced to the user (exit code 1)."""


# -- small rendering helpers ------------------------------------------------


def _use_color() -> bool:
    mode = os.environ.get("BRAUER_KIT_COLOR", "auto")
    if mode == "always":
        return True
    if mode == "never":
        return False
    return sys.stdout.isatty()


def _head(text: str) -> str:
    if _use_color():
        return f"\x1b[1;36m{text}\x1b[0m"
    return text


def _vec(v: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def _cycle(cycle: Sequence[str]) -> str:
    return "(" + " ".join(cycle) + ")"


def _grading_json(grading: Grading) -> dict:
    return {
        "rank": grading.rank,
        "d": {h: list(grading.degrees[h]) for h in sorted(grading.degrees)},
    }


def _graph_json(graph: BrauerGraph) -> dict:
    return {
        "halfedges": list(graph.halfedges),
        "pairing": [list(e) for e in graph.edges()],
        "orientation": [list(v) for v in graph.vertices() if len(v) > 1],
    }


def _quiver_json(quiver: Quiver) -> dict:
    return {
        "vertices": list(quiver.vertices),
        "arrows": [
            {"id": a.name, "source": a.source, "target": a.target}
            for a in sorted(quiver.arrows, key=lambda a: a.name)
        ],
    }


def _emit(args, text_lines: Sequence[str], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


def _quiver_dot(quiver: Quiver, degrees: Optional[Mapping[str, Sequence[int]]] = None) -> str:
    lines = ["digraph quiver {"]
    for v in quiver.vertices:
        lines.append(f'    "{v}";')
    for a in sorted(quiver.arrows, key=lambda a: a.name):
        label = a.name
        if degrees is not None and a.name in degrees:
            label += " " + _vec(degrees[a.name])
        lines.append(f'    "{a.source}" -> "{a.target}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _write_output(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- input loading ----------------------------------------------------------


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_bg(path: str) -> GradedBrauerGraph:
    return parse_bg(_read(path))


def _load_qa(path: str) -> GentlePresentation:
    return parse_qa(_read(path))


def _parse_subset(graded: GradedBrauerGraph, raw: str) -> list[str]:
    """Parse a comma-separated half-edge list, closing it under the pairing
    (with a warning) as subset moves require pairing-stable subsets."""
    graph = graded.graph
    subset = [h.strip() for h in raw.split(",") if h.strip()]
    known = set(graph.halfedges)
    for h in subset:
        if h not in known:
            raise CliError(f"unknown half-edge {h!r}")
    closed = set(subset)
    added = []
    for h in subset:
        partner = graph.iota(h)
        if partner not in closed:
            closed.add(partner)
            added.append(partner)
    if added:
        print(
            f"warning: subset closed under the pairing by adding {sorted(added)}",
            file=sys.stderr,
        )
    return sorted(closed)


def _parse_cut(graded: GradedBrauerGraph, raw: str) -> Grading:
    names = [h.strip() for h in raw.split(",") if h.strip()]
    known = set(graded.graph.halfedges)
    for h in names:
        if h not in known:
            raise CliError(f"unknown half-edge {h!r}")
    return cut_of_arrows(graded.graph, names)


def _presentation_quiver(p: GentlePresentation) -> Quiver:
    from .algebra import Arrow

    return Quiver(
        tuple(p.vertices),
        tuple(Arrow(a.name, a.source, a.target) for a in p.arrows),
    )


def _arrow_degrees(p: GentlePresentation) -> dict[str, tuple[int, ...]]:
    # A rank-0 presentation (no degrees in the file) counts as rank 1, zero.
    rank = max(p.grading_rank, 1)
    return {a.name: (a.degree if a.degree else (0,) * rank) for a in p.arrows}


def _same_quiver(p: GentlePresentation, q: GentlePresentation) -> None:
    if tuple(sorted(p.vertices)) != tuple(sorted(q.vertices)):
        raise CliError("the two presentations have different vertex sets")
    pa = {(a.name, a.source, a.target) for a in p.arrows}
    qa = {(a.name, a.source, a.target) for a in q.arrows}
    if pa != qa:
        raise CliError("the two presentations have different quivers")


# -- subcommand implementations ---------------------------------------------


def _cmd_validate(args) -> int:
    if args.file.endswith(".qa"):
        p = _load_qa(args.file)
        problems = check_gentle(p)
        lines = [
            _head("gentle presentation"),
            f"vertices: {len(p.vertices)}  arrows: {len(p.arrows)}  relations: {len(p.relations)}",
        ]
        lines += (["gentle: yes"] if not problems else ["gentle: no"] + [f"  - {x}" for x in problems])
        _emit(args, lines, {
            "kind": "presentation",
            "vertices": len(p.vertices),
            "arrows": len(p.arrows),
            "relations": len(p.relations),
            "gentle": not problems,
            "problems": problems,
        })
        return 0
    graded = _load_bg(args.file)
    graph = graded.graph
    g = homogeneity(graded)
    lines = [
        _head("graded Brauer graph"),
        f"half-edges: {len(graph.halfedges)}  edges: {len(graph.edges())}  vertices: {len(graph.vertices())}",
        f"grading rank: {graded.grading.rank}",
        "homogeneous: " + (_vec(g) if g is not None else "no"),
        "admissible cut: " + ("yes" if is_admissible_cut(graded) else "no"),
        "connected: " + ("yes" if graph.is_connected() else "no"),
    ]
    _emit(args, lines, {
        "kind": "graph",
        "halfedges": len(graph.halfedges),
        "edges": len(graph.edges()),
        "vertices": len(graph.vertices()),
        "grading_rank": graded.grading.rank,
        "homogeneous": list(g) if g is not None else None,
        "admissible_cut": is_admissible_cut(graded),
        "connected": graph.is_connected(),
    })
    return 0


def _cmd_vertices(args) -> int:
    graded = _load_bg(args.file)
    graph = graded.graph
    lines = [_head("vertices (orientation orbits)")]
    lines += ["  " + _cycle(v) for v in graph.vertices()]
    lines.append(_head("edges (pairing orbits)"))
    lines += ["  " + _cycle(e) for e in graph.edges()]
    _emit(args, lines, {
        "vertices": [list(v) for v in graph.vertices()],
        "edges": [list(e) for e in graph.edges()],
    })
    return 0


def _moved_graph(args, graded: GradedBrauerGraph) -> GradedBrauerGraph:
    if args.sector is not None:
        h, raw_r = args.sector
        try:
            r = int(raw_r)
        except ValueError:
            raise CliError(f"sector length must be an integer, got {raw_r!r}")
        return sector_move(graded, Sector(h, r))
    subset = _parse_subset(graded, args.subset)
    return subset_move(graded, subset)


def _cmd_mutate(args) -> int:
    graded = _load_bg(args.file)
    moved = _moved_graph(args, graded)
    text = dump_bg(moved)
    if args.format == "json":
        payload = {
            "graph": _graph_json(moved.graph),
            "grading": _grading_json(moved.grading),
            "bg": text,
        }
        out = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        _write_output(args.output, out)
    else:
        _write_output(args.output, text)
    return 0


def _cmd_sectors(args) -> int:
    graded = _load_bg(args.file)
    subset = _parse_subset(graded, args.subset)
    decomposition = maximal_sectors(graded.graph, subset)
    lines = [_head("maximal sectors")]
    lines += [f"  start {s.start}  length {s.length}" for s in decomposition.sectors]
    if decomposition.saturated:
        lines.append(_head("saturated vertices (unmoved)"))
        lines += ["  " + _cycle(v) for v in decomposition.saturated]
    _emit(args, lines, {
        "sectors": [{"start": s.start, "length": s.length} for s in decomposition.sectors],
        "saturated": [list(v) for v in decomposition.saturated],
    })
    return 0


def _cmd_sector_degrees(args) -> int:
    graded = _load_bg(args.file)
    subset = _parse_subset(graded, args.subset)
    report = sector_degrees(graded, subset)
    lines = [_head("sector morphism degrees")]
    lines += [f"  {h}: {_vec(report.degrees[h])}" for h in sorted(report.degrees)]
    lines.append(f"all zero: {'yes' if report.all_zero else 'no'}")
    _emit(args, lines, {
        "degrees": {h: list(v) for h, v in sorted(report.degrees.items())},
        "saturated": [list(v) for v in report.saturated],
        "all_zero": report.all_zero,
    })
    return 0


def _cmd_transport(args) -> int:
    graded = _load_bg(args.file)
    subset = _parse_subset(graded, args.subset)
    target = _load_bg(args.target).grading
    result = grading_transport(graded.graph, subset, target)
    if result is None:
        _emit(args, ["no grading is carried to the target"], {"transport": None})
        return 0
    lines = [_head("transported grading (on the input graph)")]
    lines += [
        f"  {h}: {_vec(result.degrees[h])}"
        for h in graded.graph.halfedges
        if any(result.degrees[h])
    ]
    _emit(args, lines, {"transport": _grading_json(result)})
    return 0


def _cmd_algebra(args) -> int:
    graded = _load_bg(args.file)
    graph = graded.graph
    quiver = quiver_of(graph)
    if args.emit_dot:
        _write_output(args.emit_dot, _quiver_dot(quiver))
    if args.dim:
        _emit(args, [str(dimension_of(graph))], {"dimension": dimension_of(graph)})
        return 0
    if args.relations:
        rels = relations(graph)
        lines = [_head("relations")] + ["  " + r for r in format_relations(rels)]
        _emit(args, lines, {
            "commutations": [[list(a), list(b)] for a, b in rels.commutations],
            "overruns": [list(x) for x in rels.overruns],
            "compositions": [list(x) for x in rels.compositions],
        })
        return 0
    lines = [_head("quiver")]
    lines.append("vertices: " + ", ".join(quiver.vertices))
    lines += [
        f"  {a.name}: {a.source} -> {a.target}"
        for a in sorted(quiver.arrows, key=lambda a: a.name)
    ]
    _emit(args, lines, _quiver_json(quiver))
    return 0


def _cmd_cuts(args) -> int:
    graded = _load_bg(args.file)
    graph = graded.graph
    if args.check is not None:
        names = [h.strip() for h in args.check.split(",") if h.strip()]
        known = set(graph.halfedges)
        for h in names:
            if h not in known:
                raise CliError(f"unknown half-edge {h!r}")
        cut = Grading.from_ones(graph, names)
        ok = is_admissible_cut(GradedBrauerGraph(graph, cut))
        _emit(args, ["admissible cut: " + ("yes" if ok else "no")], {"admissible": ok})
        return 0
    cuts = enumerate_admissible_cuts(graph)
    lines = [_head(f"{len(cuts)} admissible cuts")]
    payload = []
    for cut in cuts:
        ones = sorted(cut.ones())
        lines.append("  {" + ", ".join(ones) + "}")
        payload.append(ones)
    _emit(args, lines, {"cuts": payload})
    return 0


def _cmd_cut_algebra(args) -> int:
    graded = _load_bg(args.file)
    cut = _parse_cut(graded, args.cut)
    extra = [graded.grading] if args.with_grading else []
    p = cut_algebra(graded.graph, cut, extra_gradings=extra)
    text = dump_qa(p)
    if args.format == "json":
        payload = {
            "vertices": list(p.vertices),
            "arrows": [
                {"id": a.name, "source": a.source, "target": a.target, "degree": list(a.degree)}
                for a in p.arrows
            ],
            "relations": [[then, first] for first, then in p.relations],
            "qa": text,
        }
        out = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        _write_output(args.output, out)
    else:
        _write_output(args.output, text)
    return 0


def _cmd_trivext(args) -> int:
    p = _load_qa(args.file)
    graph, cut = trivial_extension_graph(p)
    graded = GradedBrauerGraph(graph, cut)
    text = dump_bg(graded)
    if args.format == "json":
        payload = {
            "graph": _graph_json(graph),
            "cut": _grading_json(cut),
            "bg": text,
        }
        out = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        _write_output(args.output, out)
    else:
        _write_output(args.output, text)
    return 0


def _cmd_gentle_check(args) -> int:
    p = _load_qa(args.file)
    problems = check_gentle(p)
    if args.emit_dot:
        _write_output(args.emit_dot, _quiver_dot(_presentation_quiver(p), _arrow_degrees(p)))
    if problems:
        lines = ["gentle: no"] + [f"  - {x}" for x in problems]
    else:
        lines = ["gentle: yes", f"dimension: {dimension(p)}"]
    payload = {"gentle": not problems, "problems": problems}
    if not problems:
        payload["dimension"] = dimension(p)
    _emit(args, lines, payload)
    return 0


def _cmd_gldim(args) -> int:
    p = _load_qa(args.file)
    report = global_dimension(p)
    value = "inf" if report.value == math.inf else str(report.value)
    _emit(
        args,
        [value, f"witness: {report.witness}"],
        {"gldim": None if report.value == math.inf else report.value, "witness": report.witness},
    )
    return 0


def _cmd_ag(args) -> int:
    p = _load_qa(args.file)
    invariant = ag_invariant(p)
    pairs = [list(pair) for pair in invariant.pairs]
    _emit(args, [json.dumps(pairs)], {"ag": pairs})
    return 0


def _equiv_inputs(args):
    """The quiver and arrow-grading pair a (transformed) shift should relate.

    Two forms: two .qa files sharing a quiver (compare their arrow degrees),
    or one .bg file with --cut1/--cut2 (compare the two cut gradings on the
    Brauer graph algebra quiver; the transform variant compares the two
    induced bigradings of the trivial extension)."""
    if args.first.endswith(".bg"):
        if args.second is not None:
            raise CliError("with a .bg input, give the two cuts via --cut1/--cut2")
        if not args.cut1 or not args.cut2:
            raise CliError("a .bg input needs both --cut1 and --cut2")
        graded = _load_bg(args.first)
        graph = graded.graph
        cut1 = _parse_cut(graded, args.cut1)
        cut2 = _parse_cut(graded, args.cut2)
        quiver = quiver_of(graph)
        if getattr(args, "matrix_mode", False):
            b1 = trivext_bigrading(graph, cut1, cut2)
            b2 = trivext_bigrading(graph, cut2, cut1)
            d1 = {a.name: b1.degree(a.name) for a in quiver.arrows}
            d2 = {a.name: b2.degree(a.name) for a in quiver.arrows}
        else:
            d1 = {a.name: cut1.degree(a.name) for a in quiver.arrows}
            d2 = {a.name: cut2.degree(a.name) for a in quiver.arrows}
        return quiver, d1, d2
    if args.second is None:
        raise CliError("give either two .qa files or a .bg file with --cut1/--cut2")
    p = _load_qa(args.first)
    q = _load_qa(args.second)
    _same_quiver(p, q)
    return _presentation_quiver(p), _arrow_degrees(p), _arrow_degrees(q)


def _cmd_shift_equiv(args) -> int:
    args.matrix_mode = False
    quiver, d1, d2 = _equiv_inputs(args)
    shift = shift_equivalence(quiver, d1, d2)
    if shift is None:
        _emit(args, ["no shift equivalence"], {"shift": None})
        return 0
    lines = [_head("vertex shift")]
    lines += [f"  {v}: {_vec(shift[v])}" for v in quiver.vertices]
    _emit(args, lines, {"shift": {v: list(shift[v]) for v in sorted(shift)}})
    return 0


def _parse_matrix(raw: str) -> tuple[tuple[int, int], tuple[int, int]]:
    parts = [x.strip() for x in raw.split(",")]
    if len(parts) != 4:
        raise CliError("--matrix expects four comma-separated integers a,b,c,d")
    try:
        a, b, c, d = (int(x) for x in parts)
    except ValueError:
        raise CliError("--matrix entries must be integers")
    return ((a, b), (c, d))


def _cmd_transform_equiv(args) -> int:
    args.matrix_mode = True
    quiver, d1, d2 = _equiv_inputs(args)
    matrix = _parse_matrix(args.matrix) if args.matrix else DEFAULT_MATRIX
    shift = transformed_equivalence(quiver, d1, d2, matrix)
    if shift is None:
        _emit(args, ["no transformed shift equivalence"], {"shift": None, "matrix": [list(r) for r in matrix]})
        return 0
    lines = [_head(f"vertex shift after transform {list(matrix[0])},{list(matrix[1])}")]
    lines += [f"  {v}: {_vec(shift[v])}" for v in quiver.vertices]
    _emit(args, lines, {
        "matrix": [list(r) for r in matrix],
        "shift": {v: list(shift[v]) for v in sorted(shift)},
    })
    return 0


def _parse_pairs(raw: str) -> list[tuple[str, str]]:
    pairs = []
    for chunk in raw.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise CliError(f"pair {chunk!r} must look like alpha:beta")
        alpha, beta = (x.strip() for x in chunk.split(":", 1))
        pairs.append((alpha, beta))
    if not pairs:
        raise CliError("--pairs needs at least one alpha:beta pair")
    return pairs


def _split_of(args, graded: GradedBrauerGraph):
    pairs = _parse_pairs(args.pairs)
    remainder = None
    if args.remainder:
        remainder = [h.strip() for h in args.remainder.split(",") if h.strip()]
    return triangular_split(graded.graph, pairs, remainder)


def _cmd_split(args) -> int:
    graded = _load_bg(args.file)
    split = _split_of(args, graded)
    lines = [
        _head("triangular split"),
        "plus vertices: " + ", ".join(split.plus_vertices),
        "minus vertices: " + ", ".join(split.minus_vertices),
        "cut alpha: {" + ", ".join(sorted(split.cut_alpha.ones())) + "}",
        "cut beta: {" + ", ".join(sorted(split.cut_beta.ones())) + "}",
        f"remainder completions: {split.remainder_count}",
    ]
    _emit(args, lines, {
        "plus": list(split.plus_vertices),
        "minus": list(split.minus_vertices),
        "pairs": [list(p) for p in split.pairs],
        "cut_alpha": sorted(split.cut_alpha.ones()),
        "cut_beta": sorted(split.cut_beta.ones()),
        "remainder_count": split.remainder_count,
    })
    return 0


def _cmd_tilting(args) -> int:
    graded = _load_bg(args.file)
    split = _split_of(args, graded)
    summary = tilting_summary(split)
    lines = [summary.render(), f"graded rule: {summary.graded_rule}"]
    _emit(args, lines, {
        "rendered": summary.render(),
        "summands": [list(s) for s in summary.summands],
        "graded_rule": summary.graded_rule,
        "plus": list(summary.plus_vertices),
        "minus": list(summary.minus_vertices),
    })
    return 0


def _cmd_surface(args) -> int:
    graded = _load_bg(args.file)
    inv = surface_invariants(graded.graph)
    lines = [
        _head("ribbon surface"),
        f"vertices: {inv.vertex_count}  edges: {inv.edge_count}  boundary components: {inv.boundary_components}",
        f"euler characteristic: {inv.euler_characteristic}  genus: {inv.genus}",
    ]
    lines += ["  face " + _cycle(f) for f in inv.faces]
    _emit(args, lines, {
        "vertices": inv.vertex_count,
        "edges": inv.edge_count,
        "faces": [list(f) for f in inv.faces],
        "boundary_components": inv.boundary_components,
        "euler_characteristic": inv.euler_characteristic,
        "genus": inv.genus,
    })
    return 0


def _cmd_example(args) -> int:
    if args.name == "list":
        lines = [f"{name}: {ex.description}" for name, ex in sorted(fixtures.EXAMPLES.items())]
        _emit(args, lines, {
            "examples": [
                {"name": name, "description": ex.description, "files": sorted(ex.files)}
                for name, ex in sorted(fixtures.EXAMPLES.items())
            ],
        })
        return 0
    example = fixtures.EXAMPLES.get(args.name)
    if example is None:
        raise CliError(
            f"unknown example {args.name!r}; run `brauer-kit example list`"
        )
    if args.run:
        failures = example.check()
        if failures:
            lines = [f"{args.name}: FAILED"] + [f"  - {x}" for x in failures]
            _emit(args, lines, {"name": args.name, "ok": False, "failures": failures})
            return 1
        _emit(args, [f"{args.name}: OK"], {"name": args.name, "ok": True, "failures": []})
        return 0
    lines = [_head(args.name), example.description]
    for filename in sorted(example.files):
        lines.append(_head(f"-- {filename}"))
        lines.append(example.files[filename].rstrip("\n"))
    _emit(args, lines, {
        "name": args.name,
        "description": example.description,
        "files": {k: example.files[k] for k in sorted(example.files)},
    })
    return 0


# -- argument parsing --------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer-kit",
        description="Combinatorics of graded Brauer graphs and gentle algebras.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default: text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help_text, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("validate", _cmd_validate, "validate a .bg or .qa file and report basic facts")
    p.add_argument("file")

    p = add("vertices", _cmd_vertices, "print vertex (orientation) and edge (pairing) orbits")
    p.add_argument("file")

    p = add("mutate", _cmd_mutate, "apply a graded Kauer move and print the moved graph")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sector", nargs=2, metavar=("H", "R"), help="move the single sector (H, R)")
    group.add_argument("--subset", metavar="LIST", help="comma-separated half-edges; moved sector by sector")
    p.add_argument("-o", "--output", help="write the .bg result here instead of stdout")

    p = add("sectors", _cmd_sectors, "decompose a subset into maximal sectors")
    p.add_argument("file")
    p.add_argument("--subset", metavar="LIST", required=True)

    p = add("sector-degrees", _cmd_sector_degrees, "degrees of the canonical morphisms of a subset move")
    p.add_argument("file")
    p.add_argument("--subset", metavar="LIST", required=True)

    p = add("transport", _cmd_transport, "pull a grading on the moved graph back through a subset move")
    p.add_argument("file")
    p.add_argument("--subset", metavar="LIST", required=True)
    p.add_argument("--target", metavar="FILE.bg", required=True,
                   help=".bg file whose grading is the target on the moved graph")

    p = add("algebra", _cmd_algebra, "quiver, relations, or dimension of the Brauer graph algebra")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--relations", action="store_true", help="print the defining relations")
    group.add_argument("--dim", action="store_true", help="print the k-dimension")
    p.add_argument("--emit-dot", metavar="FILE", help="also write the quiver in DOT format (best effort)")

    p = add("cuts", _cmd_cuts, "enumerate admissible cuts or check one")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--enumerate", action="store_true", help="list all admissible cuts")
    group.add_argument("--check", metavar="LIST", help="comma-separated degree-1 half-edges to test")

    p = add("cut-algebra", _cmd_cut_algebra, "the gentle algebra of an admissible cut, as .qa")
    p.add_argument("file")
    p.add_argument("--cut", metavar="LIST", required=True,
                   help="degree-1 arrows, one per multivalent vertex (univalent ones are added)")
    p.add_argument("--with-grading", action="store_true",
                   help="install the file's grading as arrow degrees on the result")
    p.add_argument("-o", "--output", help="write the .qa result here instead of stdout")

    p = add("trivext", _cmd_trivext, "Brauer graph of the trivial extension of a gentle algebra, as .bg")
    p.add_argument("file")
    p.add_argument("-o", "--output", help="write the .bg result here instead of stdout")

    p = add("gentle-check", _cmd_gentle_check, "check gentleness of a .qa presentation")
    p.add_argument("file")
    p.add_argument("--emit-dot", metavar="FILE", help="also write the quiver in DOT format (best effort)")

    p = add("gldim", _cmd_gldim, "global dimension of a gentle algebra with a witness")
    p.add_argument("file")

    p = add("ag", _cmd_ag, "Avella-Alaminos–Geiss invariant as a sorted list of pairs")
    p.add_argument("file")

    p = add("shift-equiv", _cmd_shift_equiv,
            "vertex shift relating two arrow gradings (two .qa files, or one .bg with two cuts)")
    p.add_argument("first", help=".qa file, or a .bg file with --cut1/--cut2")
    p.add_argument("second", nargs="?", help="second .qa file")
    p.add_argument("--cut1", metavar="LIST", help="first cut (with a .bg input)")
    p.add_argument("--cut2", metavar="LIST", help="second cut (with a .bg input)")

    p = add("transform-equiv", _cmd_transform_equiv,
            "shift after acting on the first grading by a unimodular 2x2 matrix")
    p.add_argument("first", help=".qa file, or a .bg file with --cut1/--cut2 (bigradings compared)")
    p.add_argument("second", nargs="?", help="second .qa file")
    p.add_argument("--cut1", metavar="LIST", help="first cut (with a .bg input)")
    p.add_argument("--cut2", metavar="LIST", help="second cut (with a .bg input)")
    p.add_argument("--matrix", metavar="a,b,c,d", help="matrix rows (default 1,1,0,-1)")

    p = add("split", _cmd_split, "verify a triangular split of the quiver")
    p.add_argument("file")
    p.add_argument("--pairs", metavar="A:B,...", required=True,
                   help="arrow pairs to delete, alpha:beta per split vertex")
    p.add_argument("--remainder", metavar="LIST",
                   help="one arrow per untouched multivalent vertex (default: lexicographic)")

    p = add("tilting", _cmd_tilting, "symbolic tilting summary of a triangular split")
    p.add_argument("file")
    p.add_argument("--pairs", metavar="A:B,...", required=True)
    p.add_argument("--remainder", metavar="LIST")

    p = add("surface", _cmd_surface, "invariants of the thickened ribbon surface")
    p.add_argument("file")

    p = add("example", _cmd_example, "inspect or run a bundled worked example")
    p.add_argument("name", help="example name, or 'list'")
    p.add_argument("--run", action="store_true", help="run the example's self-check")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, FormatError, BrauerGraphError, GentleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
