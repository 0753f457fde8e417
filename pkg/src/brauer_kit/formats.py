"""Text formats: ``.bg`` for graded Brauer graphs, ``.qa`` for gentle
presentations.  Both are TOML documents.

``.bg``::

    halfedges = ["1+", "1-", "2+", "2-"]
    pairing = [["1+", "1-"], ["2+", "2-"]]
    orientation = [["1+", "2+"], ["1-", "2-"]]

    [grading]
    rank = 1

    [grading.d]
    "1+" = [1]

Half-edges omitted from ``orientation`` are fixed points (univalent
vertices); half-edges omitted from ``grading.d`` have degree zero.  A
missing ``[grading]`` table means the zero grading of rank 1.

``.qa``::

    vertices = ["1", "2"]
    arrows = [{id = "a", source = "1", target = "2", degree = [0]}]
    relations = [["b", "a"]]    # read right to left: b ∘ a = 0
"""

from __future__ import annotations

import sys
from typing import Any

if sys.version_info >= (3, 11):
    import tomllib as _toml
else:
    import tomli as _toml

from .gentle import GArrow, GentleError, GentlePresentation
from .graph import BrauerGraph, BrauerGraphError, GradedBrauerGraph, Grading


class FormatError(ValueError):
    """Raised for syntactic or semantic problems in input files."""


def _toml_load(text: str) -> dict[str, Any]:
    try:
        return _toml.loads(text)
    except _toml.TOMLDecodeError as exc:
        raise FormatError(f"syntax error: {exc}") from exc


def _string_list(raw: Any, what: str) -> list[str]:
    if not isinstance(raw, list) or not all(isinstance(x, str) for x in raw):
        raise FormatError(f"{what} must be a list of strings")
    return raw


def _cycle_list(raw: Any, what: str) -> list[list[str]]:
    if not isinstance(raw, list):
        raise FormatError(f"{what} must be a list of cycles")
    cycles = []
    for cycle in raw:
        cycles.append(_string_list(cycle, f"each {what} cycle"))
    return cycles


def parse_bg(text: str) -> GradedBrauerGraph:
    data = _toml_load(text)
    for key in ("halfedges", "pairing", "orientation"):
        if key not in data:
            raise FormatError(f"missing required key {key!r}")
    halfedges = _string_list(data["halfedges"], "halfedges")
    if len(set(halfedges)) != len(halfedges):
        dupes = sorted({h for h in halfedges if halfedges.count(h) > 1})
        raise FormatError(f"duplicate half-edge names: {dupes}")
    known = set(halfedges)

    pairing_cycles = _cycle_list(data["pairing"], "pairing")
    seen: set[str] = set()
    for cycle in pairing_cycles:
        if len(cycle) != 2:
            raise FormatError(f"pairing cycle {cycle} must pair exactly two half-edges")
        for h in cycle:
            if h not in known:
                raise FormatError(f"pairing names unknown half-edge {h!r}")
            if h in seen:
                raise FormatError(f"half-edge {h!r} appears in two pairing cycles")
            seen.add(h)
    if seen != known:
        raise FormatError(f"half-edges missing from pairing: {sorted(known - seen)}")

    orientation_cycles = _cycle_list(data["orientation"], "orientation")
    seen = set()
    for cycle in orientation_cycles:
        for h in cycle:
            if h not in known:
                raise FormatError(f"orientation names unknown half-edge {h!r}")
            if h in seen:
                raise FormatError(f"half-edge {h!r} appears in two orientation cycles")
            seen.add(h)

    try:
        graph = BrauerGraph.from_cycles(halfedges, pairing_cycles, orientation_cycles)
    except BrauerGraphError as exc:
        raise FormatError(str(exc)) from exc

    grading_table = data.get("grading", {})
    if not isinstance(grading_table, dict):
        raise FormatError("grading must be a table")
    rank = grading_table.get("rank", 1)
    if not isinstance(rank, int) or rank < 1:
        raise FormatError("grading.rank must be a positive integer")
    degrees: dict[str, tuple[int, ...]] = {h: (0,) * rank for h in halfedges}
    raw_degrees = grading_table.get("d", {})
    if not isinstance(raw_degrees, dict):
        raise FormatError("grading.d must be a table of half-edge degrees")
    for h, value in raw_degrees.items():
        if h not in known:
            raise FormatError(f"grading.d names unknown half-edge {h!r}")
        if isinstance(value, int):
            value = [value]
        if (
            not isinstance(value, list)
            or len(value) != rank
            or not all(isinstance(x, int) for x in value)
        ):
            raise FormatError(
                f"degree of {h!r} must be a list of {rank} integers"
            )
        degrees[h] = tuple(value)
    return GradedBrauerGraph(graph, Grading(rank, degrees))


def _quote(name: str) -> str:
    escaped = name.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def dump_bg(graded: GradedBrauerGraph) -> str:
    graph, grading = graded.graph, graded.grading
    lines = []
    lines.append("halfedges = [" + ", ".join(_quote(h) for h in graph.halfedges) + "]")
    pair_cycles = ", ".join(
        "[" + ", ".join(_quote(h) for h in cycle) + "]" for cycle in graph.edges()
    )
    lines.append(f"pairing = [{pair_cycles}]")
    orient_cycles = ", ".join(
        "[" + ", ".join(_quote(h) for h in cycle) + "]"
        for cycle in graph.vertices()
        if len(cycle) > 1
    )
    lines.append(f"orientation = [{orient_cycles}]")
    lines.append("")
    lines.append("[grading]")
    lines.append(f"rank = {grading.rank}")
    lines.append("")
    lines.append("[grading.d]")
    for h in graph.halfedges:
        degree = grading.degree(h)
        if any(degree):
            lines.append(f"{_quote(h)} = [{', '.join(str(x) for x in degree)}]")
    return "\n".join(lines) + "\n"


def parse_qa(text: str) -> GentlePresentation:
    data = _toml_load(text)
    for key in ("vertices", "arrows"):
        if key not in data:
            raise FormatError(f"missing required key {key!r}")
    vertices = _string_list(data["vertices"], "vertices")
    if len(set(vertices)) != len(vertices):
        raise FormatError("duplicate vertex names")
    raw_arrows = data["arrows"]
    if not isinstance(raw_arrows, list):
        raise FormatError("arrows must be a list of tables")
    ranks = set()
    arrows = []
    for entry in raw_arrows:
        if not isinstance(entry, dict):
            raise FormatError("each arrow must be a table")
        for key in ("id", "source", "target"):
            if key not in entry or not isinstance(entry[key], str):
                raise FormatError(f"arrow entry needs string field {key!r}")
        degree = entry.get("degree", [])
        if isinstance(degree, int):
            degree = [degree]
        if not isinstance(degree, list) or not all(isinstance(x, int) for x in degree):
            raise FormatError(f"degree of arrow {entry['id']!r} must be integers")
        ranks.add(len(degree))
        for end in ("source", "target"):
            if entry[end] not in vertices:
                raise FormatError(
                    f"arrow {entry['id']!r} touches unknown vertex {entry[end]!r}"
                )
        arrows.append(GArrow(entry["id"], entry["source"], entry["target"], tuple(degree)))
    if len({a.name for a in arrows}) != len(arrows):
        raise FormatError("duplicate arrow ids")
    if len(ranks) > 1:
        raise FormatError("all arrow degrees must have the same length")
    rank = ranks.pop() if ranks else 0

    raw_relations = data.get("relations", [])
    relations = []
    names = {a.name for a in arrows}
    if not isinstance(raw_relations, list):
        raise FormatError("relations must be a list of pairs")
    for pair in raw_relations:
        pair = _string_list(pair, "relation")
        if len(pair) != 2:
            raise FormatError(f"relation {pair} must name exactly two arrows")
        then, first = pair  # written right to left in the file
        for name in pair:
            if name not in names:
                raise FormatError(f"relation names unknown arrow {name!r}")
        relations.append((first, then))
    return GentlePresentation(tuple(vertices), tuple(arrows), tuple(relations), rank)


def dump_qa(p: GentlePresentation) -> str:
    lines = []
    lines.append("vertices = [" + ", ".join(_quote(v) for v in p.vertices) + "]")
    lines.append("arrows = [")
    for a in p.arrows:
        degree = ", ".join(str(x) for x in a.degree)
        lines.append(
            f"    {{id = {_quote(a.name)}, source = {_quote(a.source)}, "
            f"target = {_quote(a.target)}, degree = [{degree}]}},"
        )
    lines.append("]")
    rels = ", ".join(f"[{_quote(then)}, {_quote(first)}]" for first, then in p.relations)
    lines.append(f"relations = [{rels}]")
    return "\n".join(lines) + "\n"
