"""Brauer graph algebras: quivers, relations, cuts, and trivial extensions.

The quiver of a Brauer graph has one vertex per edge and one arrow per
half-edge ``h`` with ``sigma(h) != h``; the arrow named ``h`` runs from the
edge of ``h`` to the edge of ``sigma(h)``.  Paths are stored in traversal
order (first arrow first); rendering composes right to left.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .gentle import GArrow, GentlePresentation, require_gentle, threads
from .graph import (
    BrauerGraph,
    BrauerGraphError,
    GradedBrauerGraph,
    Grading,
    is_admissible_cut,
)
from .linalg import Vector


def edge_name(graph: BrauerGraph, h: str) -> str:
    """Canonical label for the edge through ``h``: the common stem when the
    two half-edges are ``stem+`` and ``stem-``, otherwise both names joined."""
    partner = graph.iota(h)
    if (
        len(h) > 1
        and len(partner) > 1
        and h[:-1] == partner[:-1]
        and {h[-1], partner[-1]} == {"+", "-"}
    ):
        return h[:-1]
    low, high = sorted((h, partner))
    return f"{low}|{high}"


@dataclass(frozen=True)
class Arrow:
    name: str  # the half-edge the arrow starts along
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)


def quiver_of(graph: BrauerGraph) -> Quiver:
    graph.require_valid()
    vertices = tuple(sorted({edge_name(graph, h) for h in graph.halfedges}))
    arrows = tuple(
        Arrow(h, edge_name(graph, h), edge_name(graph, graph.sigma(h)))
        for h in graph.halfedges
        if graph.sigma(h) != h
    )
    return Quiver(vertices, arrows)


@dataclass(frozen=True)
class SpecialCycle:
    """The cycle of arrows read around a vertex orbit from a chosen start."""

    start: str
    arrows: tuple[str, ...]  # arrow (= half-edge) names in traversal order


def special_cycles(graph: BrauerGraph) -> tuple[SpecialCycle, ...]:
    cycles = []
    for orbit in graph.vertices():
        if len(orbit) < 2:
            continue
        for start in orbit:
            walk = graph.vertex_of(start)
            cycles.append(SpecialCycle(start, tuple(walk)))
    return tuple(cycles)


@dataclass(frozen=True)
class RelationSet:
    """Defining relations of the Brauer graph algebra.

    * ``commutations`` — pairs of special cycles at the two ends of an edge,
      equal in the algebra (the difference is the relation).
    * ``overruns`` — a special cycle followed once more by its first arrow.
    * ``compositions`` — zero composites ``(h, iota(sigma(h)))`` of arrows
      that consecutively leave a cycle.
    """

    commutations: tuple[tuple[tuple[str, ...], tuple[str, ...]], ...]
    overruns: tuple[tuple[str, ...], ...]
    compositions: tuple[tuple[str, str], ...]


def relations(graph: BrauerGraph) -> RelationSet:
    graph.require_valid()
    commutations = []
    for h, partner in graph.edges():
        if len(graph.vertex_of(h)) < 2 or len(graph.vertex_of(partner)) < 2:
            continue
        cycle_a = graph.vertex_of(h)
        cycle_b = graph.vertex_of(partner)
        pair = tuple(sorted((cycle_a, cycle_b)))
        commutations.append(pair)
    overruns = tuple(
        cycle.arrows + (cycle.arrows[0],) for cycle in special_cycles(graph)
    )
    arrow_names = {h for h in graph.halfedges if graph.sigma(h) != h}
    compositions = tuple(
        sorted(
            (h, graph.iota(graph.sigma(h)))
            for h in sorted(arrow_names)
            if graph.iota(graph.sigma(h)) in arrow_names
        )
    )
    return RelationSet(tuple(sorted(commutations)), overruns, compositions)


# -- dimension and basis ---------------------------------------------------

BasisElement = tuple  # ("unit", edge) | ("path", arrows) | ("socle", edge)


def basis_of(graph: BrauerGraph) -> list[BasisElement]:
    """A k-basis: one unit per edge, the proper non-empty subpaths of special
    cycles, and one socle element per edge (the common value of the two full
    cycles at its ends; a formal socle when neither end has a cycle)."""
    graph.require_valid()
    basis: list[BasisElement] = []
    edges = graph.edges()
    for h, _ in edges:
        basis.append(("unit", edge_name(graph, h)))
    for orbit in graph.vertices():
        size = len(orbit)
        if size < 2:
            continue
        for start in orbit:
            walk = graph.vertex_of(start)
            for length in range(1, size):
                basis.append(("path", walk[:length]))
    for h, _ in edges:
        basis.append(("socle", edge_name(graph, h)))
    return basis


def dimension_of(graph: BrauerGraph) -> int:
    """Equals ``sum_v val(v)^2`` when the graph has no univalent vertices."""
    return len(basis_of(graph))


# -- cut algebras ----------------------------------------------------------


def cut_algebra(
    graph: BrauerGraph,
    cut: Grading,
    extra_gradings: Sequence[Grading] = (),
) -> GentlePresentation:
    """The gentle algebra obtained by deleting the degree-1 arrows of an
    admissible cut.  Its relations are exactly the surviving zero
    composites; the commutation and overrun relations die with the cut.

    ``extra_gradings`` install arrow degrees on the result, one coordinate
    block per grading (the degree of arrow ``h`` is the degree of ``h``)."""
    graded = GradedBrauerGraph(graph, cut)
    if not is_admissible_cut(graded):
        raise BrauerGraphError("the supplied grading is not an admissible cut")
    quiver = quiver_of(graph)
    kept = [a for a in quiver.arrows if cut.degree(a.name) == (0,)]
    kept_names = {a.name for a in kept}
    rels = tuple(
        (first, then)
        for first, then in relations(graph).compositions
        if first in kept_names and then in kept_names
    )
    rank = sum(g.rank for g in extra_gradings)
    arrows = tuple(
        GArrow(
            a.name,
            a.source,
            a.target,
            tuple(itertools.chain.from_iterable(g.degree(a.name) for g in extra_gradings)),
        )
        for a in kept
    )
    return GentlePresentation(quiver.vertices, arrows, rels, rank)


def cut_of_arrows(graph: BrauerGraph, degree_one_arrows: Iterable[str]) -> Grading:
    """The admissible cut whose degree-1 half-edges are the given arrows
    plus every univalent vertex's half-edge (these are forced)."""
    ones = set(degree_one_arrows)
    for orbit in graph.vertices():
        if len(orbit) == 1:
            ones.add(orbit[0])
    cut = Grading.from_ones(graph, ones)
    if not is_admissible_cut(GradedBrauerGraph(graph, cut)):
        raise BrauerGraphError(
            "the arrow set does not select exactly one half-edge per vertex"
        )
    return cut


def trivext_bigrading(graph: BrauerGraph, cut1: Grading, cut2: Grading) -> Grading:
    """The rank-2 grading combining a cut with a second cut's induced grading.

    First coordinate: ``cut1``.  Second coordinate: the grading induced by
    ``cut2`` on the cut algebra of ``cut1``, extended to the whole trivial
    extension via the graded dual — so the dual part carries minus the
    degree of its complementary path, which works out to
    ``cut2(h) - cut1(h)`` on every half-edge."""
    for cut in (cut1, cut2):
        if not is_admissible_cut(GradedBrauerGraph(graph, cut)):
            raise BrauerGraphError("both gradings must be admissible cuts")
    degrees = {
        h: (cut1.degree(h)[0], cut2.degree(h)[0] - cut1.degree(h)[0])
        for h in graph.halfedges
    }
    return Grading(2, degrees)


# -- the trivial extension graph of a gentle presentation ------------------


def trivial_extension_graph(p: GentlePresentation) -> tuple[BrauerGraph, Grading]:
    """Reconstruct the graded Brauer graph whose cut algebra is ``p``.

    Quiver vertices become edges; each maximal permitted thread (trivial
    ones included) becomes a vertex whose cyclic order follows the thread,
    closed up by one new degree-1 half-edge.  Every quiver vertex lies on
    exactly two thread visits, except isolated vertices, which get a second
    (singleton) vertex on the other side of their edge."""
    require_gentle(p)
    tset = threads(p)

    visit_lists: list[list[str]] = []
    for thread in sorted(
        tset.permitted, key=lambda t: (t.arrows, t.source)
    ):
        if thread.is_trivial:
            visit_lists.append([thread.source])
        else:
            stations = [p.arrow(thread.arrows[0]).source]
            stations += [p.arrow(name).target for name in thread.arrows]
            visit_lists.append(stations)
    for v in p.vertices:
        if not p.incoming(v) and not p.outgoing(v):
            visit_lists.append([v])  # the far, univalent end of an isolated edge

    visit_count: dict[str, int] = {v: 0 for v in p.vertices}
    halfedges: list[str] = []
    orientation_cycles: list[list[str]] = []
    degree_one: set[str] = set()
    for stations in visit_lists:
        cycle = []
        for station in stations:
            visit_count[station] += 1
            suffix = "+" if visit_count[station] == 1 else "-"
            name = station + suffix
            halfedges.append(name)
            cycle.append(name)
        degree_one.add(cycle[-1])  # the closing (dual) arrow carries degree 1
        orientation_cycles.append(cycle)
    bad = {v: c for v, c in visit_count.items() if c != 2}
    if bad:
        raise BrauerGraphError(f"thread bookkeeping failed at vertices {sorted(bad)}")

    pairing_cycles = [[v + "+", v + "-"] for v in p.vertices]
    graph = BrauerGraph.from_cycles(halfedges, pairing_cycles, orientation_cycles)
    return graph, Grading.from_ones(graph, degree_one)


# -- rendering helpers -----------------------------------------------------


def format_path(arrows: Sequence[str]) -> str:
    """Right-to-left rendering of a traversal-order arrow sequence."""
    return "*".join(reversed([f"a({name})" for name in arrows]))


def format_relations(rels: RelationSet) -> list[str]:
    lines = []
    for left, right in rels.commutations:
        lines.append(f"{format_path(left)} = {format_path(right)}")
    for path in rels.overruns:
        lines.append(f"{format_path(path)} = 0")
    for first, then in rels.compositions:
        lines.append(f"{format_path((first, then))} = 0")
    return lines
