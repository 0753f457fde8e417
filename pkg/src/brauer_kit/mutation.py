"""Graded Kauer moves: sector moves, subset moves, and grading transport.

A sector ``(h, r)`` names the run ``h, sigma(h), ..., sigma^r(h)`` inside a
single vertex orbit.  Moving a sector detaches that run from its vertex and
reattaches it behind the paired half-edge ``iota(sigma^{r+1}(h))``, updating
the grading so that homogeneity is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import (
    BrauerGraph,
    BrauerGraphError,
    GradedBrauerGraph,
    Grading,
)
from .linalg import Vector, solve_unique, vadd, vneg, vsum, vzero


@dataclass(frozen=True)
class Sector:
    """The run ``start, sigma(start), ..., sigma^length(start)``."""

    start: str
    length: int


@dataclass(frozen=True)
class SubsetSectors:
    """Decomposition of an iota-stable subset into maximal sectors plus the
    vertex orbits entirely contained in the subset (which no move touches)."""

    sectors: tuple[Sector, ...]
    saturated: tuple[tuple[str, ...], ...]


def _check_subset(graph: BrauerGraph, subset: Iterable[str]) -> frozenset[str]:
    subset = frozenset(subset)
    unknown = subset - set(graph.halfedges)
    if unknown:
        raise BrauerGraphError(f"unknown half-edges in subset: {sorted(unknown)}")
    not_closed = sorted(h for h in subset if graph.iota(h) not in subset)
    if not_closed:
        raise BrauerGraphError(
            "subset must be closed under the pairing; missing partners of: "
            + ", ".join(not_closed)
        )
    return subset


def sector_move(graded: GradedBrauerGraph, sector: Sector) -> GradedBrauerGraph:
    """One graded Kauer move of the sector ``(h, r)``.

    The new orientation is ``(h  s^{r+1}h) ∘ sigma ∘ (s^r h  i s^{r+1}h)``
    (right-to-left composition), and the degrees of the three half-edges
    ``i s^{r+1}h``, ``s^r h`` and ``s^{-1}h`` are recomputed so every vertex
    keeps its degree sum."""
    graph, grading = graded.graph, graded.grading
    h, r = sector.start, sector.length
    if h not in set(graph.halfedges):
        raise BrauerGraphError(f"unknown half-edge {h!r}")
    if r < 0:
        raise BrauerGraphError("sector length must be non-negative")
    run = [graph.sigma_pow(h, i) for i in range(r + 1)]
    after = graph.sigma(run[-1])  # sigma^{r+1} h
    if after == h:
        raise BrauerGraphError(
            f"sector ({h!r}, {r}) covers its whole vertex orbit; nothing to move"
        )
    landing = graph.iota(after)  # iota sigma^{r+1} h
    last = run[-1]  # sigma^r h
    before = graph.sigma_inv(h)  # sigma^{-1} h
    if landing == last:
        raise BrauerGraphError(
            f"sector ({h!r}, {r}) would reattach onto its own edge at {last!r}"
        )

    swap_out = {h: after, after: h}
    swap_in = {last: landing, landing: last}
    orientation = {
        x: swap_out.get(
            graph.sigma(swap_in.get(x, x)), graph.sigma(swap_in.get(x, x))
        )
        for x in graph.halfedges
    }

    d = grading.degree
    run_sum = vsum([d(x) for x in run], grading.rank)  # sum_{i=0}^{r} d(s^i h)
    degrees = dict(grading.degrees)
    degrees[landing] = vneg(run_sum)
    if landing != before:
        degrees[last] = vadd(d(landing), d(last))
        degrees[before] = vadd(d(before), run_sum)
    else:
        degrees[last] = vadd(vadd(d(before), run_sum), d(last))
        # ``landing`` and ``before`` coincide; both formulas agree on it.
    new_graph = BrauerGraph(graph.halfedges, dict(graph.pairing), orientation)
    return GradedBrauerGraph(new_graph, Grading(grading.rank, degrees))


def maximal_sectors(graph: BrauerGraph, subset: Iterable[str]) -> SubsetSectors:
    """Split a pairing-stable subset into maximal sectors, one per maximal
    run of subset half-edges inside a vertex orbit."""
    subset = _check_subset(graph, subset)
    sectors = []
    saturated = []
    for orbit in graph.vertices():
        inside = [h for h in orbit if h in subset]
        if not inside:
            continue
        if len(inside) == len(orbit):
            saturated.append(orbit)
            continue
        starts = sorted(h for h in inside if graph.sigma_inv(h) not in subset)
        for start in starts:
            length = 0
            while graph.sigma(graph.sigma_pow(start, length)) in subset:
                length += 1
            sectors.append(Sector(start, length))
    return SubsetSectors(tuple(sectors), tuple(saturated))


def subset_move(graded: GradedBrauerGraph, subset: Iterable[str]) -> GradedBrauerGraph:
    """Move every maximal sector of ``subset`` in succession.

    The sector list is frozen on the input graph; each sector is then applied
    to the current graph and grading.  The supports of the transpositions
    involved are pairwise disjoint, so the order of application is
    immaterial (and tested to be)."""
    decomposition = maximal_sectors(graded.graph, subset)
    current = graded
    for sector in decomposition.sectors:
        current = sector_move(current, sector)
    return current


def subset_move_orientation(graph: BrauerGraph, subset: Iterable[str]) -> dict[str, str]:
    """The subset move's orientation, via the closed formula
    ``t_cut ∘ sigma ∘ t_paste`` with both transposition products read off the
    original graph.  Used as an independent cross-check of
    :func:`subset_move`."""
    decomposition = maximal_sectors(graph, subset)
    cut: dict[str, str] = {}
    paste: dict[str, str] = {}
    for sector in decomposition.sectors:
        h = sector.start
        last = graph.sigma_pow(h, sector.length)
        after = graph.sigma(last)
        cut.update({h: after, after: h})
        paste.update({last: graph.iota(after), graph.iota(after): last})
    return {
        x: cut.get(graph.sigma(paste.get(x, x)), graph.sigma(paste.get(x, x)))
        for x in graph.halfedges
    }


@dataclass(frozen=True)
class SectorDegreeReport:
    """Degrees of the canonical morphisms attached to a subset move, one per
    subset half-edge whose vertex orbit is not saturated."""

    degrees: dict[str, Vector]
    saturated: tuple[tuple[str, ...], ...]
    all_zero: bool


def sector_degrees(graded: GradedBrauerGraph, subset: Iterable[str]) -> SectorDegreeReport:
    """For each subset half-edge ``h`` (outside saturated orbits), the degree
    ``sum_{i=0}^{r(h)+1} d(sigma^i h)`` where ``r(h)+1`` is the first exit of
    the orbit walk from the subset."""
    graph, grading = graded.graph, graded.grading
    subset = _check_subset(graph, subset)
    saturated_orbits = maximal_sectors(graph, subset).saturated
    saturated_members = {h for orbit in saturated_orbits for h in orbit}
    degrees = {}
    for h in sorted(subset - saturated_members):
        exit_index = 0
        while graph.sigma_pow(h, exit_index) in subset:
            exit_index += 1
        steps = [graph.sigma_pow(h, i) for i in range(exit_index + 1)]
        degrees[h] = vsum([grading.degree(x) for x in steps], grading.rank)
    all_zero = all(v == vzero(grading.rank) for v in degrees.values())
    return SectorDegreeReport(degrees, saturated_orbits, all_zero)


def grading_transport(
    graph: BrauerGraph, subset: Iterable[str], target: Grading
) -> Optional[Grading]:
    """The unique grading on ``graph`` that the subset move carries to
    ``target`` (a grading on the moved graph), or ``None`` if no grading
    does.

    The degree update of a subset move is linear in the input degrees, so
    the map is inverted by exact rational elimination, one matrix column per
    unit grading."""
    graph.require_valid()
    order = list(graph.halfedges)
    index = {h: i for i, h in enumerate(order)}
    problems = target.diagnostics(graph)
    if problems:
        raise BrauerGraphError("; ".join(problems))

    columns = []
    for h in order:
        unit = Grading(1, {x: ((1,) if x == h else (0,)) for x in order})
        moved = subset_move(GradedBrauerGraph(graph, unit), subset)
        columns.append([moved.grading.degree(x)[0] for x in order])
    matrix = [[columns[c][r] for c in range(len(order))] for r in range(len(order))]

    rhs = [
        [target.degree(h)[component] for h in order]
        for component in range(target.rank)
    ]
    solutions = solve_unique(matrix, rhs)
    if solutions is None:
        return None
    degrees = {}
    for h in order:
        entries = []
        for component in range(target.rank):
            value = solutions[component][index[h]]
            if value.denominator != 1:
                return None
            entries.append(int(value))
        degrees[h] = tuple(entries)
    return Grading(target.rank, degrees)
