"""Brauer graphs encoded as half-edge permutation data, with integer gradings.

A Brauer graph is a triple ``(H, pairing, orientation)`` where ``H`` is a
finite set of half-edge names, ``pairing`` is a fixed-point-free involution
whose orbits are the edges, and ``orientation`` is a permutation whose orbits
are the vertices together with their cyclic (ribbon) structure.

Permutations compose right to left throughout: ``(f * g)(x) = f(g(x))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import Vector, vadd, vzero


class BrauerGraphError(ValueError):
    """Raised for structurally invalid graphs, gradings, or operations."""


def permutation_cycles(perm: Mapping[str, str], domain: Sequence[str]) -> tuple[tuple[str, ...], ...]:
    """Disjoint cycles of ``perm``, each starting at its least element,
    listed in order of those least elements.  Fixed points are included."""
    seen: set[str] = set()
    cycles = []
    for start in sorted(domain):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        current = perm[start]
        while current != start:
            cycle.append(current)
            seen.add(current)
            current = perm[current]
        cycles.append(tuple(cycle))
    return tuple(cycles)


def _dict_from_cycles(cycles: Iterable[Sequence[str]], domain: Sequence[str]) -> dict[str, str]:
    perm = {h: h for h in domain}
    for cycle in cycles:
        for i, h in enumerate(cycle):
            perm[h] = cycle[(i + 1) % len(cycle)]
    return perm


@dataclass(frozen=True, eq=True)
class BrauerGraph:
    """Half-edge model of a Brauer graph.  Instances are never mutated;
    every operation returns a fresh graph."""

    halfedges: tuple[str, ...]
    pairing: Mapping[str, str]
    orientation: Mapping[str, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "halfedges", tuple(sorted(self.halfedges)))
        object.__setattr__(self, "pairing", dict(self.pairing))
        object.__setattr__(self, "orientation", dict(self.orientation))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_cycles(
        cls,
        halfedges: Sequence[str],
        pairing_cycles: Iterable[Sequence[str]],
        orientation_cycles: Iterable[Sequence[str]],
    ) -> "BrauerGraph":
        """Build a graph from cycle notation and fail fast if invalid.

        Half-edges omitted from ``orientation_cycles`` are fixed points of
        the orientation (univalent vertices)."""
        halfedges = tuple(halfedges)
        known = set(halfedges)
        for cycle in itertools.chain(pairing_cycles, orientation_cycles):
            for h in cycle:
                if h not in known:
                    raise BrauerGraphError(f"unknown half-edge {h!r} in cycle data")
        graph = cls(
            halfedges=halfedges,
            pairing=_dict_from_cycles(pairing_cycles, halfedges),
            orientation=_dict_from_cycles(orientation_cycles, halfedges),
        )
        graph.require_valid()
        return graph

    # -- validation --------------------------------------------------------

    def diagnostics(self) -> list[str]:
        """Structural problems, one human-readable message per defect."""
        problems: list[str] = []
        names = set(self.halfedges)
        if len(self.halfedges) != len(names):
            problems.append("duplicate half-edge names")
        for label, perm in (("pairing", self.pairing), ("orientation", self.orientation)):
            if set(perm) != names:
                missing = sorted(names - set(perm)) + sorted(set(perm) - names)
                problems.append(f"{label} domain mismatch at {missing}")
                continue
            if set(perm.values()) != names:
                problems.append(f"{label} is not a bijection")
        if not problems:
            for h in self.halfedges:
                partner = self.pairing[h]
                if partner == h:
                    problems.append(f"pairing fixes {h!r}; every edge needs two half-edges")
                elif self.pairing[partner] != h:
                    problems.append(f"pairing is not an involution at {h!r}")
        return problems

    def require_valid(self) -> None:
        problems = self.diagnostics()
        if problems:
            raise BrauerGraphError("; ".join(problems))

    # -- permutation access ------------------------------------------------

    def sigma(self, h: str) -> str:
        return self.orientation[h]

    def sigma_inv(self, h: str) -> str:
        inverse = getattr(self, "_sigma_inv", None)
        if inverse is None:
            inverse = {v: k for k, v in self.orientation.items()}
            object.__setattr__(self, "_sigma_inv", inverse)
        return inverse[h]

    def sigma_pow(self, h: str, k: int) -> str:
        step = self.sigma if k >= 0 else self.sigma_inv
        for _ in range(abs(k)):
            h = step(h)
        return h

    def iota(self, h: str) -> str:
        return self.pairing[h]

    # -- orbits ------------------------------------------------------------

    def vertices(self) -> tuple[tuple[str, ...], ...]:
        return permutation_cycles(self.orientation, self.halfedges)

    def edges(self) -> tuple[tuple[str, ...], ...]:
        return permutation_cycles(self.pairing, self.halfedges)

    def vertex_of(self, h: str) -> tuple[str, ...]:
        """The orientation orbit through ``h``, starting at ``h``."""
        cycle = [h]
        current = self.sigma(h)
        while current != h:
            cycle.append(current)
            current = self.sigma(current)
        return tuple(cycle)

    def edge_of(self, h: str) -> tuple[str, str]:
        partner = self.pairing[h]
        return (h, partner) if h <= partner else (partner, h)

    def valency(self, h: str) -> int:
        return len(self.vertex_of(h))

    # -- connectivity ------------------------------------------------------

    def connected_components(self) -> tuple[tuple[str, ...], ...]:
        seen: set[str] = set()
        components = []
        for start in self.halfedges:
            if start in seen:
                continue
            stack = [start]
            component = set()
            while stack:
                h = stack.pop()
                if h in component:
                    continue
                component.add(h)
                stack.extend((self.pairing[h], self.orientation[h]))
            seen |= component
            components.append(tuple(sorted(component)))
        return tuple(components)

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1


@dataclass(frozen=True, eq=True)
class Grading:
    """A degree vector in ``Z^rank`` for every half-edge."""

    rank: int
    degrees: Mapping[str, Vector]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "degrees", {h: tuple(v) for h, v in dict(self.degrees).items()}
        )

    @classmethod
    def zero(cls, graph: BrauerGraph, rank: int = 1) -> "Grading":
        return cls(rank, {h: vzero(rank) for h in graph.halfedges})

    @classmethod
    def from_ones(cls, graph: BrauerGraph, ones: Iterable[str]) -> "Grading":
        """Rank-1 grading with degree 1 exactly on ``ones``."""
        ones = set(ones)
        unknown = ones - set(graph.halfedges)
        if unknown:
            raise BrauerGraphError(f"unknown half-edges in degree set: {sorted(unknown)}")
        return cls(1, {h: (1,) if h in ones else (0,) for h in graph.halfedges})

    def degree(self, h: str) -> Vector:
        return self.degrees[h]

    def ones(self) -> frozenset[str]:
        """Half-edges of degree (1,); only meaningful for 0/1-valued rank-1 gradings."""
        return frozenset(h for h, v in self.degrees.items() if v == (1,))

    def diagnostics(self, graph: BrauerGraph) -> list[str]:
        problems = []
        if self.rank < 1:
            problems.append("grading rank must be at least 1")
        if set(self.degrees) != set(graph.halfedges):
            problems.append("grading domain does not match the half-edge set")
        else:
            for h, v in self.degrees.items():
                if len(v) != self.rank:
                    problems.append(f"degree of {h!r} has length {len(v)}, expected {self.rank}")
        return problems


@dataclass(frozen=True, eq=True)
class GradedBrauerGraph:
    graph: BrauerGraph
    grading: Grading

    def __post_init__(self) -> None:
        self.graph.require_valid()
        problems = self.grading.diagnostics(self.graph)
        if problems:
            raise BrauerGraphError("; ".join(problems))

    def degree(self, h: str) -> Vector:
        return self.grading.degree(h)


# -- homogeneity and admissible cuts --------------------------------------


def homogeneity(graded: GradedBrauerGraph) -> Optional[Vector]:
    """The common degree sum over every vertex, or ``None`` if the sums differ."""
    graph, grading = graded.graph, graded.grading
    common: Optional[Vector] = None
    for orbit in graph.vertices():
        total = vzero(grading.rank)
        for h in orbit:
            total = vadd(total, grading.degree(h))
        if common is None:
            common = total
        elif total != common:
            return None
    return common


def is_homogeneous(graded: GradedBrauerGraph, target: Vector) -> bool:
    return homogeneity(graded) == tuple(target)


def is_admissible_cut(graded: GradedBrauerGraph) -> bool:
    """A cut is a rank-1, {0,1}-valued grading that is 1-homogeneous."""
    grading = graded.grading
    if grading.rank != 1:
        return False
    if any(v not in ((0,), (1,)) for v in grading.degrees.values()):
        return False
    return homogeneity(graded) == (1,)


def enumerate_admissible_cuts(graph: BrauerGraph) -> list[Grading]:
    """All admissible cuts, i.e. one degree-1 half-edge per vertex.

    Univalent vertices have no choice: their single half-edge is forced to
    degree 1.  The enumeration is deterministic (lexicographic in the choice
    of degree-1 half-edge per vertex)."""
    graph.require_valid()
    forced = [orbit[0] for orbit in graph.vertices() if len(orbit) == 1]
    choices = [sorted(orbit) for orbit in graph.vertices() if len(orbit) > 1]
    cuts = []
    for picks in itertools.product(*choices):
        cuts.append(Grading.from_ones(graph, set(forced) | set(picks)))
    return cuts


# -- topology --------------------------------------------------------------


@dataclass(frozen=True)
class SurfaceInvariants:
    vertex_count: int
    edge_count: int
    faces: tuple[tuple[str, ...], ...]
    boundary_components: int
    euler_characteristic: int
    genus: int


def surface_invariants(graph: BrauerGraph) -> SurfaceInvariants:
    """Topological invariants of the oriented surface the ribbon structure
    thickens into.  Faces are the orbits of ``orientation ∘ pairing``."""
    graph.require_valid()
    components = graph.connected_components()
    if len(components) > 1:
        raise BrauerGraphError(
            "surface invariants need a connected graph; components: "
            + "; ".join("{" + ", ".join(c) + "}" for c in components)
        )
    face_perm = {h: graph.sigma(graph.iota(h)) for h in graph.halfedges}
    faces = permutation_cycles(face_perm, graph.halfedges)
    n_vertices = len(graph.vertices())
    n_edges = len(graph.edges())
    euler = n_vertices - n_edges
    boundary = len(faces)
    genus2 = 2 - boundary - euler
    if genus2 % 2 != 0 or genus2 < 0:
        raise BrauerGraphError("inconsistent surface data")  # unreachable for valid input
    return SurfaceInvariants(
        vertex_count=n_vertices,
        edge_count=n_edges,
        faces=faces,
        boundary_components=boundary,
        euler_characteristic=euler,
        genus=genus2 // 2,
    )


# -- isomorphism -----------------------------------------------------------


def _local_signature(graph: BrauerGraph, grading: Optional[Grading], h: str) -> tuple:
    deg = grading.degree(h) if grading else ()
    return (len(graph.vertex_of(h)), len(graph.vertex_of(graph.iota(h))), deg)


def is_isomorphic(
    first: BrauerGraph,
    second: BrauerGraph,
    first_grading: Optional[Grading] = None,
    second_grading: Optional[Grading] = None,
) -> Optional[dict[str, str]]:
    """A bijection of half-edges commuting with pairing and orientation, or
    ``None``.  When gradings are supplied the bijection must preserve degrees.
    """
    if len(first.halfedges) != len(second.halfedges):
        return None
    if (first_grading is None) != (second_grading is None):
        raise BrauerGraphError("supply gradings for both graphs or neither")
    if first_grading and first_grading.rank != second_grading.rank:
        return None

    sig1 = {h: _local_signature(first, first_grading, h) for h in first.halfedges}
    sig2 = {h: _local_signature(second, second_grading, h) for h in second.halfedges}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    components = first.connected_components()
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def propagate(base: str, image: str) -> Optional[dict[str, str]]:
        # The subgroup generated by pairing and orientation acts transitively
        # on a component, so one seed determines the whole restriction.
        local = {base: image}
        stack = [base]
        while stack:
            h = stack.pop()
            for step1, step2 in (
                (first.pairing, second.pairing),
                (first.orientation, second.orientation),
            ):
                nxt, img = step1[h], step2[local[h]]
                if nxt in local:
                    if local[nxt] != img:
                        return None
                else:
                    if img in used or img in local.values():
                        return None
                    if sig1[nxt] != sig2[img]:
                        return None
                    local[nxt] = img
                    stack.append(nxt)
        return local

    def search(index: int) -> bool:
        if index == len(components):
            return True
        component = components[index]
        base = component[0]
        for image in sorted(set(second.halfedges) - used):
            if sig2[image] != sig1[base]:
                continue
            local = propagate(base, image)
            if local is None or len(local) != len(component):
                continue
            mapping.update(local)
            used.update(local.values())
            if search(index + 1):
                return True
            for k in local:
                mapping.pop(k)
            used.difference_update(local.values())
        return False

    if search(0):
        return dict(mapping)
    return None
