"""Gentle presentations and their combinatorial derived invariants.

A gentle presentation is a quiver with quadratic monomial relations subject
to the usual gentleness conditions.  Paths are stored in traversal order:
the tuple ``(a, b)`` is the path that runs through ``a`` first, i.e. the
composite ``b ∘ a`` under right-to-left composition.  Relations are stored
the same way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

from .linalg import Vector


class GentleError(ValueError):
    """Raised when a presentation is not gentle or an operation is invalid."""


@dataclass(frozen=True)
class GArrow:
    name: str
    source: str
    target: str
    degree: Vector = ()


@dataclass(frozen=True)
class GentlePresentation:
    """Quiver with quadratic monomial relations and optional arrow degrees."""

    vertices: tuple[str, ...]
    arrows: tuple[GArrow, ...]
    relations: tuple[tuple[str, str], ...]  # (first, then): "then after first" is zero
    grading_rank: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(
            self, "arrows", tuple(sorted(self.arrows, key=lambda a: a.name))
        )
        object.__setattr__(
            self, "relations", tuple(sorted(tuple(r) for r in self.relations))
        )

    def arrow(self, name: str) -> GArrow:
        table = getattr(self, "_by_name", None)
        if table is None:
            table = {a.name: a for a in self.arrows}
            object.__setattr__(self, "_by_name", table)
        return table[name]

    def outgoing(self, vertex: str) -> list[GArrow]:
        return [a for a in self.arrows if a.source == vertex]

    def incoming(self, vertex: str) -> list[GArrow]:
        return [a for a in self.arrows if a.target == vertex]

    def with_degrees(self, degrees: Mapping[str, Vector], rank: int) -> "GentlePresentation":
        arrows = tuple(
            GArrow(a.name, a.source, a.target, tuple(degrees[a.name])) for a in self.arrows
        )
        return GentlePresentation(self.vertices, arrows, self.relations, rank)


# -- gentleness ------------------------------------------------------------


def check_gentle(p: GentlePresentation) -> list[str]:
    """Diagnostics; empty iff ``p`` is a gentle presentation of a
    finite-dimensional algebra."""
    problems: list[str] = []
    names = [a.name for a in p.arrows]
    if len(names) != len(set(names)):
        problems.append("duplicate arrow names")
        return problems
    vertex_set = set(p.vertices)
    for a in p.arrows:
        for end in (a.source, a.target):
            if end not in vertex_set:
                problems.append(f"arrow {a.name!r} touches unknown vertex {end!r}")
    name_set = set(names)
    for first, then in p.relations:
        if first not in name_set or then not in name_set:
            problems.append(f"relation ({first!r}, {then!r}) names an unknown arrow")
            continue
        if p.arrow(first).target != p.arrow(then).source:
            problems.append(f"relation ({first!r}, {then!r}) is not composable")
    if problems:
        return problems

    for v in p.vertices:
        if len(p.outgoing(v)) > 2:
            problems.append(f"vertex {v!r} has more than two outgoing arrows")
        if len(p.incoming(v)) > 2:
            problems.append(f"vertex {v!r} has more than two incoming arrows")

    relation_set = set(p.relations)
    for a in p.arrows:
        successors = [b for b in p.arrows if b.source == a.target]
        rel = [b.name for b in successors if (a.name, b.name) in relation_set]
        free = [b.name for b in successors if (a.name, b.name) not in relation_set]
        if len(rel) > 1:
            problems.append(f"arrow {a.name!r} has two relation successors: {rel}")
        if len(free) > 1:
            problems.append(f"arrow {a.name!r} has two relation-free successors: {free}")
        predecessors = [b for b in p.arrows if b.target == a.source]
        rel_p = [b.name for b in predecessors if (b.name, a.name) in relation_set]
        free_p = [b.name for b in predecessors if (b.name, a.name) not in relation_set]
        if len(rel_p) > 1:
            problems.append(f"arrow {a.name!r} has two relation predecessors: {rel_p}")
        if len(free_p) > 1:
            problems.append(f"arrow {a.name!r} has two relation-free predecessors: {free_p}")
    if problems:
        return problems

    free_next = permitted_successors(p)
    cycle = _find_cycle(free_next)
    if cycle is not None:
        problems.append(
            "relation-free oriented cycle (infinite-dimensional algebra): "
            + " -> ".join(cycle)
        )
    return problems


def require_gentle(p: GentlePresentation) -> None:
    problems = check_gentle(p)
    if problems:
        raise GentleError("; ".join(problems))


def relation_successors(p: GentlePresentation) -> dict[str, str]:
    """Partial injection sending an arrow to the arrow completing a relation."""
    relation_set = set(p.relations)
    out: dict[str, str] = {}
    for a in p.arrows:
        for b in p.arrows:
            if b.source == a.target and (a.name, b.name) in relation_set:
                out[a.name] = b.name
    return out


def permitted_successors(p: GentlePresentation) -> dict[str, str]:
    """Partial injection sending an arrow to its unique relation-free successor."""
    relation_set = set(p.relations)
    out: dict[str, str] = {}
    for a in p.arrows:
        for b in p.arrows:
            if b.source == a.target and (a.name, b.name) not in relation_set:
                out[a.name] = b.name
    return out


def _find_cycle(next_map: Mapping[str, str]) -> Optional[list[str]]:
    seen: set[str] = set()
    for start in sorted(next_map):
        if start in seen:
            continue
        trail = []
        positions: dict[str, int] = {}
        current = start
        while current in next_map and current not in positions:
            positions[current] = len(trail)
            trail.append(current)
            current = next_map[current]
        if current in positions:
            return trail[positions[current]:] + [current]
        seen.update(trail)
    return None


def _chains_and_cycles(next_map: Mapping[str, str], universe: Sequence[str]):
    """Decompose a partial injection into maximal chains and cycles."""
    has_predecessor = set(next_map.values())
    chains = []
    on_chain: set[str] = set()
    for start in sorted(universe):
        if start in has_predecessor or start in on_chain:
            continue
        chain = [start]
        while chain[-1] in next_map:
            chain.append(next_map[chain[-1]])
        chains.append(tuple(chain))
        on_chain.update(chain)
    cycles = []
    leftovers = sorted(set(universe) - on_chain)
    seen: set[str] = set()
    for start in leftovers:
        if start in seen:
            continue
        cycle = [start]
        current = next_map[start]
        while current != start:
            cycle.append(current)
            current = next_map[current]
        seen.update(cycle)
        cycles.append(tuple(cycle))
    return chains, cycles


# -- sign marks and threads ------------------------------------------------


def sign_marks(
    p: GentlePresentation, rng=None
) -> tuple[dict[str, int], dict[str, int]]:
    """Sign functions (sigma, epsilon) on arrows: arrows sharing a source
    carry opposite sigma, arrows sharing a target opposite epsilon, a
    relation-free composite ``b after a`` forces ``sigma(b) = -epsilon(a)``
    and a relation forces ``sigma(b) = epsilon(a)``.

    Any consistent assignment works; ``rng`` (a ``random.Random``) may flip
    the free seed of each constraint component, which downstream invariants
    must not notice."""
    relation_set = set(p.relations)
    # Nodes ('s', name) / ('e', name); edges carry a parity (+1 same sign,
    # -1 opposite sign).  Two-colour by breadth-first propagation.
    constraints: list[tuple[tuple[str, str], tuple[str, str], int]] = []
    for v in p.vertices:
        outs = sorted(a.name for a in p.outgoing(v))
        ins = sorted(a.name for a in p.incoming(v))
        if len(outs) == 2:
            constraints.append((("s", outs[0]), ("s", outs[1]), -1))
        if len(ins) == 2:
            constraints.append((("e", ins[0]), ("e", ins[1]), -1))
    for a in p.arrows:
        for b in p.arrows:
            if b.source == a.target:
                parity = 1 if (a.name, b.name) in relation_set else -1
                constraints.append((("s", b.name), ("e", a.name), parity))
    adjacency: dict[tuple[str, str], list[tuple[tuple[str, str], int]]] = {}
    for left, right, parity in constraints:
        adjacency.setdefault(left, []).append((right, parity))
        adjacency.setdefault(right, []).append((left, parity))
    values: dict[tuple[str, str], int] = {}
    for a in p.arrows:
        for node in (("s", a.name), ("e", a.name)):
            if node in values:
                continue
            values[node] = rng.choice((1, -1)) if rng is not None else 1
            stack = [node]
            while stack:
                current = stack.pop()
                for neighbour, parity in adjacency.get(current, []):
                    expected = values[current] * parity
                    if neighbour in values:
                        if values[neighbour] != expected:
                            raise GentleError("inconsistent sign structure")
                    else:
                        values[neighbour] = expected
                        stack.append(neighbour)
    sigma = {a.name: values[("s", a.name)] for a in p.arrows}
    epsilon = {a.name: values[("e", a.name)] for a in p.arrows}
    return sigma, epsilon


@dataclass(frozen=True)
class Thread:
    """A maximal permitted or forbidden thread, possibly trivial."""

    kind: str  # "permitted" | "forbidden"
    arrows: tuple[str, ...]  # in traversal order; empty for trivial threads
    source: str
    target: str
    sigma: int
    epsilon: int

    @property
    def is_trivial(self) -> bool:
        return not self.arrows


@dataclass(frozen=True)
class ThreadSet:
    permitted: tuple[Thread, ...]
    forbidden: tuple[Thread, ...]
    full_relation_cycles: tuple[tuple[str, ...], ...]


def _trivial_thread_sites(p: GentlePresentation, want_relation: bool) -> list[str]:
    relation_set = set(p.relations)
    sites = []
    for v in p.vertices:
        ins = p.incoming(v)
        outs = p.outgoing(v)
        if len(ins) > 1 or len(outs) > 1:
            continue
        if ins and outs:
            related = (ins[0].name, outs[0].name) in relation_set
            if related != want_relation:
                continue
        sites.append(v)
    return sites


def threads(p: GentlePresentation, rng=None) -> ThreadSet:
    """All permitted and forbidden threads, including the trivial ones, with
    their sign marks, plus the full-relation cycles (which belong to no
    forbidden thread and enter the invariant as pairs ``(0, length)``).

    A vertex carries a trivial permitted thread when it has at most one
    incoming and one outgoing arrow and their composite (if both exist) is
    relation-free; a trivial forbidden thread when the composite is a
    relation.  A vertex missing one of the two arrows carries both."""
    require_gentle(p)
    sigma, epsilon = sign_marks(p, rng)
    universe = [a.name for a in p.arrows]

    def chain_thread(kind: str, chain: Sequence[str]) -> Thread:
        first, last = p.arrow(chain[0]), p.arrow(chain[-1])
        return Thread(
            kind, tuple(chain), first.source, last.target, sigma[chain[0]], epsilon[chain[-1]]
        )

    def trivial_threads(kind: str, want_relation: bool) -> list[Thread]:
        default = 1 if kind == "permitted" else -1
        items = []
        for v in _trivial_thread_sites(p, want_relation):
            ins = p.incoming(v)
            outs = p.outgoing(v)
            eps = -epsilon[ins[0].name] if ins else default
            sig = -sigma[outs[0].name] if outs else default
            items.append(Thread(kind, (), v, v, sig, eps))
        return items

    permitted_chains, permitted_cycles = _chains_and_cycles(permitted_successors(p), universe)
    if permitted_cycles:  # unreachable after require_gentle
        raise GentleError("relation-free oriented cycle")
    permitted = [chain_thread("permitted", c) for c in permitted_chains]
    permitted += trivial_threads("permitted", want_relation=False)

    relation_next = relation_successors(p)
    _, relation_cycles = _chains_and_cycles(relation_next, universe)
    cycle_members = {x for cycle in relation_cycles for x in cycle}
    trimmed_next = {
        a: b
        for a, b in relation_next.items()
        if a not in cycle_members and b not in cycle_members
    }
    forbidden_chains, _ = _chains_and_cycles(
        trimmed_next, [a for a in universe if a not in cycle_members]
    )
    forbidden = [chain_thread("forbidden", c) for c in forbidden_chains]
    forbidden += trivial_threads("forbidden", want_relation=True)

    canonical_cycles = tuple(sorted(_rotate_to_min(cycle) for cycle in relation_cycles))
    return ThreadSet(tuple(permitted), tuple(forbidden), canonical_cycles)


def _rotate_to_min(cycle: Sequence[str]) -> tuple[str, ...]:
    pivot = min(range(len(cycle)), key=lambda i: cycle[i])
    return tuple(cycle[pivot:]) + tuple(cycle[:pivot])


# -- AG invariant ----------------------------------------------------------


@dataclass(frozen=True)
class AGInvariant:
    """Multiset of pairs (m, n); canonical form is the sorted tuple."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))


def ag_invariant(p: GentlePresentation, rng=None) -> AGInvariant:
    """The derived-invariant multiset of pairs obtained by the alternating
    walk over permitted and forbidden threads, plus one pair ``(0, len)``
    per full-relation cycle.

    ``rng`` randomizes the sign seeds and the pick order of the starting
    threads; the resulting multiset is the same for every choice."""
    tset = threads(p, rng)
    forbidden_by_end: dict[tuple[str, int], Thread] = {}
    for f in tset.forbidden:
        key = (f.target, f.epsilon)
        if key in forbidden_by_end:
            raise GentleError(f"two forbidden threads end at {key}")
        forbidden_by_end[key] = f
    permitted_by_start: dict[tuple[str, int], Thread] = {}
    for h in tset.permitted:
        key = (h.source, h.sigma)
        if key in permitted_by_start:
            raise GentleError(f"two permitted threads start at {key}")
        permitted_by_start[key] = h

    start_order = list(tset.permitted)
    if rng is not None:
        rng.shuffle(start_order)
    pairs = []
    used: set[Thread] = set()
    used_forbidden: set[Thread] = set()
    for start in start_order:
        if start in used:
            continue
        current = start
        count = 0
        total_length = 0
        while True:
            used.add(current)
            forb = forbidden_by_end[(current.target, -current.epsilon)]
            used_forbidden.add(forb)
            count += 1
            total_length += len(forb.arrows)
            current = permitted_by_start[(forb.source, -forb.sigma)]
            if current == start:
                break
        pairs.append((count, total_length))
    if used_forbidden != set(tset.forbidden):  # soundness of the walk
        raise GentleError("alternating walk did not consume every forbidden thread")
    for cycle in tset.full_relation_cycles:
        pairs.append((0, len(cycle)))
    return AGInvariant(tuple(pairs))


# -- dimensions ------------------------------------------------------------


def permitted_paths(p: GentlePresentation) -> list[tuple[str, ...]]:
    """All non-trivial relation-free paths, as tuples of arrow names in
    traversal order.  Together with the trivial paths (one per vertex) these
    form a k-basis of the algebra."""
    successors = permitted_successors(p)
    paths = []
    for a in p.arrows:
        chain = [a.name]
        paths.append(tuple(chain))
        guard = 0
        while chain[-1] in successors:
            chain.append(successors[chain[-1]])
            paths.append(tuple(chain))
            guard += 1
            if guard > len(p.arrows):
                raise GentleError("relation-free oriented cycle")
    return paths


def dimension(p: GentlePresentation) -> int:
    """k-dimension: trivial paths plus relation-free non-trivial paths."""
    require_gentle(p)
    return len(p.vertices) + len(permitted_paths(p))


# -- global dimension ------------------------------------------------------


@dataclass(frozen=True)
class GlobalDimensionReport:
    value: Union[int, float]  # math.inf when infinite
    witness: str


def global_dimension(p: GentlePresentation) -> GlobalDimensionReport:
    """Global dimension via relation-successor chains: the projective
    dimension of the cokernel module attached to an arrow is the number of
    relation-successor steps available from it (infinite on a cycle)."""
    require_gentle(p)
    successors = relation_successors(p)
    _, cycles = _chains_and_cycles(successors, [a.name for a in p.arrows])
    cycle_members = {x for cycle in cycles for x in cycle}

    def arrow_depth(name: str) -> Union[int, float]:
        depth = 0
        current = name
        while current in successors:
            if current in cycle_members:
                return math.inf
            current = successors[current]
            depth += 1
        if current in cycle_members:
            return math.inf
        return depth

    best: Union[int, float] = 0
    witness = f"simple at {p.vertices[0]!r} (projective)" if p.vertices else "empty quiver"
    for v in p.vertices:
        outs = p.outgoing(v)
        if not outs:
            value: Union[int, float] = 0
        else:
            value = 1 + max(arrow_depth(a.name) for a in outs)
        if value > best:
            best = value
            if value == math.inf:
                cycle = cycles[0]
                witness = "full-relation cycle: " + " -> ".join(cycle + (cycle[0],))
            else:
                witness = f"simple at {v!r} has projective dimension {value}"
    return GlobalDimensionReport(best, witness)


# -- isomorphism of presentations -----------------------------------------


def presentations_isomorphic(
    p: GentlePresentation, q: GentlePresentation, respect_degrees: bool = False
) -> Optional[tuple[dict[str, str], dict[str, str]]]:
    """Search for a pair of bijections (vertices, arrows) matching sources,
    targets, relations, and optionally arrow degrees."""
    if len(p.vertices) != len(q.vertices) or len(p.arrows) != len(q.arrows):
        return None
    if len(p.relations) != len(q.relations):
        return None

    def vertex_profile(pres: GentlePresentation, v: str) -> tuple:
        return (len(pres.incoming(v)), len(pres.outgoing(v)))

    q_rel = set(q.relations)
    p_rel = set(p.relations)

    def compatible(vmap: dict[str, str]) -> Optional[dict[str, str]]:
        amap: dict[str, str] = {}
        taken: set[str] = set()

        def place(index: int) -> bool:
            if index == len(p.arrows):
                for a, b in p_rel:
                    if (amap[a], amap[b]) not in q_rel:
                        return False
                return True
            arrow = p.arrows[index]
            for candidate in q.arrows:
                if candidate.name in taken:
                    continue
                if vmap[arrow.source] != candidate.source:
                    continue
                if vmap[arrow.target] != candidate.target:
                    continue
                if respect_degrees and arrow.degree != candidate.degree:
                    continue
                amap[arrow.name] = candidate.name
                taken.add(candidate.name)
                if place(index + 1):
                    return True
                del amap[arrow.name]
                taken.discard(candidate.name)
            return False

        return dict(amap) if place(0) else None

    p_profiles = {v: vertex_profile(p, v) for v in p.vertices}
    q_profiles = {v: vertex_profile(q, v) for v in q.vertices}
    if sorted(p_profiles.values()) != sorted(q_profiles.values()):
        return None

    vmap: dict[str, str] = {}
    taken: set[str] = set()

    def assign(index: int) -> Optional[tuple[dict[str, str], dict[str, str]]]:
        if index == len(p.vertices):
            amap = compatible(vmap)
            if amap is not None:
                return dict(vmap), amap
            return None
        v = p.vertices[index]
        for w in q.vertices:
            if w in taken or q_profiles[w] != p_profiles[v]:
                continue
            vmap[v] = w
            taken.add(w)
            found = assign(index + 1)
            if found is not None:
                return found
            del vmap[v]
            taken.discard(w)
        return None

    return assign(0)
