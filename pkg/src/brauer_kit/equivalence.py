"""Derived-equivalence certificates between graded algebra presentations.

Two arrow gradings on the same quiver are shift-equivalent when a vertex
shift ``n`` satisfies ``n(target) - n(source) = d1(arrow) - d2(arrow)`` for
every arrow; the witness is normalized so that each connected component's
componentwise minimum is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .algebra import Quiver, cut_of_arrows, quiver_of
from .graph import BrauerGraph, BrauerGraphError, Grading
from .linalg import Vector, det2, mat_vec, vsub


def shift_equivalence(
    quiver: Quiver,
    d1: Mapping[str, Vector],
    d2: Mapping[str, Vector],
) -> Optional[dict[str, Vector]]:
    """The normalized vertex shift carrying ``d1`` to ``d2``, or ``None``."""
    names = {a.name for a in quiver.arrows}
    for d in (d1, d2):
        if set(d) != names:
            raise BrauerGraphError("arrow grading domain does not match the quiver")
    ranks = {len(v) for v in d1.values()} | {len(v) for v in d2.values()}
    if len(ranks) > 1:
        raise BrauerGraphError("mixed grading ranks")
    rank = ranks.pop() if ranks else 1

    adjacency: dict[str, list[tuple[str, Vector]]] = {v: [] for v in quiver.vertices}
    for a in quiver.arrows:
        diff = vsub(tuple(d1[a.name]), tuple(d2[a.name]))
        adjacency[a.source].append((a.target, diff))
        adjacency[a.target].append((a.source, tuple(-x for x in diff)))

    shift: dict[str, Vector] = {}
    for root in quiver.vertices:
        if root in shift:
            continue
        component = [root]
        shift[root] = (0,) * rank
        stack = [root]
        while stack:
            v = stack.pop()
            for w, diff in adjacency[v]:
                # diff is d1 - d2 along an arrow v -> w, so n(w) = n(v) + diff.
                expected = tuple(x + y for x, y in zip(shift[v], diff))
                if w in shift:
                    if shift[w] != expected:
                        return None
                else:
                    shift[w] = expected
                    component.append(w)
                    stack.append(w)
        minima = tuple(
            min(shift[v][i] for v in component) for i in range(rank)
        )
        for v in component:
            shift[v] = vsub(shift[v], minima)
    return shift


DEFAULT_MATRIX: tuple[tuple[int, int], tuple[int, int]] = ((1, 1), (0, -1))


def transformed_equivalence(
    quiver: Quiver,
    d1: Mapping[str, Vector],
    d2: Mapping[str, Vector],
    matrix: Sequence[Sequence[int]] = DEFAULT_MATRIX,
) -> Optional[dict[str, Vector]]:
    """Shift equivalence after acting on ``d1`` by a unimodular 2x2 matrix."""
    if len(matrix) != 2 or any(len(row) != 2 for row in matrix):
        raise BrauerGraphError("the transform must be a 2x2 integer matrix")
    if abs(det2(matrix)) != 1:
        raise BrauerGraphError("the transform must be unimodular")
    if any(len(v) != 2 for d in (d1, d2) for v in d.values()):
        raise BrauerGraphError("transformed equivalence needs rank-2 gradings")
    transformed = {name: mat_vec(matrix, tuple(v)) for name, v in d1.items()}
    return shift_equivalence(quiver, transformed, d2)


# -- triangular splits -----------------------------------------------------


@dataclass(frozen=True)
class TriangularSplit:
    """A split of the quiver into two components by deleting arrow pairs.

    Deleting, at each chosen vertex, the pair ``(alpha, beta)`` leaves
    exactly two components; every ``alpha`` runs minus -> plus and every
    ``beta`` plus -> minus.  The two admissible cuts extend a common cut of
    the remaining vertices by the alphas, respectively the betas."""

    plus_vertices: tuple[str, ...]
    minus_vertices: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]  # (alpha, beta) half-edge names
    split_vertices: tuple[tuple[str, ...], ...]
    cut_alpha: Grading
    cut_beta: Grading
    remainder_count: int = 1  # admissible completions of the common cut


def triangular_split(
    graph: BrauerGraph,
    pairs: Sequence[tuple[str, str]],
    remainder_arrows: Optional[Iterable[str]] = None,
) -> TriangularSplit:
    """Check and package a triangular split.

    ``pairs`` lists, per split vertex, the two arrows to delete (named by
    their half-edges; both must sit at the same vertex).  The optional
    ``remainder_arrows`` pick the common cut on the untouched vertices; the
    lexicographically least half-edge of each vertex is used by default."""
    graph.require_valid()
    quiver = quiver_of(graph)
    arrow_names = {a.name for a in quiver.arrows}
    split_vertices = []
    for alpha, beta in pairs:
        for name in (alpha, beta):
            if name not in arrow_names:
                raise BrauerGraphError(f"no arrow starts along half-edge {name!r}")
        orbit = graph.vertex_of(alpha)
        if beta not in orbit:
            raise BrauerGraphError(
                f"arrows {alpha!r} and {beta!r} do not share a vertex"
            )
        if alpha == beta:
            raise BrauerGraphError("each pair needs two distinct arrows")
        split_vertices.append(tuple(sorted(orbit)))
    if len(set(split_vertices)) != len(split_vertices):
        raise BrauerGraphError("split vertices must be pairwise distinct")

    deleted = {name for pair in pairs for name in pair}
    adjacency: dict[str, set[str]] = {v: set() for v in quiver.vertices}
    for a in quiver.arrows:
        if a.name in deleted:
            continue
        adjacency[a.source].add(a.target)
        adjacency[a.target].add(a.source)
    components = []
    seen: set[str] = set()
    for root in quiver.vertices:
        if root in seen:
            continue
        stack, comp = [root], set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            stack.extend(adjacency[v])
        seen |= comp
        components.append(comp)
    if len(components) != 2:
        raise BrauerGraphError(
            f"deleting the arrow pairs leaves {len(components)} components, not 2"
        )

    first_alpha = quiver.arrow(pairs[0][0])
    plus = next(c for c in components if first_alpha.target in c)
    minus = next(c for c in components if c is not plus)
    for alpha, beta in pairs:
        a, b = quiver.arrow(alpha), quiver.arrow(beta)
        if not (a.source in minus and a.target in plus):
            raise BrauerGraphError(
                f"arrow {alpha!r} does not run from the minus to the plus part"
            )
        if not (b.source in plus and b.target in minus):
            raise BrauerGraphError(
                f"arrow {beta!r} does not run from the plus to the minus part"
            )

    split_orbit_set = set(split_vertices)
    remaining = [
        orbit
        for orbit in graph.vertices()
        if len(orbit) > 1 and tuple(sorted(orbit)) not in split_orbit_set
    ]
    completions = 1
    for orbit in remaining:
        completions *= len(orbit)
    if remainder_arrows is None:
        # Lexicographically first admissible completion.
        rest = [min(orbit) for orbit in remaining]
    else:
        rest = list(remainder_arrows)
        covered = {h for orbit in remaining for h in orbit}
        if sorted(rest) != sorted(h for h in rest if h in covered) or len(rest) != len(remaining):
            raise BrauerGraphError(
                "remainder arrows must pick exactly one arrow per untouched vertex"
            )
    cut_alpha = cut_of_arrows(graph, rest + [alpha for alpha, _ in pairs])
    cut_beta = cut_of_arrows(graph, rest + [beta for _, beta in pairs])
    return TriangularSplit(
        plus_vertices=tuple(sorted(plus)),
        minus_vertices=tuple(sorted(minus)),
        pairs=tuple(pairs),
        split_vertices=tuple(split_vertices),
        cut_alpha=cut_alpha,
        cut_beta=cut_beta,
        remainder_count=completions,
    )


@dataclass(frozen=True)
class TiltingSummary:
    """Symbolic description of the tilting object realizing the derived
    equivalence attached to a triangular split."""

    plus_vertices: tuple[str, ...]
    minus_vertices: tuple[str, ...]
    # (expression, homological shift, grade shift) per summand
    summands: tuple[tuple[str, int, int], ...]
    graded_rule: str

    def render(self) -> str:
        if not self.minus_vertices:
            return f"e⁺Λ₂e⁺ with e⁺ = {{{', '.join(self.plus_vertices)}}}"
        return (
            "e⁺Λ₂e⁺ ⊕ D(e⁻Λ₂e⁻)[1] with "
            f"e⁺ = {{{', '.join(self.plus_vertices)}}}, "
            f"e⁻ = {{{', '.join(self.minus_vertices)}}}"
        )


def tilting_summary(split: TriangularSplit) -> TiltingSummary:
    if split.minus_vertices:
        summands = (("e⁺Λ₂e⁺", 0, 0), ("D(e⁻Λ₂e⁻)", 1, 0))
    else:
        summands = (("e⁺Λ₂e⁺", 0, 0),)
    return TiltingSummary(
        plus_vertices=split.plus_vertices,
        minus_vertices=split.minus_vertices,
        summands=summands,
        graded_rule="iterate: τ₂ⁿ T[2n](−n)",
    )
