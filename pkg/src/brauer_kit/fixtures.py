"""Named worked examples, runnable as self-checks from the CLI.

Each example bundles input files (.bg graphs / .qa presentations) with the
values the library must reproduce on them.  ``check()`` returns a list of
failure messages; an empty list means the example verifies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import algebra, equivalence, gentle, graph, mutation
from .formats import parse_bg, parse_qa

SQUARE_STAR_BG = """\
halfedges = ["1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"]
pairing = [["1+", "1-"], ["2+", "2-"], ["3+", "3-"], ["4+", "4-"]]
orientation = [["1+", "2+"], ["1-", "4-", "3-", "2-"]]

[grading]
rank = 1

[grading.d]
"1+" = [1]
"2-" = [1]
"3+" = [1]
"4+" = [1]
"""

TRIPOD_BG = """\
halfedges = ["1+", "1-", "2+", "2-", "3+", "3-"]
pairing = [["1+", "1-"], ["2+", "2-"], ["3+", "3-"]]
orientation = [["1+", "2+"], ["2-", "3+"]]
"""

TRIANGLE_BG = """\
halfedges = ["1+", "1-", "2+", "2-", "3+", "3-"]
pairing = [["1+", "1-"], ["2+", "2-"], ["3+", "3-"]]
orientation = [["1+", "2+", "3+"], ["2-", "3-"]]
"""

FORK_QA = """\
vertices = ["1", "2", "3"]
arrows = [
    {id = "a1", source = "2", target = "1"},
    {id = "a2", source = "2", target = "3"},
]
relations = []
"""

LINE_QA = """\
vertices = ["1", "2", "3"]
arrows = [
    {id = "b1", source = "1", target = "2"},
    {id = "b2", source = "2", target = "3"},
]
relations = [["b2", "b1"]]
"""

KAUER_SUBSET = ("1+", "1-", "4+", "4-")


@dataclass(frozen=True)
class Example:
    name: str
    description: str
    files: dict[str, str]
    check: Callable[[], list[str]]


def _expect(failures: list[str], actual, expected, label: str) -> None:
    if actual != expected:
        failures.append(f"{label}: expected {expected!r}, got {actual!r}")


def _square_star() -> graph.GradedBrauerGraph:
    return parse_bg(SQUARE_STAR_BG)


def _check_square_star() -> list[str]:
    failures: list[str] = []
    graded = _square_star()
    g = graded.graph
    _expect(failures, graph.homogeneity(graded), (1,), "homogeneity")
    _expect(failures, graph.is_admissible_cut(graded), True, "admissible cut")
    _expect(failures, len(graph.enumerate_admissible_cuts(g)), 8, "number of cuts")
    q = algebra.quiver_of(g)
    _expect(
        failures,
        {(a.name, a.source, a.target) for a in q.arrows},
        {
            ("1+", "1", "2"),
            ("2+", "2", "1"),
            ("1-", "1", "4"),
            ("4-", "4", "3"),
            ("3-", "3", "2"),
            ("2-", "2", "1"),
        },
        "quiver arrows",
    )
    rels = algebra.relations(g)
    _expect(
        failures,
        set(rels.compositions),
        {("1+", "2-"), ("2+", "1-"), ("2-", "1+"), ("3-", "2+")},
        "zero composites",
    )
    _expect(failures, len(rels.commutations), 2, "commutation relations")
    _expect(failures, len(rels.overruns), 6, "overrun relations")
    _expect(failures, algebra.dimension_of(g), 22, "dimension")
    invariants = graph.surface_invariants(g)
    _expect(failures, invariants.vertex_count, 4, "vertices")
    _expect(failures, invariants.edge_count, 4, "edges")
    return failures


def _check_kauer_move() -> list[str]:
    failures: list[str] = []
    graded = _square_star()
    decomposition = mutation.maximal_sectors(graded.graph, KAUER_SUBSET)
    _expect(
        failures,
        decomposition.sectors,
        (mutation.Sector("1+", 0), mutation.Sector("1-", 1)),
        "maximal sectors",
    )
    _expect(failures, decomposition.saturated, (("4+",),), "saturated orbits")
    moved = mutation.subset_move(graded, KAUER_SUBSET)
    expected_orientation = {
        "1+": "3-", "3-": "2-", "2-": "1+",
        "1-": "4-", "4-": "3+", "3+": "1-",
        "2+": "2+", "4+": "4+",
    }
    _expect(failures, dict(moved.graph.orientation), expected_orientation, "moved orientation")
    expected_degrees = {
        "1+": (2,), "2-": (-1,), "2+": (1,), "4-": (1,), "4+": (1,),
        "1-": (0,), "3-": (0,), "3+": (0,),
    }
    _expect(failures, dict(moved.grading.degrees), expected_degrees, "moved degrees")
    report = mutation.sector_degrees(graded, KAUER_SUBSET)
    _expect(
        failures,
        report.degrees,
        {"1+": (1,), "1-": (0,), "4-": (0,)},
        "sector degrees",
    )
    return failures


def _moved_square_star() -> graph.GradedBrauerGraph:
    return mutation.subset_move(_square_star(), KAUER_SUBSET)


def _check_transport() -> list[str]:
    failures: list[str] = []
    graded = _square_star()
    moved = _moved_square_star()
    target = graph.Grading.from_ones(moved.graph, {"2+", "1+", "1-", "4+"})
    transported = mutation.grading_transport(graded.graph, KAUER_SUBSET, target)
    if transported is None:
        failures.append("transport: no preimage found")
        return failures
    expected = {
        "4-": (-1,), "2-": (1,), "3+": (1,), "1-": (1,), "2+": (1,), "4+": (1,),
        "3-": (0,), "1+": (0,),
    }
    _expect(failures, dict(transported.degrees), expected, "transported grading")
    return failures


def _square_star_cut_pair():
    graded = _square_star()
    g = graded.graph
    cut1 = algebra.cut_of_arrows(g, ["2-", "2+"])
    cut2 = algebra.cut_of_arrows(g, ["1+", "1-"])
    return g, cut1, cut2


def _check_cut_shift() -> list[str]:
    failures: list[str] = []
    g, cut1, cut2 = _square_star_cut_pair()
    q = algebra.quiver_of(g)
    d1 = {a.name: cut1.degree(a.name) for a in q.arrows}
    d2 = {a.name: cut2.degree(a.name) for a in q.arrows}
    shift = equivalence.shift_equivalence(q, d1, d2)
    _expect(failures, shift, {"1": (1,), "2": (0,), "3": (0,), "4": (0,)}, "vertex shift")
    first = algebra.cut_algebra(g, cut1)
    second = algebra.cut_algebra(g, cut2)
    _expect(failures, gentle.check_gentle(first), [], "first algebra gentle")
    _expect(failures, gentle.check_gentle(second), [], "second algebra gentle")
    _expect(
        failures,
        gentle.ag_invariant(first) == gentle.ag_invariant(second),
        True,
        "equal walk invariants",
    )
    return failures


def _check_cut_bigrading() -> list[str]:
    failures: list[str] = []
    graded = _square_star()
    g = graded.graph
    cut1 = algebra.cut_of_arrows(g, ["2-", "2+"])
    cut2 = algebra.cut_of_arrows(g, ["2-", "1+"])
    q = algebra.quiver_of(g)
    d1 = {a.name: cut1.degree(a.name) for a in q.arrows}
    d2 = {a.name: cut2.degree(a.name) for a in q.arrows}
    _expect(failures, equivalence.shift_equivalence(q, d1, d2), None, "no plain shift")
    b1 = algebra.trivext_bigrading(g, cut1, cut2)
    b2 = algebra.trivext_bigrading(g, cut2, cut1)
    expected_b1 = {
        "1+": (0, 1), "1-": (0, 0), "2+": (1, -1), "2-": (1, 0),
        "3-": (0, 0), "4-": (0, 0),
    }
    arrows1 = {a.name: b1.degree(a.name) for a in q.arrows}
    _expect(failures, arrows1, expected_b1, "first bigrading")
    expected_b2 = {
        "1+": (1, -1), "1-": (0, 0), "2+": (0, 1), "2-": (1, 0),
        "3-": (0, 0), "4-": (0, 0),
    }
    arrows2 = {a.name: b2.degree(a.name) for a in q.arrows}
    _expect(failures, arrows2, expected_b2, "second bigrading")
    shift = equivalence.transformed_equivalence(q, arrows1, arrows2)
    _expect(
        failures,
        shift,
        {v: (0, 0) for v in q.vertices},
        "transformed shift",
    )
    return failures


def _check_tripod_shift() -> list[str]:
    failures: list[str] = []
    graded = parse_bg(TRIPOD_BG)
    g = graded.graph
    fork = parse_qa(FORK_QA)
    line = parse_qa(LINE_QA)
    cut_fork = algebra.cut_of_arrows(g, ["1+", "3+"])
    cut_line = algebra.cut_of_arrows(g, ["2+", "3+"])
    for name, cut, presentation in (("fork", cut_fork, fork), ("line", cut_line, line)):
        built = algebra.cut_algebra(g, cut)
        if gentle.presentations_isomorphic(built, presentation) is None:
            failures.append(f"{name}: cut algebra does not match the stored presentation")
    q = algebra.quiver_of(g)
    d1 = {a.name: cut_fork.degree(a.name) for a in q.arrows}
    d2 = {a.name: cut_line.degree(a.name) for a in q.arrows}
    shift = equivalence.shift_equivalence(q, d1, d2)
    _expect(failures, shift, {"1": (0,), "2": (1,), "3": (1,)}, "vertex shift")
    _expect(failures, gentle.global_dimension(parse_qa(LINE_QA)).value, 2, "line global dimension")
    return failures


def _check_triangle_bigrading() -> list[str]:
    failures: list[str] = []
    graded = parse_bg(TRIANGLE_BG)
    g = graded.graph
    cut1 = algebra.cut_of_arrows(g, ["2+", "2-"])  # hereditary side
    cut2 = algebra.cut_of_arrows(g, ["2+", "3-"])  # oriented-cycle side
    first = algebra.cut_algebra(g, cut1)
    second = algebra.cut_algebra(g, cut2)
    _expect(failures, first.relations, (), "hereditary side has no relations")
    _expect(failures, gentle.global_dimension(first).value, 1, "hereditary global dimension")
    _expect(failures, gentle.global_dimension(second).value, 3, "cycle-side global dimension")
    q = algebra.quiver_of(g)
    b1 = algebra.trivext_bigrading(g, cut1, cut2)
    b2 = algebra.trivext_bigrading(g, cut2, cut1)
    arrows1 = {a.name: b1.degree(a.name) for a in q.arrows}
    arrows2 = {a.name: b2.degree(a.name) for a in q.arrows}
    expected_b1 = {
        "1+": (0, 0), "3+": (0, 0), "3-": (0, 1), "2+": (1, 0), "2-": (1, -1),
    }
    expected_b2 = {
        "1+": (0, 0), "3+": (0, 0), "3-": (1, -1), "2+": (1, 0), "2-": (0, 1),
    }
    _expect(failures, arrows1, expected_b1, "first bigrading")
    _expect(failures, arrows2, expected_b2, "second bigrading")
    shift = equivalence.transformed_equivalence(q, arrows1, arrows2)
    _expect(failures, shift, {v: (0, 0) for v in q.vertices}, "transformed shift")
    return failures


def _check_triangular_split() -> list[str]:
    failures: list[str] = []
    graded = parse_bg(TRIPOD_BG)
    g = graded.graph
    split = equivalence.triangular_split(g, [("3+", "2-")], remainder_arrows=["2+"])
    _expect(failures, split.plus_vertices, ("1", "2"), "plus part")
    _expect(failures, split.minus_vertices, ("3",), "minus part")
    line = algebra.cut_algebra(g, split.cut_alpha)
    vee = algebra.cut_algebra(g, split.cut_beta)
    _expect(
        failures,
        {(a.source, a.target) for a in line.arrows},
        {("1", "2"), ("2", "3")},
        "alpha-side arrows",
    )
    _expect(failures, line.relations, (("1+", "2-"),), "alpha-side relation")
    _expect(
        failures,
        {(a.source, a.target) for a in vee.arrows},
        {("1", "2"), ("3", "2")},
        "beta-side arrows",
    )
    _expect(failures, vee.relations, (), "beta-side relations")
    summary = equivalence.tilting_summary(split)
    _expect(
        failures,
        summary.render(),
        "e⁺Λ₂e⁺ ⊕ D(e⁻Λ₂e⁻)[1] with e⁺ = {1, 2}, e⁻ = {3}",
        "tilting summary",
    )
    return failures


def _check_double_grading() -> list[str]:
    failures: list[str] = []
    graded = _square_star()
    moved = _moved_square_star()
    base = algebra.cut_algebra(graded.graph, graded.grading)
    equal_side = algebra.cut_algebra(
        moved.graph, graph.Grading.from_ones(moved.graph, {"1+", "2+", "3+", "4+"})
    )
    unequal_side = algebra.cut_algebra(
        moved.graph, graph.Grading.from_ones(moved.graph, {"2+", "1+", "1-", "4+"})
    )
    base_ag = gentle.ag_invariant(base)
    _expect(failures, base_ag.pairs, ((2, 0), (2, 4)), "pinned base invariant")
    _expect(failures, gentle.ag_invariant(equal_side), base_ag, "move preserves invariant")
    unequal_ag = gentle.ag_invariant(unequal_side)
    _expect(failures, unequal_ag.pairs, ((1, 1), (3, 3)), "pinned second invariant")
    if unequal_ag == base_ag:
        failures.append("double grading: invariants unexpectedly equal")
    return failures


EXAMPLES: dict[str, Example] = {
    example.name: example
    for example in (
        Example(
            "square-star",
            "Four-edge graph with two univalent vertices: quiver, relations, cuts, dimension 22.",
            {"square-star.bg": SQUARE_STAR_BG},
            _check_square_star,
        ),
        Example(
            "kauer-move",
            "Subset move of {1+,1-,4+,4-} on the square-star graph: sectors, new orientation and degrees.",
            {"square-star.bg": SQUARE_STAR_BG},
            _check_kauer_move,
        ),
        Example(
            "grading-transport",
            "Inverting the move's grading action: the unique preimage of a cut on the moved graph.",
            {"square-star.bg": SQUARE_STAR_BG},
            _check_transport,
        ),
        Example(
            "cut-shift",
            "Two cuts of the square-star graph related by a vertex shift (1,0,0,0).",
            {"square-star.bg": SQUARE_STAR_BG},
            _check_cut_shift,
        ),
        Example(
            "cut-bigrading",
            "Two cuts with no plain shift but matching bigradings under the default unimodular transform.",
            {"square-star.bg": SQUARE_STAR_BG},
            _check_cut_bigrading,
        ),
        Example(
            "tripod-shift",
            "Path graph 1-2-3: the fork and line algebras share a trivial extension; shift (0,1,1).",
            {"tripod.bg": TRIPOD_BG, "fork.qa": FORK_QA, "line.qa": LINE_QA},
            _check_tripod_shift,
        ),
        Example(
            "triangle-bigrading",
            "Three-edge graph whose cuts give a hereditary algebra and a relation 3-cycle of global dimension 3.",
            {"triangle.bg": TRIANGLE_BG},
            _check_triangle_bigrading,
        ),
        Example(
            "triangular-split",
            "Deleting one arrow pair splits the tripod quiver; symbolic one-point tilting summary.",
            {"tripod.bg": TRIPOD_BG},
            _check_triangular_split,
        ),
        Example(
            "double-grading",
            "Two cuts joined by a move are graded derived equivalent but have different walk invariants.",
            {"square-star.bg": SQUARE_STAR_BG},
            _check_double_grading,
        ),
    )
}
