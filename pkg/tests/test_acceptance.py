"""End-to-end acceptance tests: exact reproduction of the reference worked
examples plus randomized property suites with runtime budgets."""

import math
import random
import time

from brauer_kit import (
    BrauerGraphError,
    GradedBrauerGraph,
    Grading,
    cut_algebra,
    cut_of_arrows,
    dimension_of,
    enumerate_admissible_cuts,
    homogeneity,
    is_isomorphic,
    quiver_of,
    relations,
    shift_equivalence,
    tilting_summary,
    transformed_equivalence,
    triangular_split,
    trivext_bigrading,
    trivial_extension_graph,
)
from brauer_kit.fixtures import (
    FORK_QA,
    KAUER_SUBSET,
    LINE_QA,
    SQUARE_STAR_BG,
    TRIANGLE_BG,
    TRIPOD_BG,
)
from brauer_kit.formats import parse_bg, parse_qa
from brauer_kit.gentle import ag_invariant, check_gentle, dimension, global_dimension
from brauer_kit.mutation import grading_transport, maximal_sectors, subset_move

from oracles import (
    all_orderings_agree,
    count_basis_paths,
    random_cut,
    random_graded_graph,
    random_subset,
    resolution_global_dimension,
)


def square_star() -> GradedBrauerGraph:
    return parse_bg(SQUARE_STAR_BG)


def cut_grading_on_quiver(graph, cut):
    return {a.name: cut.degree(a.name) for a in quiver_of(graph).arrows}


# 1 ---------------------------------------------------------------------------


def test_criterion_1_reference_move_exact_and_fast():
    graded = square_star()
    start = time.perf_counter()
    moved = subset_move(graded, KAUER_SUBSET)
    elapsed = time.perf_counter() - start
    assert moved.graph.orientation == {
        "1+": "3-", "3-": "2-", "2-": "1+",
        "1-": "4-", "4-": "3+", "3+": "1-",
        "2+": "2+", "4+": "4+",
    }
    assert moved.grading.degrees == {
        "1+": (2,), "2-": (-1,), "2+": (1,), "4-": (1,), "4+": (1,),
        "1-": (0,), "3-": (0,), "3+": (0,),
    }
    assert elapsed < 0.001


# 2 ---------------------------------------------------------------------------


def test_criterion_2_order_independence_500_graphs():
    rng = random.Random(20260824)
    start = time.perf_counter()
    checked = 0
    while checked < 500:
        graded = random_graded_graph(rng, max_halfedges=16)
        subset = random_subset(rng, graded.graph)
        before = homogeneity(graded)
        sectors = maximal_sectors(graded.graph, subset).sectors
        try:
            moved = subset_move(graded, subset)
        except BrauerGraphError:
            continue  # rejected collision configurations carry no claim
        assert homogeneity(moved) == before
        assert all_orderings_agree(graded, sectors, sample=8, rng=rng)
        checked += 1
    assert time.perf_counter() - start < 30.0


# 3 ---------------------------------------------------------------------------


def test_criterion_3_transport_inverts_and_reproduces_delta():
    rng = random.Random(7)
    inverted = 0
    while inverted < 100:
        graded = random_graded_graph(rng, max_halfedges=12)
        subset = random_subset(rng, graded.graph)
        try:
            moved = subset_move(graded, subset)
        except BrauerGraphError:
            continue
        recovered = grading_transport(graded.graph, subset, moved.grading)
        assert recovered is not None
        assert recovered.degrees == graded.grading.degrees
        inverted += 1

    graded = square_star()
    moved = subset_move(graded, KAUER_SUBSET)
    target = Grading.from_ones(moved.graph, {"2+", "1+", "1-", "4+"})
    delta = grading_transport(graded.graph, KAUER_SUBSET, target)
    assert delta is not None
    assert delta.degrees == {
        "4-": (-1,), "2-": (1,), "3+": (1,), "1-": (1,), "2+": (1,), "4+": (1,),
        "3-": (0,), "1+": (0,),
    }


# 4 ---------------------------------------------------------------------------


def test_criterion_4_round_trip_over_all_cuts():
    rng = random.Random(42)
    start = time.perf_counter()
    instances = 0
    while instances < 300:
        graded = random_graded_graph(rng, max_halfedges=12, zero_grading=True)
        g = graded.graph
        for cut in enumerate_admissible_cuts(g):
            p = cut_algebra(g, cut)
            assert check_gentle(p) == []
            built, built_cut = trivial_extension_graph(p)
            assert is_isomorphic(built, g, built_cut, cut) is not None
            instances += 1
    assert time.perf_counter() - start < 60.0


# 5 ---------------------------------------------------------------------------


def test_criterion_5_shift_solver():
    tripod = parse_bg(TRIPOD_BG).graph
    fork_cut = cut_of_arrows(tripod, ["1+", "3+"])
    line_cut = cut_of_arrows(tripod, ["2+", "3+"])
    shift = shift_equivalence(
        quiver_of(tripod),
        cut_grading_on_quiver(tripod, fork_cut),
        cut_grading_on_quiver(tripod, line_cut),
    )
    assert shift == {"1": (0,), "2": (1,), "3": (1,)}

    star = square_star().graph
    cut1 = cut_of_arrows(star, ["2-", "2+"])
    cut2 = cut_of_arrows(star, ["1+", "1-"])
    shift = shift_equivalence(
        quiver_of(star),
        cut_grading_on_quiver(star, cut1),
        cut_grading_on_quiver(star, cut2),
    )
    assert shift == {"1": (1,), "2": (0,), "3": (0,), "4": (0,)}

    cut3 = cut_of_arrows(star, ["2-", "1+"])
    assert (
        shift_equivalence(
            quiver_of(star),
            cut_grading_on_quiver(star, cut1),
            cut_grading_on_quiver(star, cut3),
        )
        is None
    )


# 6 ---------------------------------------------------------------------------


def test_criterion_6_default_matrix_validates_bigradings():
    cases = [
        (square_star().graph, ["2-", "2+"], ["2-", "1+"]),
        (parse_bg(TRIANGLE_BG).graph, ["2+", "2-"], ["2+", "3-"]),
    ]
    for g, ones1, ones2 in cases:
        q = quiver_of(g)
        cut1 = cut_of_arrows(g, ones1)
        cut2 = cut_of_arrows(g, ones2)
        b1 = trivext_bigrading(g, cut1, cut2)
        b2 = trivext_bigrading(g, cut2, cut1)
        d1 = {a.name: b1.degree(a.name) for a in q.arrows}
        d2 = {a.name: b2.degree(a.name) for a in q.arrows}
        shift = transformed_equivalence(q, d1, d2)  # matrix [[1,1],[0,-1]]
        assert shift == {v: (0, 0) for v in q.vertices}


# 7 ---------------------------------------------------------------------------


def test_criterion_7_global_dimension():
    assert global_dimension(parse_qa(LINE_QA)).value == 2
    value, capped = resolution_global_dimension(parse_qa(LINE_QA), cap=12)
    assert (value, capped) == (2, False)

    triangle = parse_bg(TRIANGLE_BG).graph
    cycle_side = cut_algebra(triangle, cut_of_arrows(triangle, ["2+", "3-"]))
    assert global_dimension(cycle_side).value == 3
    value, capped = resolution_global_dimension(cycle_side, cap=12)
    assert (value, capped) == (3, False)

    rng = random.Random(99)
    checked = 0
    while checked < 200:
        graded = random_graded_graph(rng, max_halfedges=12, zero_grading=True)
        p = cut_algebra(graded.graph, random_cut(rng, graded.graph))
        if dimension(p) > 40:
            continue
        report = global_dimension(p)
        value, capped = resolution_global_dimension(p, cap=12)
        if report.value == math.inf:
            assert capped  # the oracle's cap report flags non-termination
            pairs = ag_invariant(p).pairs
            assert any(n == 0 and m > 0 for n, m in pairs)
        else:
            assert not capped
            assert value == report.value
        checked += 1


# 8 ---------------------------------------------------------------------------


def test_criterion_8_ag_consistency():
    # Pair one: two cuts of the square-star graph related by a vertex shift.
    star = square_star().graph
    first = cut_algebra(star, cut_of_arrows(star, ["2-", "2+"]))
    second = cut_algebra(star, cut_of_arrows(star, ["1+", "1-"]))
    assert ag_invariant(first) == ag_invariant(second)

    # Pair two: the cut before and after the reference subset move.
    graded = square_star()
    moved = subset_move(graded, KAUER_SUBSET)
    base = cut_algebra(graded.graph, graded.grading)
    after = cut_algebra(
        moved.graph, Grading.from_ones(moved.graph, {"1+", "2+", "3+", "4+"})
    )
    base_ag = ag_invariant(base)
    assert base_ag.pairs == ((2, 0), (2, 4))
    assert ag_invariant(after) == base_ag

    # Pair three: the two sides of the triangular split of the tripod graph.
    tripod = parse_bg(TRIPOD_BG).graph
    split = triangular_split(tripod, [("3+", "2-")], remainder_arrows=["2+"])
    assert ag_invariant(cut_algebra(tripod, split.cut_alpha)) == ag_invariant(
        cut_algebra(tripod, split.cut_beta)
    )

    # The doubly-graded pair: equivalent as graded algebras but with
    # different walk invariants.
    other = cut_algebra(
        moved.graph, Grading.from_ones(moved.graph, {"2+", "1+", "1-", "4+"})
    )
    other_ag = ag_invariant(other)
    assert other_ag.pairs == ((1, 1), (3, 3))
    assert other_ag != base_ag


# 9 ---------------------------------------------------------------------------


def test_criterion_9_presentation_and_dimension():
    g = square_star().graph
    q = quiver_of(g)
    assert q.vertices == ("1", "2", "3", "4")
    assert {(a.name, a.source, a.target) for a in q.arrows} == {
        ("1+", "1", "2"),
        ("2+", "2", "1"),
        ("1-", "1", "4"),
        ("4-", "4", "3"),
        ("3-", "3", "2"),
        ("2-", "2", "1"),
    }
    rels = relations(g)
    assert set(rels.compositions) == {
        ("1+", "2-"),
        ("2+", "1-"),
        ("2-", "1+"),
        ("3-", "2+"),
    }
    assert len(rels.commutations) == 2
    assert len(rels.overruns) == 6
    assert dimension_of(g) == 22
    # Path-enumeration oracle: the algebra splits as a cut algebra plus its
    # dual, so its dimension is twice any cut algebra's path count.
    for cut in enumerate_admissible_cuts(g):
        assert 2 * count_basis_paths(cut_algebra(g, cut)) == 22


# 10 --------------------------------------------------------------------------


def test_criterion_10_tilting_summary():
    tripod = parse_bg(TRIPOD_BG).graph
    split = triangular_split(tripod, [("3+", "2-")], remainder_arrows=["2+"])
    summary = tilting_summary(split)
    assert summary.plus_vertices == ("1", "2")
    assert summary.minus_vertices == ("3",)
    assert summary.render() == "e⁺Λ₂e⁺ ⊕ D(e⁻Λ₂e⁻)[1] with e⁺ = {1, 2}, e⁻ = {3}"
