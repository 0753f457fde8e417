import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauer_kit import (
    BrauerGraphError,
    cut_of_arrows,
    quiver_of,
    shift_equivalence,
    tilting_summary,
    transformed_equivalence,
    triangular_split,
    trivext_bigrading,
)
from brauer_kit.equivalence import DEFAULT_MATRIX
from brauer_kit.fixtures import SQUARE_STAR_BG, TRIPOD_BG
from brauer_kit.formats import parse_bg

from oracles import random_cut, random_graded_graph


@pytest.fixture
def square_star():
    return parse_bg(SQUARE_STAR_BG)


@pytest.fixture
def tripod():
    return parse_bg(TRIPOD_BG)


def cut_arrow_grading(graph, cut):
    return {a.name: cut.degree(a.name) for a in quiver_of(graph).arrows}


def test_shift_pinned_bga_pair(square_star):
    g = square_star.graph
    cut1 = cut_of_arrows(g, ["2-", "2+"])
    cut2 = cut_of_arrows(g, ["1+", "1-"])
    shift = shift_equivalence(quiver_of(g), cut_arrow_grading(g, cut1), cut_arrow_grading(g, cut2))
    assert shift == {"1": (1,), "2": (0,), "3": (0,), "4": (0,)}


def test_shift_pinned_tripod_pair(tripod):
    g = tripod.graph
    cut1 = cut_of_arrows(g, ["1+", "3+"])  # fork side
    cut2 = cut_of_arrows(g, ["2+", "3+"])  # line side
    shift = shift_equivalence(quiver_of(g), cut_arrow_grading(g, cut1), cut_arrow_grading(g, cut2))
    assert shift == {"1": (0,), "2": (1,), "3": (1,)}


def test_shift_absent(square_star):
    g = square_star.graph
    cut1 = cut_of_arrows(g, ["2-", "2+"])
    cut2 = cut_of_arrows(g, ["2-", "1+"])
    assert shift_equivalence(quiver_of(g), cut_arrow_grading(g, cut1), cut_arrow_grading(g, cut2)) is None


def test_shift_rejects_mismatched_domain(square_star):
    g = square_star.graph
    q = quiver_of(g)
    cut = cut_of_arrows(g, ["2-", "2+"])
    d = cut_arrow_grading(g, cut)
    with pytest.raises(BrauerGraphError):
        shift_equivalence(q, d, {"1+": (0,)})


def test_shift_is_symmetric_and_transitive(square_star):
    g = square_star.graph
    q = quiver_of(g)
    cuts = [
        cut_of_arrows(g, ["2-", "2+"]),
        cut_of_arrows(g, ["1+", "1-"]),
        cut_of_arrows(g, ["1-", "2+"]),
    ]
    gradings = [cut_arrow_grading(g, c) for c in cuts]
    exists = [
        [shift_equivalence(q, a, b) is not None for b in gradings] for a in gradings
    ]
    for i in range(3):
        assert exists[i][i]
        for j in range(3):
            assert exists[i][j] == exists[j][i]
            for k in range(3):
                if exists[i][j] and exists[j][k]:
                    assert exists[i][k]


def test_transform_default_matrix(square_star):
    g = square_star.graph
    q = quiver_of(g)
    cut1 = cut_of_arrows(g, ["2-", "2+"])
    cut2 = cut_of_arrows(g, ["2-", "1+"])
    b1 = trivext_bigrading(g, cut1, cut2)
    b2 = trivext_bigrading(g, cut2, cut1)
    d1 = {a.name: b1.degree(a.name) for a in q.arrows}
    d2 = {a.name: b2.degree(a.name) for a in q.arrows}
    shift = transformed_equivalence(q, d1, d2)
    assert shift == {v: (0, 0) for v in q.vertices}


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_default_matrix_always_relates_bigrading_pair(seed):
    # For any two cuts, M.(first bigrading) equals the swapped bigrading
    # identically, so the transformed shift exists and is zero.
    rng = random.Random(seed)
    graded = random_graded_graph(rng, max_halfedges=10, zero_grading=True)
    g = graded.graph
    q = quiver_of(g)
    cut1, cut2 = random_cut(rng, g), random_cut(rng, g)
    b1 = trivext_bigrading(g, cut1, cut2)
    b2 = trivext_bigrading(g, cut2, cut1)
    d1 = {a.name: b1.degree(a.name) for a in q.arrows}
    d2 = {a.name: b2.degree(a.name) for a in q.arrows}
    shift = transformed_equivalence(q, d1, d2)
    assert shift is not None
    assert all(all(x == 0 for x in v) for v in shift.values())


def test_transform_rejects_bad_matrix(square_star):
    g = square_star.graph
    q = quiver_of(g)
    cut1 = cut_of_arrows(g, ["2-", "2+"])
    cut2 = cut_of_arrows(g, ["2-", "1+"])
    b1 = trivext_bigrading(g, cut1, cut2)
    d = {a.name: b1.degree(a.name) for a in q.arrows}
    with pytest.raises(BrauerGraphError):
        transformed_equivalence(q, d, d, ((2, 0), (0, 2)))  # det 4
    with pytest.raises(BrauerGraphError):
        transformed_equivalence(q, d, d, ((1, 0, 0), (0, 1, 0)))
    single = {a.name: (0,) for a in q.arrows}
    with pytest.raises(BrauerGraphError):
        transformed_equivalence(q, single, single, DEFAULT_MATRIX)


def test_triangular_split_reference(tripod):
    g = tripod.graph
    split = triangular_split(g, [("3+", "2-")], remainder_arrows=["2+"])
    assert split.plus_vertices == ("1", "2")
    assert split.minus_vertices == ("3",)
    # rest {2+} plus the alpha/beta arrow, plus forced univalent 1-, 3-.
    assert split.cut_alpha.ones() == frozenset({"2+", "3+", "1-", "3-"})
    assert split.cut_beta.ones() == frozenset({"2+", "2-", "1-", "3-"})
    # The count reports how many admissible completions exist, whether or
    # not the caller picked one.
    assert split.remainder_count == 2


def test_triangular_split_default_remainder(tripod):
    g = tripod.graph
    split = triangular_split(g, [("3+", "2-")])
    # The untouched vertex (1+ 2+) has two completions; the lexicographically
    # first (1+) is chosen.
    assert split.remainder_count == 2
    assert "1+" in split.cut_alpha.ones()


def test_triangular_split_errors(tripod, square_star):
    g = tripod.graph
    with pytest.raises(BrauerGraphError):
        triangular_split(g, [("3+", "3+")])  # not two distinct arrows
    with pytest.raises(BrauerGraphError):
        triangular_split(g, [("3+", "1+")])  # not at the same vertex
    # Swapping alpha and beta swaps the two sides, it does not fail.
    swapped = triangular_split(g, [("2-", "3+")])
    assert swapped.plus_vertices == ("3",)
    assert swapped.minus_vertices == ("1", "2")
    with pytest.raises(BrauerGraphError):
        # Deleting this pair does not disconnect the square-star quiver
        # into exactly two components.
        triangular_split(square_star.graph, [("1-", "2-")])


def test_tilting_summary_render(tripod):
    split = triangular_split(tripod.graph, [("3+", "2-")], remainder_arrows=["2+"])
    summary = tilting_summary(split)
    assert summary.render() == "e⁺Λ₂e⁺ ⊕ D(e⁻Λ₂e⁻)[1] with e⁺ = {1, 2}, e⁻ = {3}"
    assert summary.summands == (("e⁺Λ₂e⁺", 0, 0), ("D(e⁻Λ₂e⁻)", 1, 0))
    assert "τ₂" in summary.graded_rule
