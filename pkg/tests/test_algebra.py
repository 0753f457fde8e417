import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brauer_kit import (
    BrauerGraphError,
    GradedBrauerGraph,
    Grading,
    cut_algebra,
    cut_of_arrows,
    dimension_of,
    enumerate_admissible_cuts,
    is_isomorphic,
    quiver_of,
    relations,
    trivext_bigrading,
    trivial_extension_graph,
)
from brauer_kit.algebra import basis_of, format_path, format_relations
from brauer_kit.fixtures import FORK_QA, LINE_QA, SQUARE_STAR_BG, TRIPOD_BG
from brauer_kit.formats import parse_bg, parse_qa
from brauer_kit.gentle import check_gentle, dimension, presentations_isomorphic

from oracles import count_basis_paths, random_cut, random_graded_graph


@pytest.fixture
def square_star():
    return parse_bg(SQUARE_STAR_BG)


def test_quiver(square_star):
    q = quiver_of(square_star.graph)
    assert q.vertices == ("1", "2", "3", "4")
    assert {(a.name, a.source, a.target) for a in q.arrows} == {
        ("1+", "1", "2"),
        ("2+", "2", "1"),
        ("1-", "1", "4"),
        ("4-", "4", "3"),
        ("3-", "3", "2"),
        ("2-", "2", "1"),
    }


def test_relations(square_star):
    rels = relations(square_star.graph)
    assert set(rels.compositions) == {
        ("1+", "2-"),
        ("2+", "1-"),
        ("2-", "1+"),
        ("3-", "2+"),
    }
    # One commutation per edge whose two ends both carry a cycle: edges 1, 2.
    assert len(rels.commutations) == 2
    # One overrun per special cycle: 2 + 4 starts.
    assert len(rels.overruns) == 6
    rendered = format_relations(rels)
    assert any("=" in line for line in rendered)
    assert format_path(("1+", "2-")) == "a(2-)*a(1+)"


def test_dimension(square_star):
    assert dimension_of(square_star.graph) == 22
    basis = basis_of(square_star.graph)
    assert len(basis) == 22
    assert len([b for b in basis if b[0] == "unit"]) == 4
    assert len([b for b in basis if b[0] == "socle"]) == 4


def test_dimension_matches_doubled_cut_algebra(square_star):
    g = square_star.graph
    for cut in enumerate_admissible_cuts(g):
        p = cut_algebra(g, cut)
        assert 2 * count_basis_paths(p) == dimension_of(g)


def test_cut_algebra_relations(square_star):
    g = square_star.graph
    p = cut_algebra(g, square_star.grading)  # d* is itself an admissible cut
    assert check_gentle(p) == []
    kept = {a.name for a in p.arrows}
    assert kept == {"1-", "2+", "3-", "4-"}
    for first, then in p.relations:
        assert first in kept and then in kept


def test_cut_algebra_requires_admissible(square_star):
    g = square_star.graph
    bad = Grading.from_ones(g, {"1+", "2+"})
    with pytest.raises(BrauerGraphError):
        cut_algebra(g, bad)
    with pytest.raises(BrauerGraphError):
        cut_of_arrows(g, ["1+", "2+"])  # two arrows at the same vertex


def test_cut_of_arrows_adds_forced_singletons(square_star):
    g = square_star.graph
    cut = cut_of_arrows(g, ["2-", "2+"])
    assert cut.ones() == frozenset({"2-", "2+", "3+", "4+"})


def test_trivext_bigrading(square_star):
    g = square_star.graph
    cut1 = cut_of_arrows(g, ["2-", "2+"])
    cut2 = cut_of_arrows(g, ["2-", "1+"])
    b = trivext_bigrading(g, cut1, cut2)
    assert b.rank == 2
    for h in g.halfedges:
        assert b.degree(h) == (
            cut1.degree(h)[0],
            cut2.degree(h)[0] - cut1.degree(h)[0],
        )
    with pytest.raises(BrauerGraphError):
        trivext_bigrading(g, cut1, Grading.from_ones(g, {"1+", "2+"}))


def test_trivial_extension_of_stored_presentations():
    tripod = parse_bg(TRIPOD_BG).graph
    graphs = []
    for text in (FORK_QA, LINE_QA):
        p = parse_qa(text)
        built, cut = trivial_extension_graph(p)
        # The graph presents the algebra again through its marked cut.
        again = cut_algebra(built, cut)
        assert presentations_isomorphic(again, p) is not None
        graphs.append(built)
    # The fork and the line share a trivial extension: the tripod graph.
    assert is_isomorphic(graphs[0], graphs[1]) is not None
    assert is_isomorphic(graphs[0], tripod) is not None


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**9))
def test_schroll_round_trip_random(seed):
    rng = random.Random(seed)
    graded = random_graded_graph(rng, max_halfedges=10, zero_grading=True)
    g = graded.graph
    cut = random_cut(rng, g)
    p = cut_algebra(g, cut)
    assert check_gentle(p) == []
    built, built_cut = trivial_extension_graph(p)
    assert is_isomorphic(built, g, built_cut, cut) is not None
