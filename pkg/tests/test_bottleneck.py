import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schulze.ballots import parse_profile, random_profile
from schulze.bottleneck import (
    BottleneckMatrix,
    WIDTH_SENTINEL,
    apbp,
    schulze_ranking,
    ssbp,
    verify_winner,
    winners_from_bottlenecks,
)
from schulze.majority_graph import (
    ComparisonGraph,
    build_wmg_naive,
    random_comparison_graph,
    random_margin_graph,
)
from schulze.winners import smith_set

from oracles import widths_by_enumeration, winners_by_definition

P3_GRAPH = build_wmg_naive(
    parse_profile("candidates: a,b,c\na > b > c\nb > c > a\nc > a > b")
)
UNANIMOUS = build_wmg_naive(parse_profile("candidates: a,b,c\na > b > c x3"))


def off_diagonal(widths):
    m = widths.shape[0]
    return widths[~np.eye(m, dtype=bool)]


class TestApbp:
    def test_cycle_indirect_paths_beat_direct_edges(self):
        widths = apbp(P3_GRAPH).widths
        assert (off_diagonal(widths) == 1).all()
        assert np.array_equal(widths, widths_by_enumeration(P3_GRAPH.weight))

    def test_two_candidates(self):
        g = ComparisonGraph(("a", "b"), np.array([[0, 5], [-5, 0]]))
        widths = apbp(g).widths
        assert widths[0, 1] == 5 and widths[1, 0] == -5

    def test_unanimous_chain(self):
        widths = apbp(UNANIMOUS).widths
        assert widths[0, 1] == widths[0, 2] == widths[1, 2] == 3
        assert widths[1, 0] == widths[2, 0] == widths[2, 1] == -3
        assert np.array_equal(widths, widths_by_enumeration(UNANIMOUS.weight))

    @given(m=st.integers(1, 5), seed=st.integers(0, 10**6))
    @settings(max_examples=80)
    def test_matches_exhaustive_enumeration(self, m, seed):
        g = random_comparison_graph(m, -2, 2, seed)
        assert np.array_equal(apbp(g).widths, widths_by_enumeration(g.weight))

    def test_diagonal_is_sentinel(self):
        widths = apbp(P3_GRAPH).widths
        assert (np.diagonal(widths) == WIDTH_SENTINEL).all()


class TestSsbp:
    def test_matches_apbp_row_on_cycle(self):
        row = ssbp(P3_GRAPH, 0)
        assert row[1] == 1 and row[2] == 1

    def test_single_candidate_has_no_other_widths(self):
        g = ComparisonGraph(("a",), np.zeros((1, 1), int))
        row = ssbp(g, 0)
        assert (row == WIDTH_SENTINEL).all()

    def test_star_with_weak_returns(self):
        weight = np.array([[0, 3, 7], [-1, 0, -1], [-1, -1, 0]])
        g = ComparisonGraph(("a", "b", "c"), weight)
        row = ssbp(g, 0)
        assert row[1] == 3 and row[2] == 7
        assert np.array_equal(row[1:], widths_by_enumeration(weight)[0][1:])

    @given(m=st.integers(1, 12), seed=st.integers(0, 10**6))
    @settings(max_examples=80)
    def test_every_row_matches_apbp(self, m, seed):
        g = random_comparison_graph(m, -9, 9, seed)
        widths = apbp(g).widths
        for u in range(m):
            assert np.array_equal(ssbp(g, u), widths[u])

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_rows_match_apbp_at_m30(self, seed):
        g = random_margin_graph(30, 12, seed)
        widths = apbp(g).widths
        for u in range(30):
            assert np.array_equal(ssbp(g, u), widths[u])


class TestVerifyWinner:
    def test_everyone_wins_the_cycle(self):
        assert all(verify_winner(P3_GRAPH, v) for v in range(3))

    def test_condorcet_chain(self):
        assert verify_winner(UNANIMOUS, 0)
        assert not verify_winner(UNANIMOUS, 1)

    def test_single_candidate(self):
        g = ComparisonGraph(("a",), np.zeros((1, 1), int))
        assert verify_winner(g, 0)

    @given(m=st.integers(1, 8), seed=st.integers(0, 10**6))
    @settings(max_examples=60)
    def test_matches_definitional_winner_set(self, m, seed):
        g = random_comparison_graph(m, -4, 4, seed)
        winners = set(winners_by_definition(g.weight))
        for v in range(m):
            assert verify_winner(g, v) == (v in winners)


class TestWinnerSet:
    def test_cycle(self):
        assert winners_from_bottlenecks(apbp(P3_GRAPH)) == [0, 1, 2]

    def test_condorcet(self):
        assert winners_from_bottlenecks(apbp(UNANIMOUS)) == [0]

    def test_single(self):
        g = ComparisonGraph(("a",), np.zeros((1, 1), int))
        assert winners_from_bottlenecks(apbp(g)) == [0]

    def test_inconsistent_matrix_trips_assertion(self):
        bad = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=np.int64)
        np.fill_diagonal(bad, WIDTH_SENTINEL)
        with pytest.raises(AssertionError):
            winners_from_bottlenecks(BottleneckMatrix(bad))


class TestRanking:
    def test_unanimous_chain(self):
        assert schulze_ranking(apbp(UNANIMOUS)) == [[0], [1], [2]]

    def test_cycle_is_one_class(self):
        assert schulze_ranking(apbp(P3_GRAPH)) == [[0, 1, 2]]

    def test_two_candidates(self):
        g = ComparisonGraph(("a", "b"), np.array([[0, 2], [-2, 0]]))
        assert schulze_ranking(apbp(g)) == [[0], [1]]

    @given(m=st.integers(1, 9), seed=st.integers(0, 10**6))
    @settings(max_examples=80)
    def test_top_class_is_the_winner_set(self, m, seed):
        g = random_comparison_graph(m, -6, 6, seed)
        bm = apbp(g)
        assert schulze_ranking(bm)[0] == winners_from_bottlenecks(bm)

    @given(m=st.integers(1, 9), seed=st.integers(0, 10**6))
    @settings(max_examples=80)
    def test_classes_respect_the_strict_relation(self, m, seed):
        g = random_comparison_graph(m, -6, 6, seed)
        bm = apbp(g)
        strict = bm.widths > bm.widths.T
        level = {}
        for depth, group in enumerate(schulze_ranking(bm)):
            for v in group:
                level[v] = depth
            # no candidate in a class strictly beats a classmate
            assert not any(strict[u, v] for u in group for v in group)
        assert sorted(level) == list(range(m))
        for u in range(m):
            for v in range(m):
                if strict[u, v]:
                    assert level[u] < level[v]


@given(m=st.integers(1, 8), n=st.integers(1, 12), seed=st.integers(0, 10**6))
@settings(max_examples=80)
def test_condorcet_winner_is_a_winner(m, n, seed):
    g = build_wmg_naive(random_profile(m, n, 0.0, seed))
    winners = winners_from_bottlenecks(apbp(g))
    for u in range(m):
        others = [v for v in range(m) if v != u]
        if others and all(g.weight[u, v] > 0 for v in others):
            assert u in winners


@given(m=st.integers(1, 7), seed=st.integers(0, 10**6))
@settings(max_examples=60)
def test_winner_set_inside_smith_set(m, seed):
    g = random_margin_graph(m, 5, seed)
    winners = set(winners_from_bottlenecks(apbp(g)))
    assert winners <= set(smith_set(g))
