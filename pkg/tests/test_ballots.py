import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schulze.ballots import (
    BallotParseError,
    PreferenceProfile,
    format_profile,
    groups_from_ranks,
    pairwise_tallies,
    parse_profile,
    random_profile,
    rank_encode,
)

from oracles import tallies_by_definition

P3_TEXT = "candidates: a,b,c\na > b > c\nb > c > a\nc > a > b\n"


def vote_of(profile, text):
    return parse_profile(f"candidates: {','.join(profile.candidates)}\n{text}\n").votes[0]


class TestParse:
    def test_single_strict_ballot(self):
        p = parse_profile("candidates: a,b,c\na > b > c")
        assert p.n == 1
        assert p.votes[0] == (frozenset({0}), frozenset({1}), frozenset({2}))

    def test_full_tie_ballot(self):
        p = parse_profile("candidates: a,b\na = b")
        assert p.votes == ((frozenset({0, 1}),),)

    def test_multiplicity_matches_explicit_lines(self):
        compact = parse_profile("candidates: a,b\na > b x3")
        explicit = parse_profile("candidates: a,b\na > b\na > b\na > b")
        assert compact.votes == explicit.votes
        assert compact.n == 3

    def test_comments_and_blanks_ignored(self):
        p = parse_profile("# header\n\ncandidates: a,b\n# note\na > b\n")
        assert p.n == 1

    @pytest.mark.parametrize(
        "text,line,fragment",
        [
            ("candidates: a,b\na > zz", 2, "unknown candidate"),
            ("candidates: a,b\na > b = a", 2, "repeated"),
            ("candidates: a,b,c\na > b", 2, "missing"),
            ("candidates: a,b\na > > b", 2, "malformed"),
            ("a > b", 1, "candidates"),
            ("candidates: a,b\na > b x0", 2, "multiplicity"),
            ("candidates: a,a\na > a", 1, "duplicate"),
            ("candidates: a,x9\na > x9", 1, "multiplicity suffix"),
            ("candidates: a,b", 1, "no votes"),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line, fragment):
        with pytest.raises(BallotParseError) as err:
            parse_profile(text)
        assert err.value.line_no == line
        assert fragment in str(err.value)


class TestRankEncode:
    def test_tie_in_middle(self):
        p = parse_profile("candidates: a,b,c,d\na > b = c > d")
        assert rank_encode(p)[0].tolist() == [0, 1, 1, 2]

    def test_full_tie(self):
        p = parse_profile("candidates: a,b,c\na = b = c")
        assert rank_encode(p)[0].tolist() == [0, 0, 0]

    def test_two_voter_profile(self):
        p = parse_profile("candidates: a,b,c\na > b > c\nc > a > b")
        assert rank_encode(p).tolist() == [[0, 1, 2], [1, 2, 0]]


class TestTallies:
    def test_cyclic_profile(self):
        counts = pairwise_tallies(parse_profile(P3_TEXT))
        assert counts[0, 1] == 2 and counts[1, 0] == 1
        assert counts[1, 2] == 2 and counts[2, 0] == 2

    def test_unanimous(self):
        counts = pairwise_tallies(parse_profile("candidates: a,b\na > b x5"))
        assert counts[0, 1] == 5 and counts[1, 0] == 0

    def test_tie_contributes_nothing(self):
        counts = pairwise_tallies(parse_profile("candidates: a,b\na = b"))
        assert counts[0, 1] == 0 and counts[1, 0] == 0


@st.composite
def profiles(draw, max_m=8, max_n=12):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    tie = draw(st.sampled_from([0.0, 0.3, 0.7]))
    seed = draw(st.integers(0, 10**6))
    return random_profile(m, n, tie, seed)


@given(profiles())
@settings(max_examples=150)
def test_tallies_match_definitional_count(profile):
    assert np.array_equal(pairwise_tallies(profile), tallies_by_definition(profile))


def test_tallies_definitional_sweep():
    rng = np.random.default_rng(17)
    for trial in range(500):
        m = int(rng.integers(1, 9))
        n = int(rng.integers(1, 13))
        tie = (0.0, 0.3, 0.6)[trial % 3]
        profile = random_profile(m, n, tie, seed=trial)
        assert np.array_equal(pairwise_tallies(profile), tallies_by_definition(profile))


@given(profiles())
@settings(max_examples=100)
def test_wins_losses_and_ties_partition_voters(profile):
    counts = pairwise_tallies(profile)
    ranks = rank_encode(profile)
    for u in range(profile.m):
        for v in range(u + 1, profile.m):
            ties = int((ranks[:, u] == ranks[:, v]).sum())
            assert counts[u, v] + counts[v, u] + ties == profile.n


@given(profiles())
@settings(max_examples=100)
def test_rank_round_trip_rebuilds_votes(profile):
    ranks = rank_encode(profile)
    for row, vote in zip(ranks, profile.votes):
        assert groups_from_ranks(row) == vote


@given(profiles())
@settings(max_examples=100)
def test_format_parse_round_trip(profile):
    again = parse_profile(format_profile(profile))
    assert again.candidates == profile.candidates
    assert again.votes == profile.votes


class TestRandomProfile:
    def test_single_candidate(self):
        p = random_profile(1, 5, 0.5, seed=3)
        assert p.votes == ((frozenset({0}),),) * 5

    def test_deterministic_for_fixed_seed(self):
        assert random_profile(4, 10, 0.0, seed=7) == random_profile(4, 10, 0.0, seed=7)

    def test_zero_tie_probability_gives_strict_votes(self):
        p = random_profile(4, 10, 0.0, seed=11)
        assert all(len(vote) == 4 for vote in p.votes)

    def test_rejects_empty_dimensions(self):
        with pytest.raises(ValueError):
            random_profile(0, 3, 0.0, seed=0)
        with pytest.raises(ValueError):
            random_profile(3, 0, 0.0, seed=0)


class TestProfileInvariants:
    def test_vote_must_partition_candidates(self):
        with pytest.raises(ValueError):
            PreferenceProfile(("a", "b"), ((frozenset({0}),),))

    def test_candidates_unique(self):
        with pytest.raises(ValueError):
            PreferenceProfile(("a", "a"), ((frozenset({0, 1}),),))
