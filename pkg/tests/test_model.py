"""Core model: rankings, profiles, majority graphs, overlay."""

import pytest
from hypothesis import given, strategies as st

from schulze_wcm import (
    INT64_MAX,
    CandidateSet,
    CapacityError,
    MajorityGraph,
    ManipulationInstance,
    Mode,
    Ranking,
    WeightedBallot,
    WeightedProfile,
    build_majority_graph,
    overlay_identical_manipulators,
)

ABC = CandidateSet(("a", "b", "c"))


def ballot(order, weight):
    return WeightedBallot(Ranking.from_order(order), weight)


@st.composite
def profiles(draw, max_m=4, max_ballots=4, max_weight=4):
    m = draw(st.integers(1, max_m))
    labels = tuple("abcdefghij"[:m])
    count = draw(st.integers(0, max_ballots))
    ballots = tuple(
        WeightedBallot(
            Ranking(tuple(draw(st.permutations(tuple(range(1, m + 1)))))),
            draw(st.integers(1, max_weight)),
        )
        for _ in range(count)
    )
    return WeightedProfile(CandidateSet(labels), ballots)


@st.composite
def votes_for(draw, m):
    return Ranking(tuple(draw(st.permutations(tuple(range(1, m + 1))))))


# ---------------------------------------------------------------- rankings


def test_ranking_roundtrip():
    r = Ranking.from_order([2, 0, 1])
    assert r.ranks == (2, 1, 3)
    assert r.order() == (2, 0, 1)
    assert r.prefers(2, 0) and r.prefers(0, 1) and not r.prefers(1, 2)


def test_ranking_rejects_non_bijection():
    with pytest.raises(ValueError):
        Ranking((1, 1, 2))
    with pytest.raises(ValueError):
        Ranking((0, 1, 2))
    with pytest.raises(ValueError):
        Ranking.from_order([0, 0, 1])


def test_candidate_set_validation():
    with pytest.raises(ValueError):
        CandidateSet(())
    with pytest.raises(ValueError):
        CandidateSet(("a", "a"))
    with pytest.raises(ValueError):
        CandidateSet(("a", ""))
    assert ABC.index("b") == 1
    with pytest.raises(ValueError):
        ABC.index("z")


def test_ballot_and_profile_validation():
    with pytest.raises(ValueError):
        WeightedBallot(Ranking((1, 2)), 0)
    with pytest.raises(ValueError):
        WeightedProfile(ABC, (ballot([0, 1], 1),))  # wrong arity


def test_instance_validation():
    profile = WeightedProfile(ABC, (ballot([0, 1, 2], 1),))
    with pytest.raises(ValueError):
        ManipulationInstance(profile, (1,), 3)
    with pytest.raises(ValueError):
        ManipulationInstance(profile, (0,), 1)
    with pytest.raises(ValueError):
        ManipulationInstance(profile, (1,), 1, mode="unique")
    inst = ManipulationInstance(profile, (2, 1), 2)
    assert inst.coalition_weight == 3 and inst.mode is Mode.UNIQUE


def test_capacity_caps():
    two = CandidateSet(("a", "b"))
    big = WeightedBallot(Ranking((2, 1)), INT64_MAX)
    WeightedProfile(two, (big,))  # exactly at the cap is fine
    with pytest.raises(CapacityError):
        WeightedProfile(two, (big, WeightedBallot(Ranking((2, 1)), 1)))
    profile = WeightedProfile(two, (big,))
    with pytest.raises(CapacityError):
        ManipulationInstance(profile, (1,), 0)


# ---------------------------------------------------------- majority graph


def test_majority_graph_validation():
    with pytest.raises(ValueError):
        MajorityGraph(ABC, ((0, 1), (-1, 0)))
    with pytest.raises(ValueError):
        MajorityGraph(CandidateSet(("a", "b")), ((1, 0), (0, 0)))
    with pytest.raises(ValueError):
        MajorityGraph(CandidateSet(("a", "b")), ((0, 1), (1, 0)))


def test_build_majority_graph_single_ballot():
    profile = WeightedProfile(ABC, (ballot([0, 1, 2], 2),))
    graph = build_majority_graph(profile)
    assert graph.weights == ((0, 2, 2), (-2, 0, 2), (-2, -2, 0))


def test_build_majority_graph_cancellation():
    profile = WeightedProfile(
        ABC, (ballot([0, 1, 2], 1), ballot([2, 1, 0], 1))
    )
    graph = build_majority_graph(profile)
    assert graph.weights == ((0, 0, 0), (0, 0, 0), (0, 0, 0))


def test_build_majority_graph_empty_profile():
    graph = build_majority_graph(WeightedProfile(ABC, ()))
    assert graph.weights == ((0, 0, 0), (0, 0, 0), (0, 0, 0))


def test_overlay_matches_spelled_out_example():
    # Base: one ballot a > c of weight 1, coalition votes c > a with weight 2.
    two = CandidateSet(("a", "c"))
    base = build_majority_graph(WeightedProfile(two, (ballot([0, 1], 1),)))
    assert base.weights[0][1] == 1
    overlaid = overlay_identical_manipulators(base, Ranking.from_order([1, 0]), 2)
    assert overlaid.weights[1][0] == 1
    assert overlaid.weights[0][1] == -1


def test_overlay_rejects_bad_arguments():
    graph = build_majority_graph(WeightedProfile(ABC, ()))
    with pytest.raises(ValueError):
        overlay_identical_manipulators(graph, Ranking((1, 2)), 1)
    with pytest.raises(ValueError):
        overlay_identical_manipulators(graph, Ranking((1, 2, 3)), -1)


@given(profiles())
def test_graph_is_skew_symmetric_bounded_and_parity_correct(profile):
    graph = build_majority_graph(profile)
    m = len(profile.candidates)
    total = profile.total_weight
    for x in range(m):
        assert graph.weights[x][x] == 0
        for y in range(m):
            if x == y:
                continue
            assert graph.weights[x][y] == -graph.weights[y][x]
            assert abs(graph.weights[x][y]) <= total
            assert (graph.weights[x][y] - total) % 2 == 0


@given(profiles(), st.randoms(use_true_random=False))
def test_graph_ignores_ballot_order(profile, rng):
    shuffled = list(profile.ballots)
    rng.shuffle(shuffled)
    reordered = WeightedProfile(profile.candidates, tuple(shuffled))
    assert build_majority_graph(reordered) == build_majority_graph(profile)


@given(st.data())
def test_overlay_equals_appended_ballot(data):
    profile = data.draw(profiles())
    m = len(profile.candidates)
    vote = data.draw(votes_for(m))
    weight = data.draw(st.integers(1, 5))
    graph = build_majority_graph(profile)
    overlaid = overlay_identical_manipulators(graph, vote, weight)
    extended = WeightedProfile(
        profile.candidates, profile.ballots + (WeightedBallot(vote, weight),)
    )
    assert overlaid == build_majority_graph(extended)


@given(st.data())
def test_overlay_with_zero_weight_is_identity(data):
    profile = data.draw(profiles())
    vote = data.draw(votes_for(len(profile.candidates)))
    graph = build_majority_graph(profile)
    assert overlay_identical_manipulators(graph, vote, 0) == graph
