"""Seeded random generators for cross-validation corpora and benchmarks."""

from __future__ import annotations

import random
import string

from .model import (
    CandidateSet,
    MajorityGraph,
    ManipulationInstance,
    Mode,
    Ranking,
    WeightedBallot,
    WeightedProfile,
)


def candidate_labels(m: int) -> tuple[str, ...]:
    """Single letters while they last, numbered labels beyond that."""
    if m <= 26:
        return tuple(string.ascii_lowercase[:m])
    return tuple(f"c{i:03d}" for i in range(m))


def random_ranking(rng: random.Random, m: int) -> Ranking:
    ranks = list(range(1, m + 1))
    rng.shuffle(ranks)
    return Ranking(tuple(ranks))


def random_profile(
    rng: random.Random,
    m: int,
    *,
    ballots: tuple[int, int] = (0, 3),
    ballot_weights: tuple[int, int] = (1, 3),
) -> WeightedProfile:
    candidates = CandidateSet(candidate_labels(m))
    count = rng.randint(*ballots)
    cast = tuple(
        WeightedBallot(random_ranking(rng, m), rng.randint(*ballot_weights))
        for _ in range(count)
    )
    return WeightedProfile(candidates, cast)


def random_instance(
    rng: random.Random,
    *,
    m_range: tuple[int, int] = (2, 4),
    ballots: tuple[int, int] = (0, 3),
    ballot_weights: tuple[int, int] = (1, 3),
    manipulators: tuple[int, int] = (1, 2),
    manipulator_weights: tuple[int, int] = (1, 3),
    mode: Mode = Mode.UNIQUE,
) -> ManipulationInstance:
    m = rng.randint(*m_range)
    profile = random_profile(rng, m, ballots=ballots, ballot_weights=ballot_weights)
    count = rng.randint(*manipulators)
    weights = tuple(rng.randint(*manipulator_weights) for _ in range(count))
    target = rng.randrange(m)
    return ManipulationInstance(profile, weights, target, mode)


def random_skew_graph(
    rng: random.Random, m: int, *, magnitude: int = 9, parity: int | None = None
) -> MajorityGraph:
    """Random skew-symmetric graph whose entries all share one parity.

    Profile-realizable graphs have every entry congruent to the total voter
    weight mod 2; drawing with a fixed parity keeps that texture without
    having to realize an actual profile.
    """
    if parity is None:
        parity = rng.randint(0, 1)
    allowed = [v for v in range(-magnitude, magnitude + 1) if v % 2 == parity]
    rows = [[0] * m for _ in range(m)]
    for x in range(m):
        for y in range(x + 1, m):
            value = rng.choice(allowed)
            rows[x][y] = value
            rows[y][x] = -value
    return MajorityGraph(
        CandidateSet(candidate_labels(m)), tuple(tuple(row) for row in rows)
    )
