"""Candidates, rankings, weighted ballots, and pairwise majority graphs.

The majority graph stores, for every ordered candidate pair (x, y), the total
weight of the voters ranking x above y minus the total weight ranking y above
x. All arithmetic is exact integer arithmetic. Total voter weight is capped
so that every derived quantity stays inside the signed 64-bit range even
though Python integers themselves never overflow.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

INT64_MAX = 2**63 - 1


class CapacityError(ValueError):
    """Raised when weights would leave the exact signed 64-bit envelope."""


class InternalInvariantError(RuntimeError):
    """Raised when a condition the algorithms guarantee fails to hold.

    Seeing this exception always indicates a bug, never bad input.
    """


class Mode(enum.Enum):
    """Winner notion a manipulation aims for.

    UNIQUE asks for the target to become the sole winner, COWINNER only asks
    for membership in the winner set.
    """

    UNIQUE = "unique"
    COWINNER = "cowinner"


@dataclass(frozen=True)
class CandidateSet:
    """Ordered, pairwise distinct labels; list position is the canonical index."""

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if not self.labels:
            raise ValueError("candidate set must not be empty")
        for label in self.labels:
            if not label:
                raise ValueError("candidate labels must be non-empty strings")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("candidate labels must be pairwise distinct")

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValueError(f"unknown candidate label {label!r}") from None


@dataclass(frozen=True)
class Ranking:
    """Strict total order over m candidates, stored as rank positions.

    ranks[i] is the position of candidate i; positions are a bijection onto
    1..m and a larger position means more preferred, so the top candidate
    holds position m.
    """

    ranks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ranks", tuple(self.ranks))
        m = len(self.ranks)
        if sorted(self.ranks) != list(range(1, m + 1)):
            raise ValueError("ranks must be a bijection onto 1..m")

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Ranking":
        """Build a ranking from candidate indices listed most preferred first."""
        m = len(order)
        if sorted(order) != list(range(m)):
            raise ValueError("order must list every candidate index exactly once")
        ranks = [0] * m
        for position, candidate in enumerate(order):
            ranks[candidate] = m - position
        return cls(tuple(ranks))

    def order(self) -> tuple[int, ...]:
        """Candidate indices, most preferred first."""
        return tuple(sorted(range(len(self.ranks)), key=lambda i: -self.ranks[i]))

    def prefers(self, x: int, y: int) -> bool:
        """True when candidate x is ranked above candidate y."""
        return self.ranks[x] > self.ranks[y]

    def __len__(self) -> int:
        return len(self.ranks)


@dataclass(frozen=True)
class WeightedBallot:
    """One ranking cast with a positive integer weight."""

    ranking: Ranking
    weight: int

    def __post_init__(self) -> None:
        if self.weight < 1:
            raise ValueError("ballot weight must be >= 1")


@dataclass(frozen=True)
class WeightedProfile:
    """A candidate set plus the non-manipulators' weighted ballots."""

    candidates: CandidateSet
    ballots: tuple[WeightedBallot, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "ballots", tuple(self.ballots))
        m = len(self.candidates)
        for ballot in self.ballots:
            if len(ballot.ranking) != m:
                raise ValueError(
                    f"ballot ranks {len(ballot.ranking)} candidates, profile has {m}"
                )
        if self.total_weight > INT64_MAX:
            raise CapacityError("total ballot weight exceeds the signed 64-bit cap")

    @property
    def total_weight(self) -> int:
        return sum(ballot.weight for ballot in self.ballots)


@dataclass(frozen=True)
class ManipulationInstance:
    """A profile, the manipulators' weights, the target candidate, and the mode."""

    profile: WeightedProfile
    manipulator_weights: tuple[int, ...]
    target: int
    mode: Mode = Mode.UNIQUE

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "manipulator_weights", tuple(self.manipulator_weights)
        )
        if not 0 <= self.target < len(self.profile.candidates):
            raise ValueError(f"target index {self.target} out of range")
        for weight in self.manipulator_weights:
            if weight < 1:
                raise ValueError("manipulator weights must be >= 1")
        if not isinstance(self.mode, Mode):
            raise ValueError(f"mode must be a Mode, got {self.mode!r}")
        if self.profile.total_weight + self.coalition_weight > INT64_MAX:
            raise CapacityError("total election weight exceeds the signed 64-bit cap")

    @property
    def coalition_weight(self) -> int:
        return sum(self.manipulator_weights)


@dataclass(frozen=True)
class MajorityGraph:
    """Skew-symmetric integer pairwise weights on the complete digraph.

    Any skew-symmetric matrix is accepted, whether or not some profile
    realizes it; the diagonal must be zero.
    """

    candidates: CandidateSet
    weights: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.weights)
        object.__setattr__(self, "weights", rows)
        m = len(self.candidates)
        if len(rows) != m or any(len(row) != m for row in rows):
            raise ValueError(f"weight matrix must be {m}x{m}")
        for x in range(m):
            if rows[x][x] != 0:
                raise ValueError("diagonal weights must be zero")
            for y in range(x + 1, m):
                if rows[x][y] != -rows[y][x]:
                    raise ValueError("weight matrix must be skew-symmetric")
                if abs(rows[x][y]) > INT64_MAX:
                    raise CapacityError("pairwise weight exceeds the signed 64-bit cap")


def build_majority_graph(profile: WeightedProfile) -> MajorityGraph:
    """Accumulate the pairwise weight matrix of a profile.

    Entry (x, y) is the signed weight margin of voters preferring x to y;
    skew symmetry holds by construction.
    """
    m = len(profile.candidates)
    rows = [[0] * m for _ in range(m)]
    for ballot in profile.ballots:
        ranks = ballot.ranking.ranks
        weight = ballot.weight
        for x in range(m):
            rank_x = ranks[x]
            for y in range(x + 1, m):
                if rank_x > ranks[y]:
                    rows[x][y] += weight
                    rows[y][x] -= weight
                else:
                    rows[x][y] -= weight
                    rows[y][x] += weight
    # The profile cap makes 64-bit overflow impossible; keep the guard anyway.
    for x in range(m):
        for y in range(m):
            if abs(rows[x][y]) > INT64_MAX:
                raise CapacityError("pairwise accumulation left the 64-bit range")
    return MajorityGraph(profile.candidates, tuple(tuple(row) for row in rows))


def overlay_identical_manipulators(
    graph: MajorityGraph, vote: Ranking, coalition_weight: int
) -> MajorityGraph:
    """Add a coalition that casts one common ballot of the given total weight.

    Equivalent to rebuilding the majority graph after appending a single
    ballot (vote, coalition_weight); with weight zero the graph is unchanged.
    """
    m = len(graph.candidates)
    if len(vote) != m:
        raise ValueError(f"vote ranks {len(vote)} candidates, graph has {m}")
    if coalition_weight < 0:
        raise ValueError("coalition weight must be >= 0")
    rows = [list(row) for row in graph.weights]
    ranks = vote.ranks
    for x in range(m):
        rank_x = ranks[x]
        for y in range(x + 1, m):
            if rank_x > ranks[y]:
                rows[x][y] += coalition_weight
                rows[y][x] -= coalition_weight
            else:
                rows[x][y] -= coalition_weight
                rows[y][x] += coalition_weight
    return MajorityGraph(graph.candidates, tuple(tuple(row) for row in rows))
