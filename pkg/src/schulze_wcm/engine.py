"""Bottleneck path strengths and Schulze winner determination.

The strength of a path is the smallest edge weight along it. The strength
between two candidates is the best bottleneck over all directed paths from
one to the other in the complete pairwise graph. A candidate wins when no
rival reaches it with strictly more strength than it reaches the rival.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .model import CandidateSet, InternalInvariantError, MajorityGraph


def widest_path_strengths(weights: Sequence[Sequence[int]]) -> list[list[int]]:
    """All-pairs max-min path strengths over a complete digraph.

    Accepts any square integer matrix, no symmetry assumed. Entry (x, y) of
    the result is the largest, over all (x, y) paths of length >= 1, of the
    smallest edge weight on the path. Diagonal entries of both the input and
    the output carry no meaning and must not be read.

    The classic triple loop runs in O(m^3); relaxing through a vertex k can
    only reuse already-final rows, so one pass suffices.
    """
    m = len(weights)
    strengths = [list(row) for row in weights]
    for k in range(m):
        row_k = strengths[k]
        for i in range(m):
            if i == k:
                continue
            row_i = strengths[i]
            cap = row_i[k]
            for j in range(m):
                v = row_k[j]
                if cap < v:
                    v = cap
                if v > row_i[j]:
                    row_i[j] = v
    return strengths


@dataclass(frozen=True)
class StrengthMatrix:
    """Pairwise path strengths for a candidate set (diagonal unused)."""

    candidates: CandidateSet
    strength: tuple[tuple[int, ...], ...]


def path_strength_matrix(graph: MajorityGraph) -> StrengthMatrix:
    """Compute the full strength matrix of a majority graph."""
    rows = widest_path_strengths(graph.weights)
    return StrengthMatrix(graph.candidates, tuple(tuple(row) for row in rows))


def schulze_winners(graph: MajorityGraph) -> tuple[int, ...]:
    """Indices of all Schulze winners, in ascending index order.

    Candidate x wins when strength(x, y) >= strength(y, x) for every rival y.
    The winner set is never empty.
    """
    m = len(graph.candidates)
    strengths = widest_path_strengths(graph.weights)
    winners = tuple(
        x
        for x in range(m)
        if all(strengths[x][y] >= strengths[y][x] for y in range(m) if y != x)
    )
    if not winners:
        raise InternalInvariantError("winner set came out empty")
    return winners


def is_unique_winner(graph: MajorityGraph, target: int) -> bool:
    """True when the target beats every rival strictly in path strength."""
    m = len(graph.candidates)
    if not 0 <= target < m:
        raise ValueError(f"target index {target} out of range")
    strengths = widest_path_strengths(graph.weights)
    return all(
        strengths[target][y] > strengths[y][target] for y in range(m) if y != target
    )
