"""Constructive weighted coalitional manipulation of Schulze elections.

Given the non-manipulators' majority graph, a target candidate and the total
coalition weight, the solver computes a per-candidate bound function, a
ceiling on the path strength any rival may be allowed to reach toward the
target, by applying two value-lowering rules until a joint fixed point. The
decision then compares each rival's bound against the direct edge it holds
into the target. On a yes decision, a spanning arborescence of the admissible
support graph is folded into one ballot that the whole coalition casts; the
resulting election is re-checked before the outcome is returned.

Everything runs in polynomial time in the number of candidates; weights only
enter through exact integer comparisons.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .engine import is_unique_winner, schulze_winners
from .model import (
    CandidateSet,
    InternalInvariantError,
    MajorityGraph,
    ManipulationInstance,
    Mode,
    Ranking,
    build_majority_graph,
    overlay_identical_manipulators,
)


class _Infinity:
    """Positive infinity for bound values.

    A distinguished tagged value, never an integer sentinel: it compares
    above every int and supports no arithmetic at all.
    """

    __slots__ = ()

    def __lt__(self, other: object) -> bool:
        return False

    def __le__(self, other: object) -> bool:
        return isinstance(other, _Infinity)

    def __gt__(self, other: object) -> bool:
        return not isinstance(other, _Infinity)

    def __ge__(self, other: object) -> bool:
        return True

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Infinity)

    def __hash__(self) -> int:
        return hash("schulze_wcm.INF")

    def __repr__(self) -> str:
        return "inf"


INF = _Infinity()

BoundValue = int | _Infinity


@dataclass(frozen=True)
class BoundFunction:
    """Fixed-point ceilings on rival path strengths toward the target.

    The target itself carries the infinite bound; every other candidate
    carries a finite integer.
    """

    values: tuple[BoundValue, ...]
    target: int
    mode: Mode

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not 0 <= self.target < len(self.values):
            raise ValueError(f"target index {self.target} out of range")
        for x, value in enumerate(self.values):
            if x == self.target:
                if not isinstance(value, _Infinity):
                    raise ValueError("the target bound must be infinite")
            elif not isinstance(value, int):
                raise ValueError("non-target bounds must be integers")

    def __getitem__(self, x: int) -> BoundValue:
        return self.values[x]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class AdmissibleGraph:
    """Support edges the coalition may use without violating any bound.

    Edge (x, y) exists when min(bound(x), weight(x, y) + coalition) is at
    least bound(y). Out-neighbors are stored in ascending index order.
    """

    candidates: CandidateSet
    out_edges: tuple[tuple[int, ...], ...]

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.out_edges[x]


@dataclass(frozen=True)
class Arborescence:
    """Spanning tree of the admissible graph, directed away from the root."""

    root: int
    parents: tuple[int | None, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parents", tuple(self.parents))
        if self.parents[self.root] is not None:
            raise ValueError("the root must have no parent")
        for child, parent in enumerate(self.parents):
            if child != self.root and parent is None:
                raise ValueError(f"candidate {child} has no parent")


@dataclass(frozen=True)
class ManipulationOutcome:
    """Decision, optional coalition ballot, and the certificate behind them."""

    decision: bool
    vote: Ranking | None
    bounds: BoundFunction
    rule_applications: int
    mode: Mode


def _support_strengths(
    weights: tuple[tuple[int, ...], ...],
    bounds: list,
    target: int,
    coalition_weight: int,
) -> list:
    """Single-source max-min strengths from the target under capped edges.

    Every edge (y, z) is worth min(weight(y, z) + coalition, bound(z)): the
    best the coalition can deliver into z without exceeding z's ceiling. A
    greedy max-first scan (the bottleneck analogue of Dijkstra) is exact for
    arbitrary integer weights. Runs in O(m^2). The entry for the target is
    meaningless and returned as None.
    """
    m = len(weights)
    best: list = [None] * m
    row_t = weights[target]
    for z in range(m):
        if z == target:
            continue
        value = row_t[z] + coalition_weight
        cap = bounds[z]
        best[z] = cap if cap < value else value
    done = [False] * m
    done[target] = True
    for _ in range(m - 1):
        pick = -1
        pick_value = None
        for z in range(m):
            if not done[z] and (pick_value is None or best[z] > pick_value):
                pick = z
                pick_value = best[z]
        done[pick] = True
        row = weights[pick]
        for z in range(m):
            if done[z]:
                continue
            value = row[z] + coalition_weight
            cap = bounds[z]
            if cap < value:
                value = cap
            if pick_value < value:
                value = pick_value
            if value > best[z]:
                best[z] = value
    return best


def compute_bound_function(
    graph: MajorityGraph, target: int, coalition_weight: int, mode: Mode
) -> tuple[BoundFunction, int]:
    """Run the two lowering rules to their joint fixed point.

    Every candidate except the target starts at the largest pairwise weight
    plus the coalition weight; the target starts, and stays, infinite. Two
    rules lower the finite values:

    * path rule: a candidate falls to the strongest support path the
      coalition can still deliver from the target, with every edge capped at
      its head's current bound;
    * transfer rule: when a rival y sits below x and the fixed edge (y, x)
      stays at least as strong as y's bound even against the full coalition,
      x falls to y's bound. In COWINNER mode the edge test is strict.

    A sweep saturates the path rule (one single-source computation lowers
    every improvable candidate; the batch assigns exactly the values the
    rule would assign one at a time in decreasing order), then scans rival
    pairs in lexicographic order for the transfer rule, and repeats until a
    full sweep changes nothing. Returns the fixed point and the number of
    individual rule applications.
    """
    m = len(graph.candidates)
    if not 0 <= target < m:
        raise ValueError(f"target index {target} out of range")
    if coalition_weight < 0:
        raise ValueError("coalition weight must be >= 0")
    if m == 1:
        return BoundFunction((INF,), target, mode), 0

    weights = graph.weights
    start = (
        max(weights[y][z] for y in range(m) for z in range(m) if y != z)
        + coalition_weight
    )
    bounds: list = [start] * m
    bounds[target] = INF
    # Each candidate walks down a value set of at most m*(m-1)+1 entries, so
    # the application count can never pass this budget.
    budget = m * (m * (m - 1) + 1)
    applications = 0
    strict_transfer = mode is not Mode.UNIQUE

    while True:
        swept_clean = True
        while True:
            support = _support_strengths(weights, bounds, target, coalition_weight)
            lowered = [
                x for x in range(m) if x != target and support[x] < bounds[x]
            ]
            if not lowered:
                break
            for x in lowered:
                bounds[x] = support[x]
            applications += len(lowered)
            if applications > budget:
                raise InternalInvariantError("rule application budget exceeded")
            swept_clean = False
        for x in range(m):
            if x == target:
                continue
            for y in range(m):
                if y == x or y == target:
                    continue
                bound_y = bounds[y]
                if bound_y >= bounds[x]:
                    continue
                edge = weights[y][x] - coalition_weight
                if edge > bound_y or (edge == bound_y and not strict_transfer):
                    bounds[x] = bound_y
                    applications += 1
                    if applications > budget:
                        raise InternalInvariantError(
                            "rule application budget exceeded"
                        )
                    swept_clean = False
        if swept_clean:
            return BoundFunction(tuple(bounds), target, mode), applications


def decide_manipulable(
    graph: MajorityGraph, bounds: BoundFunction, coalition_weight: int
) -> bool:
    """Compare every rival's bound against its direct edge into the target.

    In UNIQUE mode each rival's bound must exceed its edge weight into the
    target minus the coalition weight; in COWINNER mode matching it is
    enough. A single candidate is always manipulable.
    """
    m = len(bounds)
    if m == 1:
        return True
    target = bounds.target
    strict = bounds.mode is Mode.UNIQUE
    for x in range(m):
        if x == target:
            continue
        threshold = graph.weights[x][target] - coalition_weight
        value = bounds.values[x]
        if value < threshold or (value == threshold and strict):
            return False
    return True


def build_admissible_graph(
    graph: MajorityGraph, bounds: BoundFunction, coalition_weight: int
) -> AdmissibleGraph:
    """Collect every edge the coalition may strengthen without breaking a bound."""
    m = len(bounds)
    values = bounds.values
    out: list[tuple[int, ...]] = []
    for x in range(m):
        bound_x = values[x]
        row = graph.weights[x]
        hits = []
        for y in range(m):
            if y == x:
                continue
            strength = row[y] + coalition_weight
            if bound_x < strength:
                strength = bound_x
            if strength >= values[y]:
                hits.append(y)
        out.append(tuple(hits))
    return AdmissibleGraph(graph.candidates, tuple(out))


def spanning_arborescence(graph: AdmissibleGraph, root: int) -> Arborescence:
    """Breadth-first spanning arborescence of the admissible graph.

    Neighbors are scanned in ascending index order and the first discovery
    fixes the parent, so the result is deterministic. Every candidate is
    reachable from the root at a rule fixed point; an unreachable candidate
    therefore signals a bug.
    """
    m = len(graph.candidates)
    parents: list[int | None] = [None] * m
    seen = [False] * m
    seen[root] = True
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in graph.out_edges[x]:
            if not seen[y]:
                seen[y] = True
                parents[y] = x
                queue.append(y)
    missing = [x for x in range(m) if not seen[x]]
    if missing:
        raise InternalInvariantError(
            f"candidates {missing} unreachable in the admissible graph"
        )
    return Arborescence(root, tuple(parents))


def construct_manipulator_vote(tree: Arborescence, bounds: BoundFunction) -> Ranking:
    """Fold the arborescence and the bound order into one coalition ballot.

    The ballot must rank x above y whenever (x, y) is a tree edge or x has
    the strictly larger bound. Candidates are emitted in descending bound
    order, which puts the target first; inside a group of equal bounds the
    tree edges are obeyed and remaining ties break by candidate index.
    """
    m = len(bounds)
    values = bounds.values
    for child, parent in enumerate(tree.parents):
        if parent is not None and values[parent] < values[child]:
            raise InternalInvariantError("tree edge ascends the bound function")

    children: list[list[int]] = [[] for _ in range(m)]
    for child, parent in enumerate(tree.parents):
        if parent is not None:
            children[parent].append(child)

    order = [tree.root]
    finite_values = sorted(
        {values[x] for x in range(m) if x != tree.root}, reverse=True
    )
    for value in finite_values:
        members = [x for x in range(m) if x != tree.root and values[x] == value]
        member_set = set(members)
        ready = [x for x in members if tree.parents[x] not in member_set]
        heapq.heapify(ready)
        emitted = 0
        while ready:
            x = heapq.heappop(ready)
            order.append(x)
            emitted += 1
            for child in children[x]:
                if child in member_set:
                    heapq.heappush(ready, child)
        if emitted != len(members):
            raise InternalInvariantError("cyclic ranking constraints")
    return Ranking.from_order(order)


def verify_manipulation(instance: ManipulationInstance, vote: Ranking) -> bool:
    """Check whether the whole coalition casting this ballot reaches the goal.

    Appends one ballot carrying the entire coalition weight and tests the
    target's winner status under the instance's mode.
    """
    profile = instance.profile
    if len(vote) != len(profile.candidates):
        raise ValueError("vote does not cover the candidate set")
    graph = overlay_identical_manipulators(
        build_majority_graph(profile), vote, instance.coalition_weight
    )
    if instance.mode is Mode.UNIQUE:
        return is_unique_winner(graph, instance.target)
    return instance.target in schulze_winners(graph)


def solve_wcm(instance: ManipulationInstance) -> ManipulationOutcome:
    """Decide the manipulation instance and construct a ballot when one exists.

    With a single candidate the answer is trivially yes. With no manipulators
    the answer is whether the target already holds the required status, and
    no ballot is produced. Otherwise the bound function decides, and on yes
    the constructed ballot is verified against the stated goal before being
    returned; all manipulators cast that same ballot.
    """
    profile = instance.profile
    target = instance.target
    mode = instance.mode
    m = len(profile.candidates)
    graph = build_majority_graph(profile)
    coalition_weight = instance.coalition_weight

    if m == 1:
        return ManipulationOutcome(
            decision=True,
            vote=Ranking((1,)),
            bounds=BoundFunction((INF,), target, mode),
            rule_applications=0,
            mode=mode,
        )

    bounds, applications = compute_bound_function(
        graph, target, coalition_weight, mode
    )

    if coalition_weight == 0:
        if mode is Mode.UNIQUE:
            decision = is_unique_winner(graph, target)
        else:
            decision = target in schulze_winners(graph)
        return ManipulationOutcome(decision, None, bounds, applications, mode)

    decision = decide_manipulable(graph, bounds, coalition_weight)
    vote: Ranking | None = None
    if decision:
        admissible = build_admissible_graph(graph, bounds, coalition_weight)
        tree = spanning_arborescence(admissible, target)
        vote = construct_manipulator_vote(tree, bounds)
        if not verify_manipulation(instance, vote):
            raise InternalInvariantError(
                "constructed ballot failed the final winner check"
            )
    return ManipulationOutcome(decision, vote, bounds, applications, mode)
