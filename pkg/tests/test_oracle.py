"""Brute-force oracle behavior and its feasibility guard."""

import dataclasses
import random

import pytest

from schulze_wcm import (
    CandidateSet,
    CapacityError,
    ManipulationInstance,
    Mode,
    Ranking,
    WeightedBallot,
    WeightedProfile,
    brute_force_wcm,
    format_vote,
    verify_manipulation,
)
from schulze_wcm.sampling import random_instance

AC = CandidateSet(("a", "c"))


def instance(margin, coalition_weights, mode=Mode.UNIQUE):
    ballots = (
        (WeightedBallot(Ranking.from_order([0, 1]), margin),) if margin else ()
    )
    return ManipulationInstance(
        WeightedProfile(AC, ballots), coalition_weights, 1, mode
    )


def test_oracle_finds_first_witness():
    decision, witness = brute_force_wcm(instance(1, (2,)))
    assert decision
    assert [format_vote(v, AC) for v in witness] == ["c > a"]


def test_oracle_reports_impossible():
    assert brute_force_wcm(instance(3, (1,))) == (False, None)


def test_oracle_without_manipulators():
    already = ManipulationInstance(
        WeightedProfile(AC, (WeightedBallot(Ranking.from_order([1, 0]), 1),)),
        (),
        1,
    )
    assert brute_force_wcm(already) == (True, ())
    assert brute_force_wcm(instance(1, ())) == (False, None)
    assert brute_force_wcm(instance(1, ()), identical_only=True) == (False, None)


def test_oracle_witness_length_matches_manipulators():
    decision, witness = brute_force_wcm(instance(1, (1, 1)))
    assert decision and len(witness) == 2
    decision, witness = brute_force_wcm(instance(1, (1, 1)), identical_only=True)
    assert decision and len(witness) == 2 and witness[0] == witness[1]


def test_oracle_witnesses_actually_work():
    rng = random.Random(2024)
    confirmed = 0
    for _ in range(60):
        inst = random_instance(rng)
        decision, witness = brute_force_wcm(inst, identical_only=True)
        if not decision:
            continue
        # All manipulators cast the common ballot, so the overlay check of
        # verify_manipulation applies verbatim.
        assert verify_manipulation(inst, witness[0])
        confirmed += 1
    assert confirmed > 0


def test_identical_restriction_never_changes_the_decision():
    rng = random.Random(99)
    for _ in range(80):
        base = random_instance(rng)
        for mode in (Mode.UNIQUE, Mode.COWINNER):
            inst = dataclasses.replace(base, mode=mode)
            full, _ = brute_force_wcm(inst)
            restricted, _ = brute_force_wcm(inst, identical_only=True)
            assert full == restricted


def test_guard_rejects_oversized_search_spaces():
    labels = CandidateSet(tuple("abcdefghij"))  # 10! squared is way past the cap
    inst = ManipulationInstance(WeightedProfile(labels, ()), (1, 1), 9)
    with pytest.raises(CapacityError):
        brute_force_wcm(inst)
    # The identical-only search collapses to 10! assignments and is allowed.
    # Target j tops the first enumerated ballot, so the hit is immediate.
    decision, witness = brute_force_wcm(inst, identical_only=True)
    assert decision and len(witness) == 2
