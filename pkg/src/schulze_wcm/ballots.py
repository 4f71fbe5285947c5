"""Election file parsing and serialization.

Grammar, one directive per line ('#' starts a comment, blank lines are
skipped):

    candidates: <label> <label> ...
    ballot <weight>: <label> > <label> > ... > <label>
    manipulators: <weight> <weight> ...
    target: <label>

Labels match [A-Za-z0-9_-]+ and weights are decimal integers >= 1. A ballot
line ranks every candidate exactly once, most preferred first. The
candidates line is mandatory and must precede ballot and target lines. A
file carrying both a manipulators and a target line parses to a
ManipulationInstance (in UNIQUE mode by default), a file carrying neither
parses to a WeightedProfile, and anything in between is rejected.
"""

from __future__ import annotations

import re

from .model import (
    CandidateSet,
    ManipulationInstance,
    Ranking,
    WeightedBallot,
    WeightedProfile,
)

_LABEL = re.compile(r"^[A-Za-z0-9_-]+$")
_BALLOT = re.compile(r"^ballot\s+(\S+)\s*:\s*(.*)$")


class ParseError(ValueError):
    """Input text rejected; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _parse_weight(token: str, what: str, line: int) -> int:
    if not token.isdigit():
        raise ParseError(f"{what} weight {token!r} is not a decimal integer", line)
    weight = int(token)
    if weight < 1:
        raise ParseError(f"{what} weight must be >= 1, got {weight}", line)
    return weight


def _parse_ranking(
    text: str, candidates: CandidateSet, line: int | None = None
) -> Ranking:
    parts = [part.strip() for part in text.split(">")]
    if any(not part for part in parts):
        raise ParseError("empty entry in ranking", line)
    order = []
    seen = set()
    for label in parts:
        index = _lookup(label, candidates, line)
        if index in seen:
            raise ParseError(f"candidate {label!r} ranked twice", line)
        seen.add(index)
        order.append(index)
    if len(order) != len(candidates):
        raise ParseError(
            f"ranking covers {len(order)} of {len(candidates)} candidates", line
        )
    return Ranking.from_order(order)


def _lookup(label: str, candidates: CandidateSet, line: int | None) -> int:
    if not _LABEL.match(label):
        raise ParseError(f"malformed label {label!r}", line)
    try:
        return candidates.index(label)
    except ValueError:
        raise ParseError(f"unknown candidate label {label!r}", line) from None


def parse_election_file(text: str) -> ManipulationInstance | WeightedProfile:
    """Parse election text; all diagnostics carry 1-based line numbers."""
    candidates: CandidateSet | None = None
    ballots: list[WeightedBallot] = []
    manipulators: tuple[int, ...] | None = None
    manipulators_line: int | None = None
    target: int | None = None
    target_line: int | None = None

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("candidates:"):
            if candidates is not None:
                raise ParseError("duplicate candidates line", number)
            labels = line[len("candidates:") :].split()
            if not labels:
                raise ParseError("candidates line lists no labels", number)
            for label in labels:
                if not _LABEL.match(label):
                    raise ParseError(f"malformed label {label!r}", number)
            seen: set[str] = set()
            for label in labels:
                if label in seen:
                    raise ParseError(f"duplicate label {label!r}", number)
                seen.add(label)
            candidates = CandidateSet(tuple(labels))
        elif line.startswith("ballot"):
            match = _BALLOT.match(line)
            if match is None:
                raise ParseError("malformed ballot line", number)
            if candidates is None:
                raise ParseError("candidates line must precede ballots", number)
            weight = _parse_weight(match.group(1), "ballot", number)
            ranking = _parse_ranking(match.group(2), candidates, number)
            ballots.append(WeightedBallot(ranking, weight))
        elif line.startswith("manipulators:"):
            if manipulators is not None:
                raise ParseError("duplicate manipulators line", number)
            tokens = line[len("manipulators:") :].split()
            if not tokens:
                raise ParseError("manipulators line lists no weights", number)
            manipulators = tuple(
                _parse_weight(token, "manipulator", number) for token in tokens
            )
            manipulators_line = number
        elif line.startswith("target:"):
            if target is not None:
                raise ParseError("duplicate target line", number)
            if candidates is None:
                raise ParseError("candidates line must precede target", number)
            token = line[len("target:") :].strip()
            if not token or len(token.split()) != 1:
                raise ParseError("target line must name exactly one candidate", number)
            target = _lookup(token, candidates, number)
            target_line = number
        else:
            raise ParseError(f"unrecognized directive {line.split()[0]!r}", number)

    if candidates is None:
        raise ParseError("missing candidates line")
    if target is not None and manipulators is None:
        raise ParseError("target given without manipulators", target_line)
    if manipulators is not None and target is None:
        raise ParseError("manipulators given without target", manipulators_line)

    profile = WeightedProfile(candidates, tuple(ballots))
    if manipulators is None:
        return profile
    assert target is not None
    return ManipulationInstance(profile, manipulators, target)


def parse_vote(text: str, candidates: CandidateSet) -> Ranking:
    """Parse a standalone ranking such as "c > a > b"."""
    return _parse_ranking(text, candidates)


def format_vote(vote: Ranking, candidates: CandidateSet) -> str:
    """Render a ranking as labels joined by ' > ', most preferred first."""
    return " > ".join(candidates.labels[i] for i in vote.order())


def serialize_election(
    election: ManipulationInstance | WeightedProfile,
) -> str:
    """Render an election back into the file grammar.

    The output parses back to an equal object (instances come back in the
    default UNIQUE mode, which the file grammar does not record).
    """
    if isinstance(election, ManipulationInstance):
        profile = election.profile
    else:
        profile = election
    candidates = profile.candidates
    lines = ["candidates: " + " ".join(candidates.labels)]
    for ballot in profile.ballots:
        lines.append(
            f"ballot {ballot.weight}: " + format_vote(ballot.ranking, candidates)
        )
    if isinstance(election, ManipulationInstance):
        lines.append(
            "manipulators: "
            + " ".join(str(weight) for weight in election.manipulator_weights)
        )
        lines.append("target: " + candidates.labels[election.target])
    return "\n".join(lines) + "\n"
