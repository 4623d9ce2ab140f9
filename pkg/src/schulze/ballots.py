"""Preference profiles of weak orders: parsing, generation, and pairwise tallies.

Ballot file format (UTF-8 text):

* lines starting with ``#`` are comments, blank lines are ignored;
* the first content line is ``candidates: c1,c2,...``;
* every following content line is one vote, written most-preferred group
  first: tie-groups are joined with ``=`` and separated by ``>``, e.g.
  ``a = b > c``;
* a vote line may end with a multiplicity suffix ``xK`` (K >= 1), which
  stands for K identical votes.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

import numpy as np

Vote = tuple[frozenset[int], ...]

_MULT_RE = re.compile(r"\s+x([0-9]+)\s*$")
_FORBIDDEN_NAME_CHARS = set(",>=#")


class BallotParseError(ValueError):
    """Malformed ballot file; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class PreferenceProfile:
    """n voters' weak orders over m candidates.

    Each vote is a tuple of tie-groups (frozensets of candidate indices),
    most preferred group first; every vote's groups partition the full
    candidate set. Instances are immutable after construction and safe to
    read from multiple threads.
    """

    candidates: tuple[str, ...]
    votes: tuple[Vote, ...]

    def __post_init__(self):
        if len(self.candidates) < 1:
            raise ValueError("profile needs at least one candidate")
        if len(set(self.candidates)) != len(self.candidates):
            raise ValueError("candidate identifiers must be unique")
        if len(self.votes) < 1:
            raise ValueError("profile needs at least one vote")
        full = frozenset(range(len(self.candidates)))
        for vote in self.votes:
            seen: set[int] = set()
            for group in vote:
                if not group:
                    raise ValueError("empty tie-group in vote")
                if group & seen:
                    raise ValueError("candidate repeated within a vote")
                seen |= group
            if seen != full:
                raise ValueError("vote does not cover the full candidate set")

    @property
    def m(self) -> int:
        return len(self.candidates)

    @property
    def n(self) -> int:
        return len(self.votes)


def _validate_name(name: str, line_no: int) -> str:
    if not name:
        raise BallotParseError(line_no, "empty candidate name")
    if any(c.isspace() or c in _FORBIDDEN_NAME_CHARS for c in name):
        raise BallotParseError(
            line_no, f"invalid candidate name {name!r} (no whitespace or ',>=#')"
        )
    if re.fullmatch(r"x[0-9]+", name):
        raise BallotParseError(
            line_no, f"candidate name {name!r} clashes with the multiplicity suffix"
        )
    return name


def parse_profile(text: str) -> PreferenceProfile:
    """Parse ballot-file contents into a profile.

    Multiplicity suffixes are expanded into repeated votes. Raises
    BallotParseError with a line number on any syntax or consistency error.
    """
    candidates: list[str] | None = None
    index: dict[str, int] = {}
    votes: list[Vote] = []
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if candidates is None:
            if not line.startswith("candidates:"):
                raise BallotParseError(line_no, "expected 'candidates:' header")
            names = [n.strip() for n in line[len("candidates:"):].split(",")]
            if names == [""]:
                raise BallotParseError(line_no, "empty candidate list")
            candidates = [_validate_name(n, line_no) for n in names]
            if len(set(candidates)) != len(candidates):
                raise BallotParseError(line_no, "duplicate candidate name")
            index = {name: i for i, name in enumerate(candidates)}
            continue
        mult = 1
        mm = _MULT_RE.search(line)
        if mm:
            mult = int(mm.group(1))
            if mult < 1:
                raise BallotParseError(line_no, "multiplicity must be >= 1")
            line = line[: mm.start()]
        groups: list[frozenset[int]] = []
        seen: set[int] = set()
        for chunk in line.split(">"):
            members: set[int] = set()
            for part in chunk.split("="):
                name = part.strip()
                if not name:
                    raise BallotParseError(line_no, "malformed vote syntax")
                if name not in index:
                    raise BallotParseError(line_no, f"unknown candidate {name!r}")
                idx = index[name]
                if idx in seen or idx in members:
                    raise BallotParseError(line_no, f"candidate {name!r} repeated")
                members.add(idx)
            groups.append(frozenset(members))
            seen |= members
        if len(seen) != len(candidates):
            missing = sorted(set(range(len(candidates))) - seen)
            raise BallotParseError(
                line_no, f"vote is missing candidate {candidates[missing[0]]!r}"
            )
        votes.extend([tuple(groups)] * mult)
    if candidates is None:
        raise BallotParseError(last_line or 1, "missing 'candidates:' header")
    if not votes:
        raise BallotParseError(last_line or 1, "profile has no votes")
    return PreferenceProfile(tuple(candidates), tuple(votes))


def format_profile(profile: PreferenceProfile, collapse: bool = True) -> str:
    """Render a profile in the ballot file format.

    With ``collapse``, runs of identical consecutive votes become one line
    with an ``xK`` multiplicity suffix.
    """
    lines = ["candidates: " + ",".join(profile.candidates)]

    def render(vote: Vote) -> str:
        return " > ".join(
            " = ".join(profile.candidates[i] for i in sorted(group)) for group in vote
        )

    i = 0
    votes = profile.votes
    while i < len(votes):
        j = i + 1
        if collapse:
            while j < len(votes) and votes[j] == votes[i]:
                j += 1
        text = render(votes[i])
        if j - i > 1:
            text += f" x{j - i}"
        lines.append(text)
        i = j
    return "\n".join(lines) + "\n"


def rank_encode(profile: PreferenceProfile) -> np.ndarray:
    """Dense per-voter ranks: an (n, m) array where lower rank means more
    preferred and tied candidates share a rank.

    For every voter a, ranks[a] takes exactly the values 0..g-1 where g is
    the voter's number of tie-groups.
    """
    ranks = np.empty((profile.n, profile.m), dtype=np.int64)
    for a, vote in enumerate(profile.votes):
        for level, group in enumerate(vote):
            for u in group:
                ranks[a, u] = level
    return ranks


def groups_from_ranks(row: np.ndarray) -> Vote:
    """Rebuild a vote's tie-groups from one dense rank row."""
    order = np.argsort(row, kind="stable")
    groups: list[frozenset[int]] = []
    current: list[int] = []
    for idx in order.tolist():
        if current and row[idx] != row[current[-1]]:
            groups.append(frozenset(current))
            current = []
        current.append(idx)
    if current:
        groups.append(frozenset(current))
    return tuple(groups)


def pairwise_tallies(profile: PreferenceProfile) -> np.ndarray:
    """The (m, m) matrix whose (u, v) entry counts voters strictly
    preferring u to v; the diagonal is zero."""
    ranks = rank_encode(profile)
    counts = (ranks[:, :, None] < ranks[:, None, :]).sum(axis=0, dtype=np.int64)
    return counts


def random_profile(
    m: int, n: int, tie_probability: float = 0.0, seed: int = 0
) -> PreferenceProfile:
    """Reproducible random profile: each vote is a uniform permutation with
    adjacent candidates merged into a tie-group independently with
    probability ``tie_probability``."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    rng = random.Random(seed)
    candidates = tuple(f"c{i}" for i in range(m))
    votes: list[Vote] = []
    for _ in range(n):
        perm = list(range(m))
        rng.shuffle(perm)
        groups: list[list[int]] = [[perm[0]]]
        for idx in perm[1:]:
            if rng.random() < tie_probability:
                groups[-1].append(idx)
            else:
                groups.append([idx])
        votes.append(tuple(frozenset(g) for g in groups))
    return PreferenceProfile(candidates, tuple(votes))
