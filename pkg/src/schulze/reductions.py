"""Instance generators mapping matrix-dominance problems onto elections.

Two constructions, both used as cross-validation tests for the tally and
winner-verification code paths:

* :func:`dominance_to_wmg_instance` encodes a square matrix pair (A, B)
  into a profile of r strict ballots over 2r candidates whose margin graph
  satisfies w(u_i, v_j) = 2 C[i, j] - r, where C is the dominance count
  matrix; :func:`recover_dominance_from_wmg` inverts the encoding.
* :func:`dominating_pairs_to_schulze_instance` pads (A, B) so every
  dominance count is positive, then surrounds the encoding ballots with
  balanced gadget voters so that a distinguished candidate "W" wins exactly
  when no padded dominance count reaches the matrix dimension.

Role sidecar: generated candidates are addressed through a role map
(``u1..uR``, ``v1..vR``, ``W``, ``W'`` -> candidate index). The CLI embeds
the map as a trailing ``# roles: {...}`` JSON comment inside the emitted
ballot file; :func:`parse_roles_comment` extracts it back.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .ballots import PreferenceProfile, Vote
from .bottleneck import verify_winner
from .dominance import DominanceInstance, make_entries_distinct
from .majority_graph import ComparisonGraph, build_wmg_naive


class ReductionImageError(ValueError):
    """The graph is not the margin graph of a generated instance."""


@dataclass(frozen=True)
class ReductionInstance:
    """A generated profile with its role map.

    ``source_dim`` is the input matrices' dimension r; ``padded`` tells
    whether the positivity/squareness padding was applied (in which case
    the construction ran at dimension r + 1, see :attr:`gadget_dim`).
    """

    profile: PreferenceProfile
    roles: dict[str, int]
    source_dim: int
    padded: bool

    @property
    def gadget_dim(self) -> int:
        return self.source_dim + 1 if self.padded else self.source_dim


def _strict_vote(order: list[int]) -> Vote:
    return tuple(frozenset((i,)) for i in order)


def _value_order(values: dict[int, int]) -> list[int]:
    """Candidate indices sorted by associated value, most preferred first."""
    return sorted(values, key=lambda c: values[c])


def dominance_to_wmg_instance(inst: DominanceInstance) -> ReductionInstance:
    """Profile of r voters over 2r candidates encoding a dominance-count
    instance in its margin graph.

    Voter k ranks candidate u_i by value A[i, k] and candidate v_j by value
    B[k, j], smaller values first; entries are made distinct beforehand
    (preserving the counts), so every ballot is a strict order.
    """
    distinct = make_entries_distinct(inst)
    r = inst.r
    candidates = tuple(f"u{i + 1}" for i in range(r)) + tuple(
        f"v{j + 1}" for j in range(r)
    )
    votes = []
    for k in range(r):
        values = {i: int(distinct.a[i, k]) for i in range(r)}
        values.update({r + j: int(distinct.b[k, j]) for j in range(r)})
        votes.append(_strict_vote(_value_order(values)))
    roles = {name: i for i, name in enumerate(candidates)}
    profile = PreferenceProfile(candidates, tuple(votes))
    return ReductionInstance(profile, roles, r, padded=False)


def recover_dominance_from_wmg(
    graph: ComparisonGraph, roles: dict[str, int], r: int
) -> np.ndarray:
    """Dominance counts back out of a generated instance's margin graph,
    via C[i, j] = (w(u_i, v_j) + r) / 2.

    Raises ReductionImageError when some (w + r) is odd or the recovered
    count falls outside 0..r.
    """
    counts = np.empty((r, r), dtype=np.int64)
    for i in range(r):
        u = roles[f"u{i + 1}"]
        for j in range(r):
            v = roles[f"v{j + 1}"]
            w = int(graph.weight[u, v])
            if (w + r) % 2 != 0:
                raise ReductionImageError(f"weight parity violated at ({i}, {j})")
            c = (w + r) // 2
            if not 0 <= c <= r:
                raise ReductionImageError(f"count out of range at ({i}, {j})")
            counts[i, j] = c
    return counts


def pad_for_positivity(inst: DominanceInstance) -> DominanceInstance:
    """Pad (A, B) to dimension r + 1 so all dominance counts are positive.

    A gains a zero column and B a ones row (every count gains exactly 1);
    squareness is restored with a row of A strictly above every entry of B
    (last entry 0) and a column of B strictly below every entry of A (last
    entry 1). The padded instance has a count of r + 1 exactly when the
    original has a count of r, and the padded row/column never reach it.
    """
    r = inst.r
    big = int(max(inst.a.max(), inst.b.max())) + 1
    small = int(min(inst.a.min(), inst.b.min())) - 1
    a = np.zeros((r + 1, r + 1), dtype=np.int64)
    b = np.zeros((r + 1, r + 1), dtype=np.int64)
    a[:r, :r] = inst.a
    a[:r, r] = 0
    a[r, :r] = big
    a[r, r] = 0
    b[:r, :r] = inst.b
    b[r, :r] = 1
    b[:r, r] = small
    b[r, r] = 1
    return DominanceInstance(a, b)


def _balanced_pair(block_first: list[int], block_second: list[int], rest: list[int]):
    """Two ballots that add +2 to M(x, y) for every pair ordered the same
    way in both block arrangements, and +1 to each direction of every other
    ordered pair: the first voter ranks the block then ``rest``, the second
    ranks ``rest`` reversed then the re-arranged block."""
    return (
        _strict_vote(block_first + rest),
        _strict_vote(list(reversed(rest)) + block_second),
    )


def dominating_pairs_to_schulze_instance(inst: DominanceInstance) -> ReductionInstance:
    """Election on 2R + 2 candidates and 10R - 2 voters (R = r + 1 after
    padding) in which candidate W wins exactly when the padded instance has
    no dominating pair.

    Voter blocks, with R = gadget dimension and C the padded counts:

    * R encoding voters ranking by matrix values with W', W appended last,
      plus R more with W, W' prepended first: together they contribute
      2 C[i, j] to M(u_i, v_j) and R to every pair touching W or W';
    * R - 1 voters ranking W' > v_R..v_1 > W > u_R..u_1 and R - 1 ranking
      W > u_1..u_R > v_1..v_R > W';
    * three balanced-gadget groups of R identical ballot pairs boosting
      M(W, W'), M(W', v_j) for all j, and M(v_j, W) for all j by 2R while
      adding R to each direction of every other pair.
    """
    padded = pad_for_positivity(inst)
    distinct = make_entries_distinct(padded)
    big_r = padded.r
    u_ids = list(range(big_r))
    v_ids = list(range(big_r, 2 * big_r))
    w_id = 2 * big_r
    w2_id = 2 * big_r + 1
    candidates = (
        tuple(f"u{i + 1}" for i in range(big_r))
        + tuple(f"v{j + 1}" for j in range(big_r))
        + ("W", "W'")
    )
    votes: list[Vote] = []
    for k in range(big_r):
        values = {u_ids[i]: int(distinct.a[i, k]) for i in range(big_r)}
        values.update({v_ids[j]: int(distinct.b[k, j]) for j in range(big_r)})
        order = _value_order(values)
        votes.append(_strict_vote(order + [w2_id, w_id]))
    for k in range(big_r):
        values = {u_ids[i]: int(distinct.a[i, k]) for i in range(big_r)}
        values.update({v_ids[j]: int(distinct.b[k, j]) for j in range(big_r)})
        order = _value_order(values)
        votes.append(_strict_vote([w_id, w2_id] + order))
    chain_one = _strict_vote([w2_id] + v_ids[::-1] + [w_id] + u_ids[::-1])
    chain_two = _strict_vote([w_id] + u_ids + v_ids + [w2_id])
    votes.extend([chain_one] * (big_r - 1))
    votes.extend([chain_two] * (big_r - 1))
    gadgets = [
        _balanced_pair([w_id, w2_id], [w_id, w2_id], u_ids + v_ids),
        _balanced_pair([w2_id] + v_ids, [w2_id] + v_ids[::-1], u_ids + [w_id]),
        _balanced_pair(v_ids + [w_id], v_ids[::-1] + [w_id], u_ids + [w2_id]),
    ]
    for first, second in gadgets:
        for _ in range(big_r):
            votes.append(first)
            votes.append(second)
    roles = {name: i for i, name in enumerate(candidates)}
    profile = PreferenceProfile(candidates, tuple(votes))
    return ReductionInstance(profile, roles, inst.r, padded=True)


def decide_dominating_pairs_via_schulze(inst: DominanceInstance) -> bool:
    """Whether (A, B) has a dominating pair, decided by checking that the
    generated election's candidate W fails to win."""
    instance = dominating_pairs_to_schulze_instance(inst)
    graph = build_wmg_naive(instance.profile)
    return not verify_winner(graph, instance.roles["W"])


def roles_comment(roles: dict[str, int]) -> str:
    """Single comment line embedding the role map as JSON."""
    return "# roles: " + json.dumps(roles, sort_keys=True)


def parse_roles_comment(text: str) -> dict[str, int] | None:
    """Extract the role map from a ballot file's trailing roles comment."""
    for line in reversed(text.splitlines()):
        line = line.strip()
        if line.startswith("# roles: "):
            return {k: int(v) for k, v in json.loads(line[len("# roles: "):]).items()}
    return None
