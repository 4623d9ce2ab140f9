"""Comparison graphs over candidates: margin graphs and rank-encoded strengths.

A comparison graph is a complete digraph on the candidates with integer edge
weights. The margin instance has w(u, v) = M(u, v) - M(v, u), where M comes
from :func:`schulze.ballots.pairwise_tallies`; other strength notions are
supported by re-encoding each ordered pair's strength as its dense rank, so
only the weak order of weights matters downstream.

Graph text format: ``wmg <m>``, then one line listing the candidates
(comma-separated), then one line ``u v w`` per ordered pair with 0-based
candidate indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .ballots import PreferenceProfile, pairwise_tallies, rank_encode
from .dominance import dominance_counts

STRENGTHS = ("margin", "winning_votes", "losing_votes", "ratio")


class GraphFormatError(ValueError):
    """Malformed graph file."""


@dataclass(frozen=True, eq=False)
class ComparisonGraph:
    """Complete digraph on candidates with integer weights, zero diagonal."""

    candidates: tuple[str, ...]
    weight: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weight, dtype=np.int64)
        m = len(self.candidates)
        if w.shape != (m, m):
            raise ValueError("weight matrix shape must match the candidate count")
        if m < 1:
            raise ValueError("graph needs at least one candidate")
        if np.diagonal(w).any():
            raise ValueError("weight matrix diagonal must be zero")
        object.__setattr__(self, "weight", w)
        w.setflags(write=False)

    @property
    def m(self) -> int:
        return len(self.candidates)

    def __eq__(self, other):
        if not isinstance(other, ComparisonGraph):
            return NotImplemented
        return self.candidates == other.candidates and np.array_equal(
            self.weight, other.weight
        )

    def induced(self, vertices: list[int]) -> "ComparisonGraph":
        """Induced subgraph on the given vertex indices (stays complete)."""
        idx = np.asarray(vertices, dtype=np.intp)
        return ComparisonGraph(
            tuple(self.candidates[i] for i in vertices),
            self.weight[np.ix_(idx, idx)],
        )


def build_wmg_naive(profile: PreferenceProfile) -> ComparisonGraph:
    """Margin graph by direct O(n m^2) tallying."""
    counts = pairwise_tallies(profile)
    return ComparisonGraph(profile.candidates, counts - counts.T)


def default_block_size(m: int) -> int:
    """Default bucket size for the tally kernel's sort buckets.

    With a word-parallel boolean multiplier the brute/multiply trade-off is
    flat around 1; the value is exposed as a tunable and swept by the CLI
    bench command.
    """
    return max(1, round(m ** ((3 - 3.0) / 2)))


def build_wmg_fast(
    profile: PreferenceProfile, block_size: int | None = None
) -> ComparisonGraph:
    """Margin graph through the dominance-count kernel; bit-exact equal to
    :func:`build_wmg_naive`.

    Voter a's dense rank f(a, u) gives M(u, v) = |{a : f(a, u) < f(a, v)}|,
    which is the dominance count of 2*f against 2*f - 1 (the doubling turns
    the strict comparison into <= on integers, with no fractional offsets).
    """
    if block_size is None:
        block_size = default_block_size(profile.m)
    ranks = rank_encode(profile)
    counts = dominance_counts(2 * ranks.T, 2 * ranks - 1, block_size)
    return ComparisonGraph(profile.candidates, counts - counts.T)


def _strength_key(strength: str, wins: int, losses: int):
    if strength == "margin":
        return wins - losses
    if strength == "winning_votes":
        return wins
    if strength == "losing_votes":
        return -losses
    if strength == "ratio":
        # (x, 0) with x > 0 is the unique top class; (0, 0) ties with ratio 0.
        if losses == 0 and wins > 0:
            return (1, Fraction(0))
        return (0, Fraction(wins, losses) if losses else Fraction(0))
    raise ValueError(f"unsupported strength {strength!r}")


def build_comparison_graph(
    profile: PreferenceProfile, strength: str = "margin"
) -> ComparisonGraph:
    """Comparison graph for any of the named strength relations.

    The m(m-1) pairs (M(u, v), M(v, u)) are sorted under the chosen
    strength relation and each edge receives its dense rank (from 1, equal
    strengths share a rank), preserving the relation's weak order.
    Strength keys: margin = M(u,v) - M(v,u); winning_votes = M(u,v);
    losing_votes = -M(v,u); ratio = exact fraction M(u,v)/M(v,u) with the
    zero-denominator conventions documented in ``_strength_key``.
    """
    if strength not in STRENGTHS:
        raise ValueError(f"unsupported strength {strength!r}")
    counts = pairwise_tallies(profile)
    m = profile.m
    keys = {}
    for u in range(m):
        for v in range(m):
            if u != v:
                keys[(u, v)] = _strength_key(strength, int(counts[u, v]), int(counts[v, u]))
    rank_of = {key: i + 1 for i, key in enumerate(sorted(set(keys.values())))}
    weight = np.zeros((m, m), dtype=np.int64)
    for (u, v), key in keys.items():
        weight[u, v] = rank_of[key]
    return ComparisonGraph(profile.candidates, weight)


def random_margin_graph(m: int, weight_bound: int, seed: int = 0) -> ComparisonGraph:
    """Random antisymmetric graph with weights uniform in [-bound, bound]."""
    if m < 1 or weight_bound < 0:
        raise ValueError("need m >= 1 and weight_bound >= 0")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.integers(-weight_bound, weight_bound + 1, size=(m, m)), 1)
    return ComparisonGraph(tuple(f"c{i}" for i in range(m)), upper - upper.T)


def random_comparison_graph(
    m: int, low: int, high: int, seed: int = 0
) -> ComparisonGraph:
    """Random complete digraph with independent weights uniform in [low, high]."""
    rng = np.random.default_rng(seed)
    weight = rng.integers(low, high + 1, size=(m, m))
    np.fill_diagonal(weight, 0)
    return ComparisonGraph(tuple(f"c{i}" for i in range(m)), weight)


def parse_graph(text: str) -> ComparisonGraph:
    """Read one comparison graph in the ``wmg <m>`` text format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty graph file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "wmg":
        raise GraphFormatError("expected 'wmg <m>' header")
    try:
        m = int(header[1])
    except ValueError:
        raise GraphFormatError("expected 'wmg <m>' header") from None
    if m < 1:
        raise GraphFormatError("graph must have at least one candidate")
    if len(lines) < 2:
        raise GraphFormatError("missing candidate list line")
    candidates = tuple(name.strip() for name in lines[1].split(","))
    if len(candidates) != m or any(not name for name in candidates):
        raise GraphFormatError(f"expected {m} non-empty candidate names")
    expected = m * (m - 1)
    if len(lines) != 2 + expected:
        raise GraphFormatError(f"expected {expected} edge lines, found {len(lines) - 2}")
    weight = np.zeros((m, m), dtype=np.int64)
    seen = set()
    for line in lines[2:]:
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError(f"malformed edge line {line!r}")
        try:
            u, v, w = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"malformed edge line {line!r}") from None
        if not (0 <= u < m and 0 <= v < m) or u == v or (u, v) in seen:
            raise GraphFormatError(f"bad edge ({u}, {v})")
        seen.add((u, v))
        weight[u, v] = w
    return ComparisonGraph(candidates, weight)


def format_graph(graph: ComparisonGraph) -> str:
    lines = [f"wmg {graph.m}", ",".join(graph.candidates)]
    for u in range(graph.m):
        for v in range(graph.m):
            if u != v:
                lines.append(f"{u} {v} {int(graph.weight[u, v])}")
    return "\n".join(lines) + "\n"
