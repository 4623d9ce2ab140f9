"""Widest-path computations: all-pairs and single-source baselines, winner
verification, and the derived weak order over candidates.

The width (bottleneck) of a path is its minimum edge weight; B[u, v] is the
maximum width over all u-to-v paths. Weights may be any integers, so widths
range over all integers as well. Diagonal entries hold a +infinity sentinel
(int64 max) and are never read by the winner logic.

All functions are pure; single-source passes for distinct sources are
independent and safe to run concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .majority_graph import ComparisonGraph

WIDTH_SENTINEL = np.iinfo(np.int64).max


@dataclass(frozen=True, eq=False)
class BottleneckMatrix:
    """All-pairs widest-path widths; diagonal fixed at WIDTH_SENTINEL."""

    widths: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.widths, dtype=np.int64)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("widths must be square")
        object.__setattr__(self, "widths", w)
        w.setflags(write=False)

    @property
    def m(self) -> int:
        return self.widths.shape[0]


def apbp(graph: ComparisonGraph) -> BottleneckMatrix:
    """All-pairs bottleneck paths by cubic max-min closure.

    This is the baseline (and test oracle) with one max-min relaxation pass
    per intermediate vertex; it does not use matrix-multiplication
    accelerations.
    """
    widths = graph.weight.astype(np.int64).copy()
    np.fill_diagonal(widths, WIDTH_SENTINEL)
    for k in range(graph.m):
        np.maximum(widths, np.minimum(widths[:, k, None], widths[None, k, :]), out=widths)
    widths.setflags(write=False)
    return BottleneckMatrix(widths)


def ssbp(graph: ComparisonGraph, source: int) -> np.ndarray:
    """Single-source widest-path widths from ``source``.

    Returns a length-m vector with the width to every other candidate and
    WIDTH_SENTINEL in the source slot, matching apbp's row convention.
    Dense-graph variant of widest-path Dijkstra: linear-scan extract-max,
    O(m^2) total.
    """
    m = graph.m
    weight = graph.weight
    dist = np.full(m, np.iinfo(np.int64).min, dtype=np.int64)
    dist[source] = WIDTH_SENTINEL
    done = np.zeros(m, dtype=bool)
    for _ in range(m):
        u = int(np.argmax(np.where(done, np.iinfo(np.int64).min, dist)))
        if done[u]:
            break
        done[u] = True
        np.maximum(dist, np.minimum(dist[u], weight[u]), out=dist, where=~done)
    return dist


def verify_winner(graph: ComparisonGraph, candidate: int) -> bool:
    """Whether ``candidate`` beats-or-ties every other candidate through
    indirect comparisons: B(candidate, u) >= B(u, candidate) for all u.

    Runs one forward single-source pass and one on the edge-reversed graph.
    """
    outward = ssbp(graph, candidate)
    reversed_graph = ComparisonGraph(graph.candidates, graph.weight.T)
    inward = ssbp(reversed_graph, candidate)
    return bool(np.all(outward >= inward))


def winners_from_bottlenecks(bm: BottleneckMatrix) -> list[int]:
    """All candidates u with B[u, v] >= B[v, u] for every v, ascending.

    The result is never empty for widths computed from a complete digraph;
    emptiness would indicate a bug upstream.
    """
    ok = bm.widths >= bm.widths.T
    winners = np.nonzero(ok.all(axis=1))[0].tolist()
    assert winners, "winner set is empty: bottleneck matrix is inconsistent"
    return winners


def schulze_ranking(bm: BottleneckMatrix) -> list[list[int]]:
    """Weak order over candidates derived from the strict relation
    "u precedes v iff B[u, v] > B[v, u]", as tie-classes best first.

    Classes are peeled off by repeatedly taking the candidates nobody
    remaining strictly beats, so the top class is exactly the winner set,
    no two candidates in a class strictly beat each other, and every
    strict relation is respected across classes. (The relation's
    incomparabilities are not transitive in general, so this derived order
    may separate mutually-untied candidates.)

    Raises RuntimeError if some peel round has no undominated candidate,
    which would mean a cycle in the strict relation; max-min widths never
    produce one.
    """
    strict = bm.widths > bm.widths.T
    remaining = np.arange(bm.m)
    classes: list[list[int]] = []
    while len(remaining):
        sub = strict[np.ix_(remaining, remaining)]
        top = ~sub.any(axis=0)
        if not top.any():
            raise RuntimeError("strict indirect-comparison relation has a cycle")
        classes.append(remaining[top].tolist())
        remaining = remaining[~top]
    return classes
