"""Independent oracles used across the test suite.

Everything here recomputes results from definitions, using code paths
disjoint from the library implementations under test: tallies by walking
tie-groups, bottleneck widths by exhaustive simple-path enumeration,
component partitions via scipy's compiled SCC, and in-degrees by counting
edges one by one.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components


def group_position(vote, candidate: int) -> int:
    for pos, group in enumerate(vote):
        if candidate in group:
            return pos
    raise AssertionError("candidate missing from vote")


def tallies_by_definition(profile) -> np.ndarray:
    """M[u, v] = number of votes placing u in a strictly earlier group."""
    m = profile.m
    counts = np.zeros((m, m), dtype=np.int64)
    for vote in profile.votes:
        for u in range(m):
            pu = group_position(vote, u)
            for v in range(m):
                if u != v and pu < group_position(vote, v):
                    counts[u, v] += 1
    return counts


def widths_by_enumeration(weight: np.ndarray) -> np.ndarray:
    """B[u, v] = max over all simple u->v paths of the minimum edge weight,
    found by exhaustive depth-first enumeration. Diagonal = int64 max."""
    m = weight.shape[0]
    sentinel = np.iinfo(np.int64).max
    best = np.full((m, m), np.iinfo(np.int64).min, dtype=np.int64)

    def explore(source: int, node: int, width: int, visited: set[int]):
        for nxt in range(m):
            if nxt == node or nxt in visited:
                continue
            w = min(width, int(weight[node, nxt]))
            if w > best[source, nxt]:
                best[source, nxt] = w
            explore(source, nxt, w, visited | {nxt})

    for source in range(m):
        explore(source, source, sentinel, {source})
    np.fill_diagonal(best, sentinel)
    return best


def winners_by_definition(weight: np.ndarray) -> list[int]:
    best = widths_by_enumeration(weight)
    ok = best >= best.T
    return np.nonzero(ok.all(axis=1))[0].tolist()


def scc_partition(m: int, live: np.ndarray) -> np.ndarray:
    """Component labels of the digraph given by the boolean matrix."""
    rows, cols = np.nonzero(live)
    g = sp.csr_matrix((np.ones(len(rows), np.int8), (rows, cols)), shape=(m, m))
    return connected_components(g, directed=True, connection="strong")[1]


def in_degrees_by_definition(live: np.ndarray, labels: np.ndarray) -> dict[int, int]:
    """Live edges entering each component from outside, counted one by one."""
    degrees = {int(label): 0 for label in np.unique(labels)}
    rows, cols = np.nonzero(live)
    for u, v in zip(rows.tolist(), cols.tolist()):
        if labels[u] != labels[v]:
            degrees[int(labels[v])] += 1
    return degrees


def canonical_partition(labels) -> tuple[int, ...]:
    """Relabel by first occurrence so partitions compare structurally."""
    seen: dict[int, int] = {}
    out = []
    for label in labels:
        label = int(label)
        if label not in seen:
            seen[label] = len(seen)
        out.append(seen[label])
    return tuple(out)


def smith_set_by_definition(weight: np.ndarray) -> list[int]:
    """Smallest dominant set, by trying candidate subsets in size order over
    the condensation-free brute definition (small m only)."""
    from itertools import combinations

    m = weight.shape[0]
    beats = weight > weight.T
    for size in range(1, m + 1):
        for subset in combinations(range(m), size):
            inside = set(subset)
            if all(
                beats[s, t] for s in subset for t in range(m) if t not in inside
            ):
                return list(subset)
    raise AssertionError("no dominant set found")
