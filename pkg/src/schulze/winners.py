"""Single-winner and all-winners computation by ordered edge elimination.

Both algorithms delete the edges of a comparison graph in increasing weight
order while tracking strongly connected components:

* the single-winner scan keeps a vertex x and, whenever the deletion of an
  edge (u, v) splits the component containing both x's component-mates u
  and v, moves x to v;
* the all-winners scan processes edges in batches of equal weight and keeps
  the set of components that can still contain winners: when a candidate
  component splits, exactly its fragments with zero live in-degree remain
  candidates after the batch.

The all-winners scan runs on the offline weight-level engine by default; an
``engine="edges"`` flag switches to per-edge deletions through
:class:`schulze.decremental_scc.SccState`. Every invocation owns its
component-tracking state, so calls on different graphs are independent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .bottleneck import apbp, winners_from_bottlenecks
from .decremental_scc import SccState, iter_weight_levels
from .majority_graph import ComparisonGraph


@dataclass
class SingleStep:
    """One deletion record of the single-winner scan."""

    u: int
    v: int
    weight: int
    flag: bool
    split: bool
    x_after: int


@dataclass
class BatchRecord:
    """One weight batch of the all-winners scan (either engine).

    ``mutations`` is the in-order list of candidate-set edits as
    ("add" | "remove", component id); ``dropped_vertices`` is used by the
    batch engine, which tracks candidacy per vertex instead of per id.
    """

    weight: int
    mutations: list[tuple[str, int]] = field(default_factory=list)
    dropped_vertices: list[int] = field(default_factory=list)


@dataclass
class WinnerTrace:
    """Replayable record of a winner computation.

    ``steps`` is filled by the single-winner scan, ``batches`` by the
    all-winners scan. Re-executing the recorded decisions must reproduce
    the recorded result; see :meth:`replay`.
    """

    mode: str = ""
    edges: list[tuple[int, int, int]] = field(default_factory=list)
    steps: list[SingleStep] = field(default_factory=list)
    batches: list[BatchRecord] = field(default_factory=list)
    final_members: dict[int, list[int]] = field(default_factory=dict)
    n_vertices: int = 0
    result: object = None

    def replay(self):
        """Recompute the result from the recorded decisions alone."""
        if self.mode == "single":
            x = 0
            for step in self.steps:
                if step.flag and step.split:
                    x = step.v
            return x
        if self.mode == "all-edges":
            live = {0}
            for batch in self.batches:
                for op, scc in batch.mutations:
                    if op == "add":
                        live.add(scc)
                    else:
                        live.discard(scc)
            winners = sorted(
                v for scc in live for v in self.final_members.get(scc, [])
            )
            return winners
        if self.mode == "all-batch":
            alive = set(range(self.n_vertices))
            for batch in self.batches:
                alive -= set(batch.dropped_vertices)
            return sorted(alive)
        raise ValueError(f"empty or unknown trace mode {self.mode!r}")


def _sorted_edges(
    graph: ComparisonGraph, tie_shuffle_seed: int | None = None
) -> list[tuple[int, int, int]]:
    """All edges as (weight, u, v), weight-ascending.

    Equal weights are ordered lexicographically by (u, v); with a seed,
    each equal-weight run is shuffled instead (any fixed order is valid,
    and the winner set must not depend on the choice).
    """
    m = graph.m
    w = graph.weight
    edges = [
        (int(w[u, v]), u, v) for u in range(m) for v in range(m) if u != v
    ]
    edges.sort()
    if tie_shuffle_seed is not None:
        rng = random.Random(tie_shuffle_seed)
        out: list[tuple[int, int, int]] = []
        i = 0
        while i < len(edges):
            j = i
            while j < len(edges) and edges[j][0] == edges[i][0]:
                j += 1
            run = edges[i:j]
            rng.shuffle(run)
            out.extend(run)
            i = j
        edges = out
    return edges


def _induced_winner_set(graph: ComparisonGraph, vertices: list[int]) -> set[int]:
    sub = graph.induced(vertices)
    return {vertices[i] for i in winners_from_bottlenecks(apbp(sub))}


def find_winner(
    graph: ComparisonGraph,
    *,
    tie_shuffle_seed: int | None = None,
    debug: bool = False,
    trace: WinnerTrace | None = None,
) -> int:
    """One member of the winner set, by the single-winner deletion scan.

    Deterministic for a fixed tie order. ``debug`` re-checks, after every
    deletion, that the winners of the subgraph induced by x's current
    component are winners of the whole graph (brute-forced; small graphs
    only). ``trace`` records replayable per-step decisions.
    """
    state = SccState(graph)
    edges = _sorted_edges(graph, tie_shuffle_seed)
    x = 0
    if trace is not None:
        trace.mode = "single"
        trace.edges = edges
        trace.n_vertices = graph.m
    reference = _induced_winner_set(graph, list(range(graph.m))) if debug else None
    for weight, u, v in edges:
        flag = state.same_scc(u, x) and state.same_scc(v, x)
        state.delete_edge(u, v)
        split = not state.same_scc(u, v)
        if split and flag:
            x = v
        if trace is not None:
            trace.steps.append(SingleStep(u, v, weight, flag, split, x))
        if debug:
            component = state.scc_members(state.scc_id(x))
            assert _induced_winner_set(graph, sorted(component)) <= reference, (
                "single-winner invariant violated"
            )
    if trace is not None:
        trace.result = x
    return x


def _find_all_winners_edges(
    graph: ComparisonGraph, debug: bool, trace: WinnerTrace | None
) -> list[int]:
    state = SccState(graph)
    candidates: set[int] = {state.scc_id(0)}
    edges = _sorted_edges(graph)
    if trace is not None:
        trace.mode = "all-edges"
        trace.edges = edges
        trace.n_vertices = graph.m
    i = 0
    while i < len(edges):
        weight = edges[i][0]
        record = BatchRecord(weight=weight)
        created: list[int] = []
        while i < len(edges) and edges[i][0] == weight:
            _, u, v = edges[i]
            i += 1
            scc = state.scc_id(u)
            flag = state.same_scc(u, v)
            new_ids = state.delete_edge(u, v)
            if not state.same_scc(u, v) and flag and scc in candidates:
                candidates.discard(scc)
                record.mutations.append(("remove", scc))
                # the old id stays attached to the surviving fragment, so it
                # is re-added alongside the fresh ids to cover all fragments
                fragments = [scc] + new_ids
                candidates.update(fragments)
                record.mutations.extend(("add", f) for f in fragments)
                created.extend(fragments)
        for scc in created:
            if state.in_degree(scc) > 0 and scc in candidates:
                candidates.discard(scc)
                record.mutations.append(("remove", scc))
        if trace is not None:
            trace.batches.append(record)
        if debug:
            union: set[int] = set()
            for scc in candidates:
                union |= _induced_winner_set(graph, sorted(state.scc_members(scc)))
            assert union == _induced_winner_set(graph, list(range(graph.m))), (
                "all-winners invariant violated"
            )
    winners = sorted(v for v in range(graph.m) if state.scc_id(v) in candidates)
    if trace is not None:
        trace.final_members = {scc: state.scc_members(scc) for scc in candidates}
        trace.result = winners
    return winners


def _find_all_winners_batch(
    graph: ComparisonGraph, debug: bool, trace: WinnerTrace | None
) -> list[int]:
    m = graph.m
    cand = np.ones(m, dtype=bool)
    if trace is not None:
        trace.mode = "all-batch"
        trace.n_vertices = m
    for report in iter_weight_levels(graph):
        if report.vertex_split.any():
            keep = ~report.vertex_split | report.indeg_zero
            dropped = np.nonzero(cand & ~keep)[0]
            cand &= keep
        else:
            dropped = np.empty(0, dtype=np.int64)
        if trace is not None:
            trace.batches.append(
                BatchRecord(weight=report.weight, dropped_vertices=dropped.tolist())
            )
        if debug:
            union: set[int] = set()
            for label in np.unique(report.labels[cand]):
                members = np.nonzero(report.labels == label)[0].tolist()
                union |= _induced_winner_set(graph, members)
            assert union == _induced_winner_set(graph, list(range(m))), (
                "all-winners invariant violated"
            )
    winners = np.nonzero(cand)[0].tolist()
    if trace is not None:
        trace.result = winners
    return winners


def find_all_winners(
    graph: ComparisonGraph,
    *,
    engine: str = "batch",
    debug: bool = False,
    trace: WinnerTrace | None = None,
) -> list[int]:
    """The exact winner set {u : B(u, v) >= B(v, u) for all v}, ascending.

    ``engine="batch"`` (default) uses the offline weight-level engine;
    ``engine="edges"`` deletes edges one by one through the decremental
    component structure. ``debug`` re-checks the candidate-components
    invariant against brute force after every batch (small graphs only).
    """
    if engine == "batch":
        winners = _find_all_winners_batch(graph, debug, trace)
    elif engine == "edges":
        winners = _find_all_winners_edges(graph, debug, trace)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    assert winners, "winner set is empty"
    return winners


def smith_set(graph: ComparisonGraph) -> list[int]:
    """Smallest non-empty set whose members pairwise-beat every outsider.

    Grown from a maximum-Copeland seed by repeatedly adding any outsider
    that ties or beats a member; every dominant set must contain the seed
    and is closed under this step, so the fixpoint is the minimum one.
    """
    w = graph.weight
    beats = w > w.T
    seed = int(np.argmax(beats.sum(axis=1)))
    member = np.zeros(graph.m, dtype=bool)
    member[seed] = True
    changed = True
    while changed:
        changed = False
        # outsider x joins if some member fails to beat x
        fails = ~beats[member].all(axis=0) & ~member
        if fails.any():
            member |= fails
            changed = True
    return np.nonzero(member)[0].tolist()
