"""Discrete-time flows over time on directed networks.

A directed dynamic network is unrolled over horizon T into a static
network with one node per (vertex, time step) and solved with a static
maximum-flow routine. Flow may wait at any vertex. An arc of capacity c
admits c units departing per time step.
"""

from __future__ import annotations

from collections.abc import Hashable
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

# Arc kinds in a TimeExpandedGraph.
MOVE, HOLD, SUPPLY, COLLECT = range(4)


@dataclass(frozen=True)
class Arc:
    tail: Hashable
    head: Hashable
    capacity: int
    transit: int


@dataclass(frozen=True)
class DirectedDynamicNetwork:
    vertices: tuple
    arcs: tuple[Arc, ...]
    supply: dict = field(hash=False)
    collector: Hashable

    @property
    def total_supply(self) -> int:
        return sum(s for s in self.supply.values() if s > 0)

    def validate(self) -> list[str]:
        problems = []
        known = set(self.vertices)
        if len(known) != len(self.vertices):
            problems.append("duplicate vertices")
        if self.collector not in known:
            problems.append(f"collection vertex {self.collector!r} is not a vertex")
        for a in self.arcs:
            if a.tail not in known or a.head not in known:
                problems.append(f"arc {a.tail!r}->{a.head!r} has an unknown endpoint")
            if a.capacity < 0 or a.transit < 0:
                problems.append(f"arc {a.tail!r}->{a.head!r} has negative capacity or transit")
        for s in self.supply:
            if s not in known:
                problems.append(f"source {s!r} is not a vertex")
        return problems


@dataclass(frozen=True, eq=False)
class TimeExpandedGraph:
    """Static flow network over nodes (v, t), 0 <= t <= horizon.

    Node (v, t) has index ``rank(v) * (horizon + 1) + t``; the super-source
    and super-sink follow the layered nodes. Arcs are stored as parallel
    arrays grouped movement, holdover, supply, collection.
    """

    vertices: tuple
    horizon: int
    tail: np.ndarray
    head: np.ndarray
    capacity: np.ndarray
    kind: np.ndarray

    @property
    def layers(self) -> int:
        return self.horizon + 1

    @property
    def num_nodes(self) -> int:
        return len(self.vertices) * self.layers + 2

    @property
    def source(self) -> int:
        return self.num_nodes - 2

    @property
    def sink(self) -> int:
        return self.num_nodes - 1

    def node(self, v, t: int) -> int:
        return self.vertices.index(v) * self.layers + t

    def label(self, index: int):
        """Inverse of `node`; terminals are labelled "source" and "sink"."""
        if index == self.source:
            return "source"
        if index == self.sink:
            return "sink"
        r, t = divmod(index, self.layers)
        return self.vertices[r], t

    def count(self, kind: int) -> int:
        return int(np.count_nonzero(self.kind == kind))


@dataclass(frozen=True, eq=False)
class FlowResult:
    value: int
    flow: np.ndarray | None = None  # per arc of the TimeExpandedGraph


def build_time_expanded(net: DirectedDynamicNetwork, T: int) -> TimeExpandedGraph:
    if T < 0:
        raise ValueError(f"horizon must be nonnegative, got {T}")
    layers = T + 1
    rank = {v: i for i, v in enumerate(net.vertices)}
    n_layered = len(net.vertices) * layers
    source, sink = n_layered, n_layered + 1
    unbounded = net.total_supply

    tails, heads, caps, kinds = [], [], [], []

    def add(t, h, c, k):
        tails.append(t)
        heads.append(h)
        caps.append(np.broadcast_to(np.asarray(c, dtype=np.int64), t.shape))
        kinds.append(np.full(t.shape, k, dtype=np.int8))

    for a in net.arcs:
        if a.capacity == 0 or a.transit > T:
            continue
        steps = np.arange(layers - a.transit)
        add(rank[a.tail] * layers + steps, rank[a.head] * layers + steps + a.transit, a.capacity, MOVE)

    if T > 0:
        base = (np.arange(len(net.vertices)) * layers)[:, None]
        starts = (base + np.arange(T)).ravel()
        add(starts, starts + 1, unbounded, HOLD)

    sources = [v for v in net.vertices if net.supply.get(v, 0) > 0]
    add(
        np.full(len(sources), source),
        np.array([rank[v] * layers for v in sources], dtype=np.int64),
        [net.supply[v] for v in sources],
        SUPPLY,
    )

    steps = np.arange(layers)
    add(rank[net.collector] * layers + steps, np.full(layers, sink), unbounded, COLLECT)

    return TimeExpandedGraph(
        vertices=tuple(net.vertices),
        horizon=T,
        tail=np.concatenate(tails).astype(np.int64),
        head=np.concatenate(heads).astype(np.int64),
        capacity=np.concatenate(caps).astype(np.int64),
        kind=np.concatenate(kinds),
    )


def max_flow(graph: TimeExpandedGraph, with_flow: bool = True) -> FlowResult:
    """Exact integral maximum flow from the super-source to the super-sink."""
    n = graph.num_nodes
    if graph.capacity.sum() == 0:
        return FlowResult(0, np.zeros(len(graph.tail), dtype=np.int64) if with_flow else None)
    matrix = csr_matrix(
        (graph.capacity.astype(np.int32), (graph.tail, graph.head)), shape=(n, n)
    )
    res = maximum_flow(matrix, graph.source, graph.sink, method="dinic")
    value = int(res.flow_value)
    if not with_flow:
        return FlowResult(value)
    return FlowResult(value, _arc_flows(graph, res.flow.tocsr()))


def _arc_flows(graph: TimeExpandedGraph, net_flow) -> np.ndarray:
    # The solver reports net flow per node pair; split it over parallel arcs.
    pair_flow = np.asarray(net_flow[graph.tail, graph.head]).ravel().astype(np.int64)
    flow = np.zeros(len(graph.tail), dtype=np.int64)
    remaining: dict[tuple[int, int], int] = {}
    for i, (t, h) in enumerate(zip(graph.tail.tolist(), graph.head.tolist())):
        left = remaining.setdefault((t, h), max(int(pair_flow[i]), 0))
        f = min(left, int(graph.capacity[i]))
        flow[i] = f
        remaining[(t, h)] = left - f
    return flow


def feasible(net: DirectedDynamicNetwork, T: int) -> bool:
    """Can every positive supply reach the collection vertex by time T?"""
    demand = net.total_supply
    if demand == 0:
        return True
    return max_flow(build_time_expanded(net, T), with_flow=False).value == demand
