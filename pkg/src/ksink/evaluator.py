"""Evacuation time of a fixed sink set.

The undirected network is turned into a directed one: each edge becomes a
pair of opposite arcs, edges carrying interior sinks are cut at those
sinks, and every sink gets a zero-transit arc into a single collection
vertex. The evacuation time is then the smallest feasible horizon of that
directed network, found by binary search between a shortest-path lower
bound and a serialization upper bound.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from functools import total_ordering

from ksink.network_model import (
    DynamicNetwork,
    EdgePoint,
    Position,
    Vertex,
    make_sink_set,
)
from ksink.time_expansion import Arc, DirectedDynamicNetwork, feasible


@total_ordering
@dataclass(frozen=True)
class EvaluationResult:
    """Minimum evacuation horizon, or ``time=None`` when some supply is stranded.

    Infeasible compares greater than every finite time.
    """

    time: int | None

    @property
    def feasible(self) -> bool:
        return self.time is not None

    def _key(self):
        return (1, 0) if self.time is None else (0, self.time)

    def __lt__(self, other):
        if not isinstance(other, EvaluationResult):
            return NotImplemented
        return self._key() < other._key()

    def within(self, T: int) -> bool:
        return self.time is not None and self.time <= T

    def __str__(self):
        return "infeasible" if self.time is None else str(self.time)


INFEASIBLE = EvaluationResult(None)


@dataclass(frozen=True)
class SinkPoint:
    """Directed-network vertex standing for an interior sink."""

    edge: int
    offset: int


class _SuperSink:
    def __repr__(self):
        return "s*"

    def __reduce__(self):
        return "SUPER_SINK"


SUPER_SINK = _SuperSink()


def reduce_to_directed(network: DynamicNetwork, sinks: Iterable[Position]) -> DirectedDynamicNetwork:
    sinks = make_sink_set(network, sinks)
    cuts: dict[int, list[int]] = defaultdict(list)
    for p in sinks:
        if isinstance(p, EdgePoint):
            cuts[p.edge].append(p.offset)

    arcs = []
    for i, e in enumerate(network.edges):
        offsets = sorted(cuts.get(i, ()))
        chain = [e.u] + [SinkPoint(i, o) for o in offsets] + [e.v]
        marks = [0] + offsets + [e.transit]
        for a, b, ta, tb in zip(chain, chain[1:], marks, marks[1:]):
            arcs.append(Arc(a, b, e.capacity, tb - ta))
            arcs.append(Arc(b, a, e.capacity, tb - ta))

    demand = network.total_supply
    hosts = [p.id if isinstance(p, Vertex) else SinkPoint(p.edge, p.offset) for p in sinks]
    arcs.extend(Arc(x, SUPER_SINK, demand, 0) for x in hosts)

    interior = tuple(x for x in hosts if isinstance(x, SinkPoint))
    return DirectedDynamicNetwork(
        vertices=network.vertices + interior + (SUPER_SINK,),
        arcs=tuple(arcs),
        supply=dict(network.supply),
        collector=SUPER_SINK,
    )


def _distances_to_collector(net: DirectedDynamicNetwork) -> dict:
    # Dijkstra backwards from the collector over positive-capacity arcs.
    into = defaultdict(list)
    for a in net.arcs:
        if a.capacity > 0:
            into[a.head].append((a.tail, a.transit))
    dist = {net.collector: 0}
    heap = [(0, 0, net.collector)]
    order = 1
    while heap:
        d, _, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for w, t in into[v]:
            if d + t < dist.get(w, float("inf")):
                dist[w] = d + t
                heapq.heappush(heap, (d + t, order, w))
                order += 1
    return dist


def _bounds(net: DirectedDynamicNetwork) -> tuple[int, int] | None:
    dist = _distances_to_collector(net)
    lower = 0
    for s, q in net.supply.items():
        if q > 0:
            if s not in dist:
                return None
            lower = max(lower, dist[s])
    return lower, lower + net.total_supply


def horizon_bounds(network: DynamicNetwork, sinks: Iterable[Position]) -> tuple[int, int] | None:
    """Return ``(lower, upper)`` bracketing the evacuation time.

    `lower` is the largest shortest-path transit from a supplied vertex to
    its nearest sink over positive-capacity edges; `upper` adds the total
    supply, enough to send units one per time step. ``None`` means some
    supply cannot reach any sink.
    """
    return _bounds(reduce_to_directed(network, sinks))


def _first_feasible(net: DirectedDynamicNetwork, lo: int, hi: int) -> int:
    # Smallest T in [lo, hi] with feasible(T); hi must be feasible.
    while lo < hi:
        mid = (lo + hi) // 2
        if feasible(net, mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def evacuation_time(network: DynamicNetwork, sinks: Iterable[Position]) -> EvaluationResult:
    sinks = make_sink_set(network, sinks)
    if not sinks:
        raise ValueError("sink set must not be empty")
    net = reduce_to_directed(network, sinks)
    bounds = _bounds(net)
    if bounds is None:
        return INFEASIBLE
    return EvaluationResult(_first_feasible(net, *bounds))


def evacuation_time_below(
    network: DynamicNetwork, sinks: Iterable[Position], limit: int, lower: int | None = None
) -> EvaluationResult | None:
    """Evacuation time if it is strictly below `limit`, else None.

    Costs a single feasibility check when the answer is None. `lower` may
    pass in a precomputed lower bound.
    """
    net = reduce_to_directed(network, sinks)
    if lower is None:
        bounds = _bounds(net)
        if bounds is None:
            return None
        lower = bounds[0]
    if lower >= limit or not feasible(net, limit - 1):
        return None
    return EvaluationResult(_first_feasible(net, lower, limit - 1))


def evacuates_within(network: DynamicNetwork, sinks: Iterable[Position], T: int) -> bool:
    net = reduce_to_directed(network, sinks)
    bounds = _bounds(net)
    return bounds is not None and bounds[0] <= T and feasible(net, T)


class DistanceTable:
    """Shortest transit from every supplied vertex to every integer position.

    Gives the same lower bound as `horizon_bounds` without building the
    directed network, so subset searches can discard sink sets cheaply.
    """

    def __init__(self, network: DynamicNetwork):
        self.network = network
        adj = defaultdict(list)
        for e in network.edges:
            if e.capacity > 0:
                adj[e.u].append((e.v, e.transit))
                adj[e.v].append((e.u, e.transit))
        self._from = {
            s: _dijkstra(adj, s) for s, q in network.supply.items() if q > 0
        }

    def distance(self, source, pos: Position) -> float:
        d = self._from[source]
        if isinstance(pos, Vertex):
            return d.get(pos.id, float("inf"))
        e = self.network.edges[pos.edge]
        if e.capacity == 0:
            return float("inf")
        inf = float("inf")
        return min(d.get(e.u, inf) + pos.offset, d.get(e.v, inf) + e.transit - pos.offset)

    def lower_bound(self, sinks: Iterable[Position]) -> float:
        """Largest source-to-nearest-sink distance; inf when some supply is stranded."""
        sinks = tuple(sinks)
        return max(
            (min(self.distance(s, p) for p in sinks) for s in self._from),
            default=0,
        )


def _dijkstra(adj, start) -> dict:
    dist = {start: 0}
    heap = [(0, 0, start)]
    order = 1
    while heap:
        d, _, v = heapq.heappop(heap)
        if d > dist[v]:
            continue
        for w, t in adj[v]:
            if d + t < dist.get(w, float("inf")):
                dist[w] = d + t
                heapq.heappush(heap, (d + t, order, w))
                order += 1
    return dist
