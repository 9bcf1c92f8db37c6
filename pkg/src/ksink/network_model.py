"""Dynamic networks, sink positions and problem instances.

Vertex identifiers are opaque hashables. Their order is the order of the
network's vertex list, which is what "canonical" refers to below: every
stored edge runs from the earlier vertex to the later one, and interior
positions are measured as an integer transit offset from that earlier
endpoint.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Edge:
    u: Hashable
    v: Hashable
    capacity: int
    transit: int


@dataclass(frozen=True)
class Vertex:
    """A sink placed on a vertex."""

    id: Hashable


@dataclass(frozen=True)
class EdgePoint:
    """A sink placed `offset` transit steps from the canonical start of `edge`.

    `edge` indexes into `DynamicNetwork.edges`.
    """

    edge: int
    offset: int


Position = Union[Vertex, EdgePoint]
SinkSet = tuple  # tuple[Position, ...] in canonical position order


@dataclass(frozen=True)
class Subdivision:
    """Fresh vertex id created by `subdivide_at`."""

    edge: int
    offset: int
    tag: int = 0


@dataclass(frozen=True)
class DynamicNetwork:
    vertices: tuple
    edges: tuple[Edge, ...]
    supply: dict = field(default_factory=dict, hash=False)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple],
        supply: Mapping | None = None,
        vertices: Iterable | None = None,
    ) -> DynamicNetwork:
        """Build a network from ``(u, v, capacity, transit)`` tuples.

        Vertices default to their order of first appearance (edge endpoints
        first, then sources). Edge orientation is made canonical.
        """
        supply = dict(supply or {})
        edges = [tuple(e) for e in edges]
        if vertices is None:
            seen: dict = {}
            for u, v, *_ in edges:
                seen.setdefault(u, None)
                seen.setdefault(v, None)
            for s in supply:
                seen.setdefault(s, None)
            vertices = list(seen)
        vertices = tuple(vertices)
        rank = {v: i for i, v in enumerate(vertices)}
        canon = []
        for u, v, c, t in edges:
            if u in rank and v in rank and rank[v] < rank[u]:
                u, v = v, u
            canon.append(Edge(u, v, c, t))
        return cls(vertices, tuple(canon), supply)

    @cached_property
    def rank(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @property
    def total_supply(self) -> int:
        return sum(s for s in self.supply.values() if s > 0)

    def sigma(self, v) -> int:
        return self.supply.get(v, 0)

    def edge_index(self, u, v) -> int:
        """Index of the edge joining `u` and `v` (either order)."""
        for i, e in enumerate(self.edges):
            if {e.u, e.v} == {u, v}:
                return i
        raise KeyError(f"no edge between {u!r} and {v!r}")

    def relabel(self, mapping: Mapping) -> DynamicNetwork:
        """Rename vertices; list order, edge order and orientation are kept."""
        return DynamicNetwork(
            tuple(mapping[v] for v in self.vertices),
            tuple(Edge(mapping[e.u], mapping[e.v], e.capacity, e.transit) for e in self.edges),
            {mapping[s]: q for s, q in self.supply.items()},
        )


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def validate(network: DynamicNetwork) -> list[str]:
    """Return a description of every violated network invariant.

    Zero-capacity edges are legal and only logged.
    """
    problems = []
    counts = Counter(network.vertices)
    for v, n in counts.items():
        if n > 1:
            problems.append(f"vertex {v!r} listed {n} times")
    rank = network.rank
    pairs: dict = {}
    for i, e in enumerate(network.edges):
        name = f"edge e{i + 1} ({e.u!r}, {e.v!r})"
        missing = [x for x in (e.u, e.v) if x not in rank]
        for x in missing:
            problems.append(f"{name}: endpoint {x!r} is not a vertex")
        if e.u == e.v:
            problems.append(f"{name}: self-loop")
        elif not missing:
            if rank[e.u] > rank[e.v]:
                problems.append(f"{name}: endpoints not in canonical order")
            key = frozenset((e.u, e.v))
            if key in pairs:
                problems.append(f"{name}: parallel to edge e{pairs[key] + 1}")
            else:
                pairs[key] = i
        if not _is_int(e.transit) or e.transit < 1:
            problems.append(f"{name}: transit must be an integer >= 1, got {e.transit!r}")
        if not _is_int(e.capacity) or e.capacity < 0:
            problems.append(f"{name}: capacity must be an integer >= 0, got {e.capacity!r}")
        elif e.capacity == 0:
            logger.warning("%s has capacity 0 and cannot carry flow", name)
    for s, q in network.supply.items():
        if s not in rank:
            problems.append(f"source {s!r} is not a vertex")
        if not _is_int(q) or q < 0:
            problems.append(f"source {s!r}: supply must be an integer >= 0, got {q!r}")
    return problems


def check(network: DynamicNetwork) -> None:
    problems = validate(network)
    if problems:
        raise ValueError("invalid network: " + "; ".join(problems))


@dataclass(frozen=True)
class Instance:
    network: DynamicNetwork
    k: int

    def validate(self) -> list[str]:
        problems = validate(self.network)
        if not _is_int(self.k) or self.k < 1:
            problems.append(f"k must be a positive integer, got {self.k!r}")
        return problems


def all_integer_positions(network: DynamicNetwork) -> list[Position]:
    """Every vertex, then every interior integer point edge by edge."""
    positions: list[Position] = [Vertex(v) for v in network.vertices]
    for i, e in enumerate(network.edges):
        positions.extend(EdgePoint(i, o) for o in range(1, e.transit))
    return positions


def canonical_position(network: DynamicNetwork, pos: Position) -> Position:
    """Map endpoint offsets to the matching `Vertex`; reject invalid positions."""
    if isinstance(pos, Vertex):
        if pos.id not in network.rank:
            raise ValueError(f"unknown vertex {pos.id!r}")
        return pos
    if not 0 <= pos.edge < len(network.edges):
        raise ValueError(f"unknown edge index {pos.edge}")
    e = network.edges[pos.edge]
    if not _is_int(pos.offset) or not 0 <= pos.offset <= e.transit:
        raise ValueError(f"offset {pos.offset!r} outside [0, {e.transit}] on edge e{pos.edge + 1}")
    if pos.offset == 0:
        return Vertex(e.u)
    if pos.offset == e.transit:
        return Vertex(e.v)
    return pos


def position_key(network: DynamicNetwork, pos: Position) -> tuple:
    if isinstance(pos, Vertex):
        return (0, network.rank[pos.id], 0)
    return (1, pos.edge, pos.offset)


def make_sink_set(network: DynamicNetwork, positions: Iterable[Position]) -> SinkSet:
    """Canonicalize, reject duplicates, and sort into enumeration order."""
    canon = [canonical_position(network, p) for p in positions]
    dupes = [p for p, n in Counter(canon).items() if n > 1]
    if dupes:
        raise ValueError(f"duplicate sink positions: {dupes}")
    return tuple(sorted(canon, key=lambda p: position_key(network, p)))


def subdivide_at(
    network: DynamicNetwork, points: Iterable[EdgePoint]
) -> tuple[DynamicNetwork, dict[EdgePoint, Hashable]]:
    """Turn each interior point into a fresh vertex.

    An edge carrying points at offsets o1 < ... < oj is replaced, in place,
    by j + 1 fragments of transit o1, o2 - o1, ..., tau - oj, all with the
    original capacity. New vertices are appended after the existing ones in
    (edge, offset) order.
    """
    by_edge: dict[int, set[int]] = defaultdict(set)
    for p in points:
        if (
            not isinstance(p, EdgePoint)
            or not 0 <= p.edge < len(network.edges)
            or not 0 < p.offset < network.edges[p.edge].transit
        ):
            raise ValueError(f"{p!r} is not an interior point of any edge")
        by_edge[p.edge].add(p.offset)
    if not by_edge:
        return network, {}

    taken = set(network.vertices)
    located: dict[EdgePoint, Hashable] = {}
    for i in sorted(by_edge):
        for o in sorted(by_edge[i]):
            tag = 0
            while Subdivision(i, o, tag) in taken:
                tag += 1
            located[EdgePoint(i, o)] = Subdivision(i, o, tag)
            taken.add(Subdivision(i, o, tag))

    vertices = network.vertices + tuple(located.values())
    rank = {v: r for r, v in enumerate(vertices)}
    edges = []
    for i, e in enumerate(network.edges):
        if i not in by_edge:
            edges.append(e)
            continue
        offsets = sorted(by_edge[i])
        chain = [e.u] + [located[EdgePoint(i, o)] for o in offsets] + [e.v]
        marks = [0] + offsets + [e.transit]
        for a, b, ta, tb in zip(chain, chain[1:], marks, marks[1:]):
            if rank[b] < rank[a]:
                a, b = b, a
            edges.append(Edge(a, b, e.capacity, tb - ta))
    return DynamicNetwork(vertices, tuple(edges), dict(network.supply)), located
