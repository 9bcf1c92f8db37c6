"""Random small instances for property checks and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ksink.hardness_gen import HittingSetInstance
from ksink.network_model import DynamicNetwork, EdgePoint, Instance, all_integer_positions


@dataclass(frozen=True)
class CorpusConfig:
    max_vertices: int = 8
    max_edges: int = 12
    max_transit: int = 6
    max_capacity: int = 3
    max_total_supply: int = 10
    k_choices: tuple[int, ...] = (1, 2)


def random_network(rng: random.Random, cfg: CorpusConfig = CorpusConfig(), connected: bool = True) -> DynamicNetwork:
    """Random network; with `connected`, a spanning tree of positive capacity.

    Edges off the tree may have capacity 0. Vertices are named "v0", "v1", ...
    """
    n = rng.randint(2, cfg.max_vertices)
    names = [f"v{i}" for i in range(n)]
    pairs = set()
    if connected:
        for i in range(1, n):
            pairs.add((rng.randrange(i), i))
    m = rng.randint(len(pairs) or 1, min(cfg.max_edges, n * (n - 1) // 2))
    while len(pairs) < m:
        a, b = sorted(rng.sample(range(n), 2))
        pairs.add((a, b))
    tree = set(pairs) if connected else set()
    edges = []
    for a, b in sorted(pairs):
        low = 1 if (a, b) in tree else 0
        edges.append((names[a], names[b], rng.randint(low, cfg.max_capacity), rng.randint(1, cfg.max_transit)))

    total = rng.randint(1, cfg.max_total_supply)
    holders = rng.sample(names, rng.randint(1, min(n, total)))
    supply = dict.fromkeys(holders, 1)
    for _ in range(total - len(holders)):
        supply[rng.choice(holders)] += 1
    return DynamicNetwork.from_edges(edges, supply, names)


def random_instance(rng: random.Random, cfg: CorpusConfig = CorpusConfig()) -> Instance:
    return Instance(random_network(rng, cfg), rng.choice(cfg.k_choices))


def random_sinks(rng: random.Random, network: DynamicNetwork, k: int, interior_bias: float = 0.5):
    """k distinct positions, favouring several interior points on one edge."""
    positions = all_integer_positions(network)
    interior = [p for p in positions if isinstance(p, EdgePoint)]
    picked: list = []
    if interior and rng.random() < interior_bias:
        edge = rng.choice(interior).edge
        same = [p for p in interior if p.edge == edge]
        picked = rng.sample(same, min(len(same), rng.randint(1, k)))
    rest = [p for p in positions if p not in picked]
    picked += rng.sample(rest, min(len(rest), k - len(picked)))
    return picked


def random_hitting_set(rng: random.Random, max_universe: int = 6, max_sets: int = 6) -> HittingSetInstance:
    n = rng.randint(1, max_universe)
    universe = [chr(ord("a") + i) for i in range(n)]
    family = [
        sorted(rng.sample(universe, rng.randint(1, n)))
        for _ in range(rng.randint(0, max_sets))
    ]
    return HittingSetInstance(universe, family, rng.randint(1, n))

