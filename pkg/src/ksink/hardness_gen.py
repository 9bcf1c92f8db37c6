"""Sink location instances built from Hitting Set.

Elements and sets become the two sides of a bipartite graph with unit
capacity and unit transit everywhere, and every set vertex holds one unit
of supply. A hitting set of size at most k exists exactly when k sinks can
collect all supply within one time step.
"""

from __future__ import annotations

import math
from collections.abc import Hashable
from dataclasses import dataclass
from itertools import combinations

from ksink.exact_oracle import DEFAULT_BUDGET, BudgetExceeded, solve_exact_threshold
from ksink.network_model import DynamicNetwork, Edge, Instance


@dataclass(frozen=True)
class HittingSetInstance:
    universe: tuple
    family: tuple[tuple, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "universe", tuple(self.universe))
        object.__setattr__(self, "family", tuple(tuple(s) for s in self.family))

    def validate(self) -> list[str]:
        problems = []
        if len(set(self.universe)) != len(self.universe):
            problems.append("universe lists an element twice")
        known = set(self.universe)
        for i, members in enumerate(self.family):
            if not members:
                problems.append(f"set {i + 1} is empty")
            if len(set(members)) != len(members):
                problems.append(f"set {i + 1} repeats an element")
            for x in members:
                if x not in known:
                    problems.append(f"set {i + 1}: {x!r} is not in the universe")
        if not isinstance(self.k, int) or self.k < 1:
            problems.append(f"k must be a positive integer, got {self.k!r}")
        return problems


def _check(hs: HittingSetInstance) -> None:
    problems = hs.validate()
    if problems:
        raise ValueError("invalid hitting set instance: " + "; ".join(problems))


def set_vertex_names(hs: HittingSetInstance) -> list[Hashable]:
    """Names "S1", "S2", ... padded with primes until they avoid the universe."""
    taken = set(hs.universe)
    names = []
    for i in range(len(hs.family)):
        name = f"S{i + 1}"
        while name in taken:
            name += "'"
        taken.add(name)
        names.append(name)
    return names


def from_hitting_set(hs: HittingSetInstance) -> Instance:
    _check(hs)
    sets = set_vertex_names(hs)
    edges = [
        Edge(x, name, 1, 1)
        for name, members in zip(sets, hs.family)
        for x in hs.universe
        if x in members
    ]
    network = DynamicNetwork(
        vertices=hs.universe + tuple(sets),
        edges=tuple(edges),
        supply={name: 1 for name in sets},
    )
    return Instance(network, hs.k)


def brute_force_hitting_set(hs: HittingSetInstance, budget: int = DEFAULT_BUDGET) -> bool:
    """Is there a subset of at most k elements meeting every set?"""
    _check(hs)
    n = len(hs.universe)
    size = min(hs.k, n)
    if sum(math.comb(n, i) for i in range(size + 1)) > budget:
        raise BudgetExceeded(n, hs.k, budget)
    family = [set(s) for s in hs.family]
    return any(
        all(members.intersection(pick) for members in family)
        for r in range(size + 1)
        for pick in combinations(hs.universe, r)
    )


def verify_reduction(hs: HittingSetInstance, budget: int = DEFAULT_BUDGET) -> bool:
    """True when both sides of the equivalence give the same answer."""
    return brute_force_hitting_set(hs, budget) == solve_exact_threshold(from_hitting_set(hs), 1, budget)
