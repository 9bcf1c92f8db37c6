"""Approximate k-sink placement by sampling positions along every edge.

Each edge e gets candidate points every t_e = max(1, floor(eps * tau(e)))
transit steps from its canonical start, so no point of the edge is more
than t_e / 2 away from a candidate. All k-subsets of the candidates are
evaluated and the best one is returned.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice

from ksink.evaluator import (
    INFEASIBLE,
    DistanceTable,
    EvaluationResult,
    evacuation_time,
    evacuation_time_below,
)
from ksink.network_model import (
    DynamicNetwork,
    EdgePoint,
    Instance,
    Position,
    SinkSet,
    Vertex,
)


def as_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction, "p/q" or decimal string, or float.

    Floats go through their shortest repr, so 0.1 becomes 1/10.
    """
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, str):
        value = value.strip()
    return Fraction(value)


def stride(epsilon: Fraction, transit: int) -> int:
    return max(1, math.floor(epsilon * transit))


@dataclass(frozen=True)
class CandidateSet:
    positions: tuple[Position, ...]
    epsilon: Fraction

    def __len__(self):
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def offsets(self, edge: int) -> list[int]:
        return [p.offset for p in self.positions if isinstance(p, EdgePoint) and p.edge == edge]


@dataclass(frozen=True)
class ApproxResult:
    sinks: SinkSet
    time: EvaluationResult
    epsilon: Fraction
    candidates_evaluated: int  # number of sink sets examined
    num_candidates: int


def sample_positions(network: DynamicNetwork, epsilon) -> CandidateSet:
    eps = as_fraction(epsilon)
    if eps <= 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    positions: list[Position] = [Vertex(v) for v in network.vertices]
    for i, e in enumerate(network.edges):
        positions.extend(EdgePoint(i, o) for o in range(stride(eps, e.transit), e.transit, stride(eps, e.transit)))
    return CandidateSet(tuple(positions), eps)


def subset_count(n: int, k: int) -> int:
    return math.comb(n, k) if k <= n else 1


def enumerate_k_subsets(candidates: Sequence[Position], k: int) -> Iterator[SinkSet]:
    """All k-subsets in lexicographic index order; the full set when k > n."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    candidates = tuple(candidates)
    if k > len(candidates):
        yield candidates
        return
    yield from combinations(candidates, k)


def _scan(network: DynamicNetwork, candidates: tuple, k: int, start: int, stop: int):
    # Lexicographically first minimizer over subsets [start, stop). A subset
    # only replaces the incumbent if strictly faster, which keeps the answer
    # identical to evaluating every subset in full.
    table = DistanceTable(network)
    best_sinks, best = None, INFEASIBLE
    for sinks in islice(enumerate_k_subsets(candidates, k), start, stop):
        if best_sinks is None:
            best_sinks, best = sinks, evacuation_time(network, sinks)
            continue
        lower = table.lower_bound(sinks)
        if lower == math.inf:
            continue
        if best.feasible:
            res = evacuation_time_below(network, sinks, best.time, lower=int(lower))
        else:
            res = evacuation_time(network, sinks)
        if res is not None and res < best:
            best_sinks, best = sinks, res
    return best, best_sinks


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    size = max(1, math.ceil(total / parts))
    return [(a, min(a + size, total)) for a in range(0, total, size)]


def best_subset(
    network: DynamicNetwork, candidates: Sequence[Position], k: int, parallelism: int = 1
) -> tuple[SinkSet, EvaluationResult, int]:
    """Minimize evacuation time over all k-subsets of `candidates`.

    Ties go to the lexicographically smallest subset, so the result does not
    depend on `parallelism`. Returns (sinks, time, subsets examined).
    """
    candidates = tuple(candidates)
    total = subset_count(len(candidates), k)
    if parallelism <= 1 or total < 2:
        best, sinks = _scan(network, candidates, k, 0, total)
        return sinks, best, total
    ranges = _chunks(total, 4 * parallelism)
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        futures = [pool.submit(_scan, network, candidates, k, a, b) for a, b in ranges]
        results = [f.result() for f in futures]
    best, sinks = results[0]
    for res, s in results[1:]:
        if res < best:
            best, sinks = res, s
    return sinks, best, total


def check_instance(instance: Instance) -> None:
    problems = instance.validate()
    if problems:
        raise ValueError("invalid instance: " + "; ".join(problems))


def solve_fptas(instance: Instance, epsilon, parallelism: int = 1) -> ApproxResult:
    check_instance(instance)
    cands = sample_positions(instance.network, epsilon)
    sinks, time, count = best_subset(instance.network, cands.positions, instance.k, parallelism)
    return ApproxResult(sinks, time, cands.epsilon, count, len(cands))
