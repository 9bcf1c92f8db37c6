"""Exhaustive search over every integer position.

Only meant for small instances: the number of positions grows with the
transit times, so the search refuses to start once the number of k-subsets
exceeds a budget.
"""

from __future__ import annotations

from typing import NamedTuple

from ksink.evaluator import EvaluationResult, evacuates_within
from ksink.fptas import best_subset, check_instance, enumerate_k_subsets, subset_count
from ksink.network_model import Instance, SinkSet, all_integer_positions

DEFAULT_BUDGET = 5_000_000


class BudgetExceeded(ValueError):
    def __init__(self, positions: int, k: int, budget: int):
        self.positions, self.k, self.budget = positions, k, budget
        super().__init__(
            f"exhaustive search needs C({positions}, {k}) = {subset_count(positions, k)} "
            f"sink sets, over the budget of {budget}"
        )


class ExactResult(NamedTuple):
    sinks: SinkSet
    time: EvaluationResult


def _positions_within_budget(instance: Instance, budget: int):
    check_instance(instance)
    positions = all_integer_positions(instance.network)
    if subset_count(len(positions), instance.k) > budget:
        raise BudgetExceeded(len(positions), instance.k, budget)
    return positions


def solve_exact(instance: Instance, budget: int = DEFAULT_BUDGET, parallelism: int = 1) -> ExactResult:
    positions = _positions_within_budget(instance, budget)
    sinks, time, _ = best_subset(instance.network, positions, instance.k, parallelism)
    return ExactResult(sinks, time)


def solve_exact_threshold(instance: Instance, T: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Does some k-subset of positions evacuate everything by time T?"""
    positions = _positions_within_budget(instance, budget)
    subsets = enumerate_k_subsets(positions, instance.k)
    return any(evacuates_within(instance.network, s, T) for s in subsets)
