import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ksink import (
    INFEASIBLE,
    DynamicNetwork,
    EdgePoint,
    EvaluationResult,
    Instance,
    Vertex,
    enumerate_k_subsets,
    evacuation_time,
    sample_positions,
    solve_exact,
    solve_fptas,
)
from ksink.fptas import as_fraction, best_subset, stride
from strategies import networks

EPSILONS = [Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(2, 3), Fraction(1, 10)]


def edge(transit):
    return DynamicNetwork.from_edges([("u", "v", 1, transit)], {"u": 1})


@pytest.mark.parametrize(
    "transit, eps, offsets",
    [
        (10, "1/2", [5]),
        (10, "0.1", list(range(1, 10))),
        (3, "2", []),
        (7, "1/3", [2, 4, 6]),
    ],
)
def test_sampled_offsets(transit, eps, offsets):
    cands = sample_positions(edge(transit), eps)
    assert cands.offsets(0) == offsets
    assert cands.positions[:2] == (Vertex("u"), Vertex("v"))


def test_epsilon_parsing():
    assert as_fraction("0.1") == Fraction(1, 10)
    assert as_fraction(0.1) == Fraction(1, 10)
    assert as_fraction("3/4") == Fraction(3, 4)
    assert stride(Fraction(3, 10), 10) == 3  # float 0.3 * 10 would floor to 2


@pytest.mark.parametrize("eps", ["0", "-1/2"])
def test_nonpositive_epsilon(eps):
    with pytest.raises(ValueError):
        sample_positions(edge(4), eps)


@given(networks(max_transit=12), st.sampled_from(EPSILONS))
def test_candidate_gaps(net, eps):
    cands = sample_positions(net, eps)
    assert {Vertex(v) for v in net.vertices} <= set(cands.positions)
    for i, e in enumerate(net.edges):
        marks = [0] + cands.offsets(i) + [e.transit]
        assert max(b - a for a, b in zip(marks, marks[1:])) <= stride(eps, e.transit)


def test_enumeration_counts():
    items = list("abcd")
    assert len(list(enumerate_k_subsets(items, 2))) == 6
    assert list(enumerate_k_subsets(items, 4)) == [tuple(items)]
    assert list(enumerate_k_subsets(items, 1)) == [(x,) for x in items]
    assert list(enumerate_k_subsets(items, 9)) == [tuple(items)]
    assert list(enumerate_k_subsets(items, 2))[:3] == [("a", "b"), ("a", "c"), ("a", "d")]


def test_path_middle_wins():
    net = DynamicNetwork.from_edges([("a", "b", 1, 1), ("b", "c", 1, 1)], {"a": 1, "c": 1})
    for x, t in (("a", 2), ("b", 1), ("c", 2)):
        assert evacuation_time(net, [Vertex(x)]) == EvaluationResult(t)
    res = solve_fptas(Instance(net, 1), "1/2")
    assert res.sinks == (Vertex("b"),)
    assert res.time == EvaluationResult(1)
    assert res.candidates_evaluated == 3


@pytest.mark.parametrize("eps", ["1/4", "1", "3"])
def test_sink_on_only_source(eps):
    net = DynamicNetwork.from_edges([("a", "u", 2, 3), ("u", "b", 1, 5)], {"u": 4}, ["a", "u", "b"])
    res = solve_fptas(Instance(net, 1), eps)
    assert res.sinks == (Vertex("u"),) and res.time == EvaluationResult(0)


def test_all_subsets_infeasible():
    net = DynamicNetwork.from_edges([("a", "b", 1, 1), ("c", "d", 1, 1)], {"a": 1, "c": 1})
    res = solve_fptas(Instance(net, 1), "1/2")
    assert res.time == INFEASIBLE
    assert res.sinks == (Vertex("a"),)  # lexicographically first subset


def test_invalid_instance_rejected(single_edge):
    with pytest.raises(ValueError):
        solve_fptas(Instance(single_edge, 0), "1/2")


def full_enumeration(net, positions, k):
    # Reference: evaluate every subset, keep the first minimum.
    best = None
    for sinks in enumerate_k_subsets(positions, k):
        res = evacuation_time(net, sinks)
        if best is None or res < best[1]:
            best = (sinks, res)
    return best


@given(networks(max_vertices=4, max_edges=4), st.sampled_from([1, 2]), st.sampled_from(EPSILONS))
def test_pruned_search_matches_full_enumeration(net, k, eps):
    cands = sample_positions(net, eps).positions
    sinks, res, _ = best_subset(net, cands, k)
    assert (sinks, res) == full_enumeration(net, cands, k)


@given(networks(max_vertices=4, max_edges=5), st.sampled_from([1, 2]), st.sampled_from(EPSILONS))
def test_guarantee_and_conservativeness(net, k, eps):
    inst = Instance(net, k)
    approx = solve_fptas(inst, eps).time
    exact = solve_exact(inst).time
    assert approx >= exact
    if exact.feasible:
        assert approx.time <= (1 + eps) * exact.time
    else:
        assert approx == exact


@given(networks(max_vertices=4, max_edges=5), st.sampled_from([1, 2]))
def test_finer_epsilon_never_worse(net, k):
    # Only comparable when the candidate sets are nested.
    inst = Instance(net, k)
    coarse, fine = (sample_positions(net, e) for e in ("1/2", "1/4"))
    if set(coarse.positions) <= set(fine.positions):
        assert solve_fptas(inst, "1/4").time <= solve_fptas(inst, "1/2").time


@given(networks(max_vertices=5, max_edges=6, connected=True), st.sampled_from([1, 2]))
def test_parallel_runs_agree(net, k):
    inst = Instance(net, k)
    assert solve_fptas(inst, "1/2") == solve_fptas(inst, "1/2", parallelism=3)


def test_candidate_count_reported():
    net = DynamicNetwork.from_edges([("u", "v", 1, 10), ("v", "w", 1, 4)], {"u": 1})
    res = solve_fptas(Instance(net, 2), "1/2")
    assert res.num_candidates == 3 + 1 + 1
    assert res.candidates_evaluated == math.comb(5, 2)


@given(networks(max_transit=40), st.sampled_from(EPSILONS))
def test_interior_count_bound(net, eps):
    # floor(eps * tau) > eps * tau / 2 once it is at least 1, hence < 2/eps gaps.
    cands = sample_positions(net, eps)
    for i, e in enumerate(net.edges):
        assert len(cands.offsets(i)) <= min(e.transit - 1, math.ceil(2 / eps) - 1)
