"""k-Sink Location on undirected dynamic networks.

Evaluate evacuation times for fixed sink sets through time-expanded
maximum flow, approximate the optimal sink placement by sampling
positions along edges, and build hard instances from Hitting Set.
"""

from ksink.network_model import (
    DynamicNetwork,
    Edge,
    EdgePoint,
    Instance,
    Vertex,
    all_integer_positions,
    canonical_position,
    make_sink_set,
    subdivide_at,
    validate,
)
from ksink.time_expansion import (
    Arc,
    DirectedDynamicNetwork,
    FlowResult,
    TimeExpandedGraph,
    build_time_expanded,
    feasible,
    max_flow,
)
from ksink.evaluator import (
    INFEASIBLE,
    EvaluationResult,
    evacuation_time,
    horizon_bounds,
    reduce_to_directed,
)
from ksink.fptas import (
    ApproxResult,
    CandidateSet,
    enumerate_k_subsets,
    sample_positions,
    solve_fptas,
)
from ksink.exact_oracle import BudgetExceeded, solve_exact, solve_exact_threshold
from ksink.hardness_gen import (
    HittingSetInstance,
    brute_force_hitting_set,
    from_hitting_set,
    verify_reduction,
)

__all__ = [
    "INFEASIBLE",
    "ApproxResult",
    "Arc",
    "BudgetExceeded",
    "CandidateSet",
    "DirectedDynamicNetwork",
    "DynamicNetwork",
    "Edge",
    "EdgePoint",
    "EvaluationResult",
    "FlowResult",
    "HittingSetInstance",
    "Instance",
    "TimeExpandedGraph",
    "Vertex",
    "all_integer_positions",
    "brute_force_hitting_set",
    "build_time_expanded",
    "canonical_position",
    "enumerate_k_subsets",
    "evacuation_time",
    "feasible",
    "from_hitting_set",
    "horizon_bounds",
    "make_sink_set",
    "max_flow",
    "reduce_to_directed",
    "sample_positions",
    "solve_exact",
    "solve_exact_threshold",
    "solve_fptas",
    "subdivide_at",
    "validate",
    "verify_reduction",
]
