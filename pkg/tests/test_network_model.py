import pytest
from hypothesis import given
from hypothesis import strategies as st

from ksink import (
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
from ksink.network_model import Subdivision
from strategies import networks


def test_valid_single_edge(single_edge):
    assert validate(single_edge) == []


def test_zero_transit_named():
    net = DynamicNetwork.from_edges([("u", "v", 1, 0)], {"u": 1})
    problems = validate(net)
    assert len(problems) == 1
    assert "e1" in problems[0] and "transit" in problems[0]


def test_unknown_source():
    net = DynamicNetwork(("u", "v"), (Edge("u", "v", 1, 2),), {"w": 3})
    problems = validate(net)
    assert len(problems) == 1
    assert "'w'" in problems[0]


@pytest.mark.parametrize(
    "edges, needle",
    [
        ([("u", "u", 1, 1)], "self-loop"),
        ([("u", "v", 1, 1), ("v", "u", 2, 3)], "parallel"),
        ([("u", "v", -1, 1)], "capacity"),
        ([("u", "v", 1, 1.5)], "transit"),
    ],
)
def test_rejected_shapes(edges, needle):
    net = DynamicNetwork.from_edges(edges, {"u": 1}, ["u", "v"])
    assert any(needle in p for p in validate(net))


def test_non_canonical_orientation_reported():
    net = DynamicNetwork(("u", "v"), (Edge("v", "u", 1, 1),), {})
    assert any("canonical" in p for p in validate(net))


def test_zero_capacity_is_legal(caplog):
    net = DynamicNetwork.from_edges([("u", "v", 0, 3)], {"u": 1})
    assert validate(net) == []
    assert "capacity 0" in caplog.text


def test_instance_k_checked(single_edge):
    assert Instance(single_edge, 1).validate() == []
    assert Instance(single_edge, 0).validate()


def test_from_edges_canonicalizes():
    net = DynamicNetwork.from_edges([("b", "a", 1, 3)], {}, ["a", "b"])
    assert net.edges == (Edge("a", "b", 1, 3),)


@pytest.mark.parametrize(
    "edges, expected",
    [
        ([("u", "v", 1, 4)], 5),
        ([("a", "b", 1, 1), ("b", "c", 1, 1), ("a", "c", 1, 1)], 3),
        ([("a", "b", 1, 2), ("b", "c", 1, 3)], 6),
    ],
)
def test_position_counts(edges, expected):
    net = DynamicNetwork.from_edges(edges)
    assert len(all_integer_positions(net)) == expected


def test_position_order(single_edge):
    assert all_integer_positions(single_edge) == [
        Vertex("u"),
        Vertex("v"),
        EdgePoint(0, 1),
        EdgePoint(0, 2),
        EdgePoint(0, 3),
    ]


@given(networks())
def test_position_count_formula(net):
    expected = len(net.vertices) + sum(e.transit - 1 for e in net.edges)
    positions = all_integer_positions(net)
    assert len(positions) == expected == len(set(positions))


def test_canonical_endpoints(single_edge):
    assert canonical_position(single_edge, EdgePoint(0, 0)) == Vertex("u")
    assert canonical_position(single_edge, EdgePoint(0, 4)) == Vertex("v")
    assert canonical_position(single_edge, EdgePoint(0, 2)) == EdgePoint(0, 2)
    with pytest.raises(ValueError):
        canonical_position(single_edge, EdgePoint(0, 5))
    with pytest.raises(ValueError):
        canonical_position(single_edge, Vertex("w"))


@given(networks(), st.data())
def test_canonicalization_idempotent(net, data):
    i = data.draw(st.integers(0, len(net.edges) - 1)) if net.edges else None
    if i is None:
        pos = Vertex(net.vertices[0])
    else:
        pos = EdgePoint(i, data.draw(st.integers(0, net.edges[i].transit)))
    once = canonical_position(net, pos)
    assert canonical_position(net, once) == once


def test_sink_set_rejects_aliases(single_edge):
    with pytest.raises(ValueError, match="duplicate"):
        make_sink_set(single_edge, [Vertex("u"), EdgePoint(0, 0)])
    assert make_sink_set(single_edge, [EdgePoint(0, 2), Vertex("v")]) == (Vertex("v"), EdgePoint(0, 2))


def test_subdivide_single_point():
    net = DynamicNetwork.from_edges([("u", "v", 2, 5)])
    sub, located = subdivide_at(net, [EdgePoint(0, 2)])
    x = located[EdgePoint(0, 2)]
    assert sub.vertices == ("u", "v", x)
    assert sub.edges == (Edge("u", x, 2, 2), Edge("v", x, 2, 3))
    assert validate(sub) == []


def test_subdivide_two_points():
    net = DynamicNetwork.from_edges([("u", "v", 2, 5)])
    sub, located = subdivide_at(net, [EdgePoint(0, 3), EdgePoint(0, 1)])
    assert [e.transit for e in sub.edges] == [1, 2, 2]
    assert len(located) == 2


def test_subdivide_empty_is_identity(single_edge):
    assert subdivide_at(single_edge, []) == (single_edge, {})


@pytest.mark.parametrize("point", [EdgePoint(0, 0), EdgePoint(0, 4), EdgePoint(1, 1), Vertex("u")])
def test_subdivide_rejects_non_interior(single_edge, point):
    with pytest.raises(ValueError, match="interior"):
        subdivide_at(single_edge, [point])


@given(networks(), st.data())
def test_subdivide_preserves_edges(net, data):
    interior = [p for p in all_integer_positions(net) if isinstance(p, EdgePoint)]
    points = data.draw(st.lists(st.sampled_from(interior), unique=True)) if interior else []
    sub, located = subdivide_at(net, points)
    assert len(sub.vertices) == len(net.vertices) + len(points)
    assert validate(sub) == []
    assert sub.supply == net.supply
    # Fragments replace their edge in place, so walk both edge lists together.
    fragments = iter(sub.edges)
    for i, e in enumerate(net.edges):
        pieces = [next(fragments) for _ in range(1 + sum(p.edge == i for p in points))]
        assert sum(f.transit for f in pieces) == e.transit
        assert all(f.capacity == e.capacity for f in pieces)


def test_subdivide_avoids_existing_ids():
    taken = Subdivision(0, 2)
    net = DynamicNetwork.from_edges([("u", taken, 1, 6)])
    sub, located = subdivide_at(net, [EdgePoint(0, 2)])
    assert located[EdgePoint(0, 2)] != taken
    assert len(set(sub.vertices)) == 3
