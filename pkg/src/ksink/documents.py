"""JSON instance, hitting-set and solution documents.

Canonical documents are produced by ``json.dumps(doc, indent=2)`` plus a
trailing newline, so ``dump_instance(load_instance(text)) == text`` for any
canonical text. Vertex names are strings without ':'; edges are referred to
as e1, e2, ... in file order and interior sinks as ``e<i>:<offset>``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from ksink.evaluator import EvaluationResult
from ksink.hardness_gen import HittingSetInstance
from ksink.network_model import (
    DynamicNetwork,
    Edge,
    EdgePoint,
    Instance,
    Position,
    Vertex,
    canonical_position,
    validate,
)

INSTANCE_FORMAT = "ksink-instance"
SOLUTION_FORMAT = "ksink-solution"
HITTING_SET_FORMAT = "hitting-set"
VERSION = 1

_EDGE_TOKEN = re.compile(r"e(\d+):(-?\d+)")


class DocumentError(ValueError):
    """Malformed document; the message starts with the offending path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None


def _fields(obj, path: str, required: tuple[str, ...]) -> dict:
    if not isinstance(obj, dict):
        raise DocumentError(path, f"expected an object, got {type(obj).__name__}")
    for key in obj:
        if key not in required:
            raise DocumentError(f"{path}.{key}" if path else key, "unknown field")
    for key in required:
        if key not in obj:
            raise DocumentError(path, f"missing field {key!r}")
    return obj


def _int(value, path: str, minimum: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError(path, f"expected an integer, got {value!r}")
    if value < minimum:
        raise DocumentError(path, f"must be >= {minimum}, got {value}")
    return value


def _name(value, path: str) -> str:
    if not isinstance(value, str) or not value or ":" in value:
        raise DocumentError(path, f"vertex names are nonempty strings without ':', got {value!r}")
    return value


def _list(value, path: str) -> list:
    if not isinstance(value, list):
        raise DocumentError(path, f"expected a list, got {type(value).__name__}")
    return value


def _header(doc: dict, fmt: str) -> None:
    if doc["format"] != fmt:
        raise DocumentError("format", f"expected {fmt!r}, got {doc['format']!r}")
    if doc["version"] != VERSION:
        raise DocumentError("version", f"unsupported version {doc['version']!r}")


def parse_instance(text: str) -> Instance:
    doc = _fields(_loads(text), "", ("format", "version", "vertices", "edges", "sources", "k"))
    _header(doc, INSTANCE_FORMAT)
    vertices = [_name(v, f"vertices[{i}]") for i, v in enumerate(_list(doc["vertices"], "vertices"))]
    known = set(vertices)
    if len(known) != len(vertices):
        raise DocumentError("vertices", "duplicate vertex name")

    edges = []
    for i, rec in enumerate(_list(doc["edges"], "edges")):
        path = f"edges[{i}]"
        rec = _fields(rec, path, ("u", "v", "capacity", "transit"))
        u, v = _name(rec["u"], f"{path}.u"), _name(rec["v"], f"{path}.v")
        for end, x in (("u", u), ("v", v)):
            if x not in known:
                raise DocumentError(f"{path}.{end}", f"unknown vertex {x!r}")
        edges.append((u, v, _int(rec["capacity"], f"{path}.capacity", 0), _int(rec["transit"], f"{path}.transit", 1)))

    supply: dict = {}
    for i, rec in enumerate(_list(doc["sources"], "sources")):
        path = f"sources[{i}]"
        rec = _fields(rec, path, ("vertex", "supply"))
        s = _name(rec["vertex"], f"{path}.vertex")
        if s not in known:
            raise DocumentError(f"{path}.vertex", f"unknown vertex {s!r}")
        if s in supply:
            raise DocumentError(f"{path}.vertex", f"vertex {s!r} listed twice")
        supply[s] = _int(rec["supply"], f"{path}.supply", 0)

    network = DynamicNetwork.from_edges(edges, supply, vertices)
    problems = validate(network)
    if problems:
        raise DocumentError("edges", "; ".join(problems))
    return Instance(network, _int(doc["k"], "k", 1))


def instance_to_dict(instance: Instance) -> dict:
    net = instance.network
    return {
        "format": INSTANCE_FORMAT,
        "version": VERSION,
        "vertices": list(net.vertices),
        "edges": [
            {"u": e.u, "v": e.v, "capacity": e.capacity, "transit": e.transit} for e in net.edges
        ],
        "sources": [{"vertex": v, "supply": net.supply[v]} for v in net.vertices if v in net.supply],
        "k": instance.k,
    }


def dump(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def dump_instance(instance: Instance) -> str:
    return dump(instance_to_dict(instance))


def parse_hitting_set(text: str) -> HittingSetInstance:
    doc = _fields(_loads(text), "", ("format", "version", "universe", "family", "k"))
    _header(doc, HITTING_SET_FORMAT)
    universe = [_name(x, f"universe[{i}]") for i, x in enumerate(_list(doc["universe"], "universe"))]
    family = []
    for i, members in enumerate(_list(doc["family"], "family")):
        family.append([_name(x, f"family[{i}][{j}]") for j, x in enumerate(_list(members, f"family[{i}]"))])
    hs = HittingSetInstance(universe, family, _int(doc["k"], "k", 1))
    problems = hs.validate()
    if problems:
        raise DocumentError("family", "; ".join(problems))
    return hs


def dump_hitting_set(hs: HittingSetInstance) -> str:
    return dump(
        {
            "format": HITTING_SET_FORMAT,
            "version": VERSION,
            "universe": list(hs.universe),
            "family": [list(s) for s in hs.family],
            "k": hs.k,
        }
    )


def position_token(network: DynamicNetwork, pos: Position) -> str:
    if isinstance(pos, Vertex):
        return str(pos.id)
    return f"e{pos.edge + 1}:{pos.offset}"


def parse_position(network: DynamicNetwork, token: str) -> Position:
    """Parse ``<vertex>`` or ``e<i>:<offset>`` into a canonical position."""
    m = _EDGE_TOKEN.fullmatch(token)
    if m:
        index = int(m.group(1)) - 1
        if not 0 <= index < len(network.edges):
            raise DocumentError(token, "unknown edge")
        pos: Position = EdgePoint(index, int(m.group(2)))
    elif ":" in token:
        raise DocumentError(token, "edge positions look like e<index>:<offset>")
    else:
        if token not in network.rank:
            raise DocumentError(token, "unknown vertex")
        pos = Vertex(token)
    try:
        return canonical_position(network, pos)
    except ValueError as exc:
        raise DocumentError(token, str(exc)) from None


def eps_tag(epsilon: Fraction) -> str:
    return f"fptas eps={epsilon}"


def solution_to_dict(
    network: DynamicNetwork,
    solver: str,
    k: int,
    sinks,
    time: EvaluationResult,
    candidates: int | None = None,
    subsets_evaluated: int | None = None,
    wall_time: float | None = None,
) -> dict:
    doc = {
        "format": SOLUTION_FORMAT,
        "version": VERSION,
        "solver": solver,
        "k": k,
        "sinks": [position_token(network, p) for p in sinks],
        "evacuation_time": time.time if time.feasible else "infeasible",
    }
    if candidates is not None:
        doc["candidates"] = candidates
    if subsets_evaluated is not None:
        doc["subsets_evaluated"] = subsets_evaluated
    if wall_time is not None:
        doc["wall_time_s"] = round(wall_time, 6)
    return doc


def parse_solution(text: str) -> dict:
    doc = _loads(text)
    allowed = ("format", "version", "solver", "k", "sinks", "evacuation_time", "candidates", "subsets_evaluated", "wall_time_s")
    if not isinstance(doc, dict):
        raise DocumentError("", "expected an object")
    for key in doc:
        if key not in allowed:
            raise DocumentError(key, "unknown field")
    _header(doc, SOLUTION_FORMAT)
    return doc
