"""Instance and coloring files: canonical JSON with a version tag.

Instances carry the vertex count, one edge-list block per graph (with
optional roots / left-side annotations) and free-form metadata; the
emitter sorts keys and fixes indentation, so emit-parse-emit is
byte-identical and files diff cleanly.
"""

import json

from .system import (
    CoopColorError,
    CooperativeColoring,
    GraphSystem,
    build_system,
)

FORMAT_VERSION = 1


class MalformedFile(CoopColorError):
    pass


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedFile(f"{what} must be an integer, got {value!r}")
    return value


def emit_instance(s: GraphSystem, metadata: dict | None = None) -> str:
    """Serialize a system (annotations included) to canonical JSON."""
    graphs = []
    for j in range(s.m):
        block = {"id": j, "edges": [[int(u), int(v)] for u, v in s.edges[j]]}
        if s.roots[j] is not None:
            block["roots"] = sorted(int(r) for r in s.roots[j])
        if s.lefts[j] is not None:
            block["left"] = sorted(int(v) for v in s.lefts[j])
        graphs.append(block)
    doc = {
        "version": FORMAT_VERSION,
        "n": int(s.n),
        "graphs": graphs,
        "metadata": dict(metadata or {}),
    }
    return _dumps(doc)


def parse_instance(text: str):
    """Parse an instance file; returns (GraphSystem, metadata).

    Raises MalformedFile on anything that does not describe a valid
    system: bad JSON, wrong version, out-of-order graph ids, non-integer
    vertices, duplicate edges, broken annotations.
    """
    try:
        doc = json.loads(text)
    except ValueError as exc:
        raise MalformedFile(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedFile("top level must be an object")
    if doc.get("version") != FORMAT_VERSION:
        raise MalformedFile(f"unsupported version {doc.get('version')!r}")
    n = _int(doc.get("n"), "n")
    raw_graphs = doc.get("graphs")
    if not isinstance(raw_graphs, list):
        raise MalformedFile("graphs must be a list")

    edge_lists = []
    roots = []
    lefts = []
    for pos, block in enumerate(raw_graphs):
        if not isinstance(block, dict):
            raise MalformedFile(f"graph entry {pos} must be an object")
        if _int(block.get("id"), f"graph {pos} id") != pos:
            raise MalformedFile(f"graph ids must be 0..{len(raw_graphs) - 1} in order")
        raw_edges = block.get("edges")
        if not isinstance(raw_edges, list):
            raise MalformedFile(f"graph {pos}: edges must be a list")
        edges = []
        for e in raw_edges:
            if not isinstance(e, list) or len(e) != 2:
                raise MalformedFile(f"graph {pos}: edge {e!r} must be a pair")
            edges.append((_int(e[0], "edge endpoint"), _int(e[1], "edge endpoint")))
        edge_lists.append(edges)
        for key, store in (("roots", roots), ("left", lefts)):
            raw = block.get(key)
            if raw is None:
                store.append(None)
            elif isinstance(raw, list):
                store.append([_int(v, f"graph {pos} {key} entry") for v in raw])
            else:
                raise MalformedFile(f"graph {pos}: {key} must be a list")

    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise MalformedFile("metadata must be an object")
    try:
        system = build_system(n, edge_lists, roots=roots, lefts=lefts)
    except CoopColorError as exc:
        raise MalformedFile(f"not a valid system: {exc}") from exc
    return system, metadata


def emit_coloring(coloring: CooperativeColoring) -> str:
    doc = {"version": FORMAT_VERSION, "assignment": [int(j) for j in coloring.assignment]}
    return _dumps(doc)


def parse_coloring(text: str) -> CooperativeColoring:
    """Parse a coloring file; length and index range are checked against
    a system later, at verification time."""
    try:
        doc = json.loads(text)
    except ValueError as exc:
        raise MalformedFile(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise MalformedFile("top level must be an object")
    if doc.get("version") != FORMAT_VERSION:
        raise MalformedFile(f"unsupported version {doc.get('version')!r}")
    raw = doc.get("assignment")
    if not isinstance(raw, list):
        raise MalformedFile("assignment must be a list")
    assignment = []
    for v, j in enumerate(raw):
        j = _int(j, f"assignment[{v}]")
        if j < 0:
            raise MalformedFile(f"assignment[{v}] must be >= 0, got {j}")
        assignment.append(j)
    return CooperativeColoring(tuple(assignment))
