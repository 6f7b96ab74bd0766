"""File formats: graph and log JSON, plain edge lists, DOT export.

All serializers are byte-stable: keys are sorted, collections are emitted in
canonical order, and output text is newline-terminated.  Vertex ids may be
integers or strings; JSON object keys carry them as strings and the parser
maps them back through the declared vertex list.
"""

from __future__ import annotations

import json
from typing import Iterable

from .coloring import COLOR_NAMES, Coloring
from .errors import StructureError
from .graph import EmbeddedGraph, FaceWalk, VertexId, sorted_ids, vertex_key
from .mapcolor import MapColoring, MapDoc
from .ops import OpEntry, OpKind, OpLog
from .triangulate import AddedEdge, TriangulationRecord


def stable_dumps(obj) -> str:
    """Deterministic single-line JSON, newline-terminated."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _id_table(vertices: Iterable[VertexId]) -> dict[str, VertexId]:
    table: dict[str, VertexId] = {}
    for v in vertices:
        key = str(v)
        if key in table:
            raise StructureError(f"vertex ids {table[key]!r} and {v!r} collide as {key!r}")
        table[key] = v
    return table


def _parse_id(raw) -> VertexId:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise StructureError(f"vertex id must be an int or a str, got {raw!r}")
    return raw


# -- graph JSON ---------------------------------------------------------------


def graph_to_json(g: EmbeddedGraph) -> dict:
    doc = {
        "vertices": list(g.vertices),
        "edges": [list(e) for e in g.edges()],
        "rotation": {str(v): list(ring) for v, ring in g.rotation.items()},
    }
    if g.outer_face is not None:
        doc["outer_face"] = list(g.outer_face.vertices)
    return doc


def graph_from_json(doc: dict) -> EmbeddedGraph:
    """Rebuild a graph; with no rotation present, an embedding is computed."""
    if not isinstance(doc, dict) or "vertices" not in doc or "edges" not in doc:
        raise StructureError("graph document needs 'vertices' and 'edges'")
    vertices = [_parse_id(v) for v in doc["vertices"]]
    edges = [tuple(_parse_id(x) for x in e) for e in doc["edges"]]
    if "rotation" in doc and doc["rotation"] is not None:
        table = _id_table(vertices)
        rotation = {}
        for key, ring in doc["rotation"].items():
            if key not in table:
                raise StructureError(f"rotation names unknown vertex {key!r}")
            rotation[table[key]] = tuple(_parse_id(x) for x in ring)
        outer = doc.get("outer_face")
        g = EmbeddedGraph.build(
            vertices, rotation, outer_face=[_parse_id(x) for x in outer] if outer else None
        )
        declared = {frozenset(e) for e in edges}
        actual = {frozenset(e) for e in g.edges()}
        if declared != actual:
            raise StructureError("edge list does not match the rotation system")
        return g
    from .embedding import compute_embedding

    if sorted_ids({v for e in edges for v in e}) != sorted_ids(vertices):
        raise StructureError("edge list does not cover the declared vertices exactly")
    return compute_embedding(edges)


# -- plain edge-list text -----------------------------------------------------


def graph_to_edgelist(g: EmbeddedGraph) -> str:
    """One ``u v`` pair per line.  Tokens that look like integers are integers."""
    lines = [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def edgelist_to_edges(text: str) -> list[tuple[VertexId, VertexId]]:
    edges: list[tuple[VertexId, VertexId]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise StructureError(f"line {lineno}: expected 'u v', got {line!r}")
        pair = tuple(int(p) if p.lstrip("-").isdigit() else p for p in parts)
        edges.append(pair)
    if not edges:
        raise StructureError("edge list text contains no edges")
    return edges


# -- operation logs -----------------------------------------------------------


def oplog_to_json(log: OpLog) -> list[dict]:
    out = []
    for entry in log:
        item = {
            "op": "in" if entry.kind.is_inside else "out",
            "v": entry.vertex,
            "anchors": list(entry.anchors),
        }
        if entry.entrapped is not None:
            item["entrap"] = entry.entrapped
        out.append(item)
    return out


def oplog_from_json(items: list, direction: str = "annihilate") -> OpLog:
    """Parse a log; ``direction`` says whether entries annihilate or create."""
    if direction not in ("annihilate", "create"):
        raise StructureError(f"direction must be 'annihilate' or 'create', got {direction!r}")
    kinds = {
        ("in", "annihilate"): OpKind.INSIDE_ANNIHILATE,
        ("out", "annihilate"): OpKind.OUTSIDE_ANNIHILATE,
        ("in", "create"): OpKind.INSIDE_CREATE,
        ("out", "create"): OpKind.OUTSIDE_CREATE,
    }
    entries = []
    for item in items:
        if not isinstance(item, dict) or "op" not in item or "v" not in item or "anchors" not in item:
            raise StructureError(f"log entry needs 'op', 'v' and 'anchors': {item!r}")
        op = item["op"]
        if op not in ("in", "out"):
            raise StructureError(f"unknown op {op!r}")
        anchors = sorted_ids(_parse_id(a) for a in item["anchors"])
        if len(anchors) != 3:
            raise StructureError(f"log entry needs three anchors: {item!r}")
        entrap = item.get("entrap")
        entries.append(
            OpEntry(
                kinds[(op, direction)],
                _parse_id(item["v"]),
                anchors,
                entrapped=_parse_id(entrap) if entrap is not None else None,
            )
        )
    return OpLog(tuple(entries))


# -- triangulation records ----------------------------------------------------


def record_to_json(record: TriangulationRecord) -> dict:
    doc: dict = {"added": [{"u": e.u, "v": e.v} for e in record.added]}
    if record.original_outer is not None:
        doc["outer_face"] = list(record.original_outer.vertices)
    return doc


def record_from_json(doc: dict) -> TriangulationRecord:
    if not isinstance(doc, dict) or "added" not in doc:
        raise StructureError("triangulation record needs an 'added' list")
    added = []
    for item in doc["added"]:
        u, v = _parse_id(item["u"]), _parse_id(item["v"])
        added.append(AddedEdge(u, v))
    outer = doc.get("outer_face")
    return TriangulationRecord(
        tuple(added),
        original_outer=FaceWalk.from_sequence(_parse_id(x) for x in outer) if outer else None,
    )


# -- colorings ----------------------------------------------------------------


def coloring_to_json(coloring: Coloring) -> dict:
    ordered = sorted(coloring.assignment, key=vertex_key)
    return {
        "colors": {str(v): coloring.assignment[v] for v in ordered},
        "palette": [COLOR_NAMES[c] for c in sorted(COLOR_NAMES)],
    }


def coloring_from_json(doc: dict, g: EmbeddedGraph) -> Coloring:
    if not isinstance(doc, dict) or "colors" not in doc:
        raise StructureError("coloring document needs a 'colors' table")
    table = _id_table(g.vertices)
    assignment = {}
    for key, value in doc["colors"].items():
        if key not in table:
            raise StructureError(f"coloring names unknown vertex {key!r}")
        if not isinstance(value, int) or isinstance(value, bool):
            raise StructureError(f"color of {key!r} must be an integer, got {value!r}")
        assignment[table[key]] = value
    return Coloring(assignment)


# -- maps ---------------------------------------------------------------------


def map_from_json(doc: dict) -> MapDoc:
    if not isinstance(doc, dict) or "countries" not in doc or "borders" not in doc:
        raise StructureError("map document needs 'countries' and 'borders'")
    return MapDoc.build(doc["countries"], doc["borders"])


def map_to_json(m: MapDoc) -> dict:
    return {
        "countries": list(m.countries),
        "borders": [list(b) for b in m.borders],
    }


def map_coloring_to_json(result: MapColoring) -> dict:
    doc: dict = {
        "colors": dict(sorted(result.colors.items())),
        "palette": list(result.palette),
    }
    provenance: dict = {}
    if result.triangulation is not None:
        provenance["triangulation"] = record_to_json(result.triangulation)
    if result.log is not None:
        provenance["log"] = oplog_to_json(result.log)
    doc["provenance"] = provenance
    return doc


# -- DOT export ----------------------------------------------------------------


def graph_to_dot(g: EmbeddedGraph, coloring: Coloring | None = None) -> str:
    """Deterministic DOT text; nodes and edges are ordered by vertex id."""
    lines = ["graph fourcolor {"]
    if coloring is not None:
        lines.append("  node [style=filled];")
    for v in g.vertices:
        if coloring is not None:
            name = COLOR_NAMES[coloring.color_of(v)]
            lines.append(f'  "{v}" [fillcolor={name}];')
        else:
            lines.append(f'  "{v}";')
    for u, v in g.edges():
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
