"""Planar embedding of plain edge lists.

Thin bridge to networkx's left-right planarity test.  The returned rotation
system is validated post hoc through the Euler identity in
:meth:`EmbeddedGraph.build`, so correctness does not rest on the library
alone.  Output is deterministic for a fixed input edge list.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import networkx as nx

from .errors import DisconnectedError, NonPlanarError, StructureError
from .graph import EmbeddedGraph, VertexId, sorted_ids, vertex_key


def normalize_edges(
    edges: Iterable[Sequence[VertexId]],
) -> tuple[tuple[VertexId, VertexId], ...]:
    """Validate an edge list: pairs of distinct ids, loops rejected.

    Duplicate unordered pairs are collapsed.  The result is sorted
    canonically, which also fixes the embedding's determinism.
    """
    seen: set[tuple] = set()
    out: list[tuple[VertexId, VertexId]] = []
    for e in edges:
        pair = tuple(e)
        if len(pair) != 2:
            raise StructureError(f"edge {pair!r} does not have two endpoints")
        u, v = pair
        vertex_key(u), vertex_key(v)
        if u == v:
            raise StructureError(f"loop at {u!r} is not allowed")
        if vertex_key(v) < vertex_key(u):
            u, v = v, u
        if (u, v) in seen:
            continue
        seen.add((u, v))
        out.append((u, v))
    if not out:
        raise StructureError("empty edge list")
    out.sort(key=lambda p: (vertex_key(p[0]), vertex_key(p[1])))
    return tuple(out)


def compute_embedding(edges: Iterable[Sequence[VertexId]]) -> EmbeddedGraph:
    """Embed a simple connected edge list in the plane.

    Returns an :class:`EmbeddedGraph` whose traced faces satisfy
    V - E + F = 2, with the canonically smallest face designated as outer.
    Raises :class:`NonPlanarError` (with a witness subgraph) or
    :class:`DisconnectedError`.
    """
    simple = normalize_edges(edges)
    vertices = sorted_ids({v for e in simple for v in e})

    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(simple)
    if not nx.is_connected(graph):
        comps = [sorted_ids(c) for c in nx.connected_components(graph)]
        raise DisconnectedError(f"edge list describes {len(comps)} components")

    planar, result = nx.check_planarity(graph, counterexample=True)
    if not planar:
        witness = tuple(sorted(
            (tuple(sorted(e, key=vertex_key)) for e in result.edges()),
            key=lambda p: (vertex_key(p[0]), vertex_key(p[1])),
        ))
        raise NonPlanarError(
            f"no planar embedding exists; witness has {len(witness)} edges",
            witness=witness,
        )

    rotation = {v: tuple(result.neighbors_cw_order(v)) for v in vertices}
    g = EmbeddedGraph.build(vertices, rotation)
    return g.with_outer(g.faces[0])
