"""Small reference graphs used across tests, docs and the CLI examples."""

from __future__ import annotations

from typing import Sequence

import networkx as nx

from .graph import EmbeddedGraph, VertexId, sorted_ids


def k4(ids: Sequence[VertexId] = ("A", "B", "C", "D")) -> EmbeddedGraph:
    """The complete graph on four vertices, embedded with the largest id trapped.

    For ids (a, b, c, d) in sorted order the outer face is the triangle
    (a, c, b) and d sits inside it.
    """
    a, b, c, d = sorted_ids(ids)
    rotation = {
        a: (c, d, b),
        b: (a, d, c),
        c: (b, d, a),
        d: (a, c, b),
    }
    return EmbeddedGraph.build((a, b, c, d), rotation, outer_face=(a, c, b))


def triangle(ids: Sequence[VertexId] = ("A", "B", "C")) -> EmbeddedGraph:
    """K3: a fixture for graph-core only; MPG operations reject it."""
    a, b, c = sorted_ids(ids)
    rotation = {a: (b, c), b: (c, a), c: (a, b)}
    g = EmbeddedGraph.build((a, b, c), rotation)
    return g.with_outer(g.faces[0])


def path(ids: Sequence[VertexId]) -> EmbeddedGraph:
    """A path graph through ids in the given order."""
    vs = tuple(ids)
    rotation: dict[VertexId, tuple[VertexId, ...]] = {}
    for i, v in enumerate(vs):
        ring = []
        if i > 0:
            ring.append(vs[i - 1])
        if i < len(vs) - 1:
            ring.append(vs[i + 1])
        rotation[v] = tuple(ring)
    g = EmbeddedGraph.build(vs, rotation)
    return g.with_outer(g.faces[0])


def k5_minus_e_inner() -> EmbeddedGraph:
    """K5 minus one edge, built by inserting E inside face ACD of K4.

    Trapped vertices are D and E; the missing edge is B-E.
    """
    from .ops import inside_create

    g, _ = inside_create(k4(), ("A", "C", "D"), "E")
    return g


def k5_minus_e_outer() -> EmbeddedGraph:
    """K5 minus one edge, built by adding E in the infinite face of K4.

    C becomes trapped; the boundary is the triangle A, B, E; the missing
    edge is D-E.
    """
    from .ops import outside_create

    g, _ = outside_create(k4(), "C", "E")
    return g


K33_MINUS_E_COUNTRIES = ("A", "B", "C", "D", "E", "F")

#: Bipartite parts {A, C, E} x {B, D, F} with the A-F edge removed.
K33_MINUS_E_EDGES = (
    ("A", "B"),
    ("A", "D"),
    ("C", "B"),
    ("C", "D"),
    ("C", "F"),
    ("E", "B"),
    ("E", "D"),
    ("E", "F"),
)


def k33_minus_e_map() -> dict:
    """Six countries whose adjacency is K3,3 minus one border."""
    return {
        "countries": list(K33_MINUS_E_COUNTRIES),
        "borders": [list(e) for e in K33_MINUS_E_EDGES],
    }


def k5_map() -> dict:
    """Five mutually bordering countries; has no planar realization."""
    names = ["A", "B", "C", "D", "E"]
    return {
        "countries": names,
        "borders": [[u, v] for i, u in enumerate(names) for v in names[i + 1:]],
    }


def icosahedron() -> EmbeddedGraph:
    """The icosahedron: a 5-regular maximal planar graph on 12 vertices.

    No degree-3 vertex exists, so reduction cannot start on it.
    """
    graph = nx.icosahedral_graph()
    planar, emb = nx.check_planarity(graph)
    assert planar
    rotation = {v: tuple(emb.neighbors_cw_order(v)) for v in sorted(graph.nodes())}
    g = EmbeddedGraph.build(sorted(graph.nodes()), rotation)
    return g.with_outer(g.faces[0])
