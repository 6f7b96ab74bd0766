"""Creation and annihilation of degree-3 vertices on maximal planar graphs.

A creation inserts a fresh vertex into a triangular face (interior or the
infinite one) and joins it to the three face vertices; an annihilation is
the exact inverse: it removes a degree-3 vertex together with its three
edges.  Both keep the graph maximal planar and change (V, E, F) by
(+1, +3, +2) and (-1, -3, -2) respectively.

Every operation returns the new graph plus an :class:`OpEntry` describing
it; sequences of entries form an :class:`OpLog`, which can be reversed into
the script that rebuilds the graph step by step.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Literal, Sequence

from .errors import OperationError, StuckError
from .graph import (
    EmbeddedGraph,
    FaceWalk,
    VertexClass,
    VertexId,
    canonical_ring,
    classify_vertex,
    is_mpg,
    set_outer_face,
    sorted_ids,
    vertex_key,
)

Strategy = Literal["trapped-first", "any"]


class OpKind(Enum):
    INSIDE_CREATE = "inside-create"
    OUTSIDE_CREATE = "outside-create"
    INSIDE_ANNIHILATE = "inside-annihilate"
    OUTSIDE_ANNIHILATE = "outside-annihilate"

    @property
    def is_inside(self) -> bool:
        return self in (OpKind.INSIDE_CREATE, OpKind.INSIDE_ANNIHILATE)

    @property
    def is_create(self) -> bool:
        return self in (OpKind.INSIDE_CREATE, OpKind.OUTSIDE_CREATE)

    @property
    def inverse(self) -> "OpKind":
        return _INVERSE[self]


_INVERSE = {
    OpKind.INSIDE_CREATE: OpKind.INSIDE_ANNIHILATE,
    OpKind.INSIDE_ANNIHILATE: OpKind.INSIDE_CREATE,
    OpKind.OUTSIDE_CREATE: OpKind.OUTSIDE_ANNIHILATE,
    OpKind.OUTSIDE_ANNIHILATE: OpKind.OUTSIDE_CREATE,
}


@dataclass(frozen=True)
class OpEntry:
    """One creation or annihilation event.

    ``anchors`` is the id-sorted triangle the vertex attaches to.  For the
    outside variants ``entrapped`` names the anchor that is enclosed while
    the vertex exists; it is what lets a replay restore the outer face
    designation exactly, not just the abstract graph.
    """

    kind: OpKind
    vertex: VertexId
    anchors: tuple[VertexId, VertexId, VertexId]
    entrapped: VertexId | None = None

    def __post_init__(self):
        if len(self.anchors) != 3 or len(set(self.anchors)) != 3:
            raise OperationError(f"anchors must be three distinct vertices, got {self.anchors!r}")
        if self.vertex in self.anchors:
            raise OperationError(f"vertex {self.vertex!r} cannot anchor itself")
        if self.entrapped is not None and self.entrapped not in self.anchors:
            raise OperationError(f"entrapped vertex {self.entrapped!r} is not an anchor")

    @property
    def inverse(self) -> "OpEntry":
        return OpEntry(self.kind.inverse, self.vertex, self.anchors, self.entrapped)

    def notation(self) -> str:
        """Compact label, e.g. ``in(F)_BCE`` or ``out(C)_BDE``."""
        tag = "in" if self.kind.is_inside else "out"
        return f"{tag}({self.vertex})_" + "".join(str(a) for a in self.anchors)

    def __str__(self) -> str:
        return self.notation()


@dataclass(frozen=True)
class OpLog:
    """An ordered, reversible sequence of operation entries."""

    entries: tuple[OpEntry, ...] = ()

    def reversed(self) -> "OpLog":
        """Flip the order and invert every entry.

        The reversal of an annihilation log is the creation script that
        rebuilds the original graph from the reduced one, and vice versa.
        """
        return OpLog(tuple(e.inverse for e in self.entries[::-1]))

    def kinds(self) -> tuple[OpKind, ...]:
        return tuple(e.kind for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[OpEntry]:
        return iter(self.entries)

    def __str__(self) -> str:
        return "[" + ", ".join(e.notation() for e in self.entries) + "]"


# -- shared helpers -----------------------------------------------------------


def _require_mpg_with_outer(g: EmbeddedGraph, op: str) -> None:
    if not is_mpg(g):
        raise OperationError(f"{op} requires a maximal planar graph with V >= 4")
    if g.outer_face is None:
        raise OperationError(f"{op} requires a designated outer face")


def _require_fresh(g: EmbeddedGraph, v: VertexId) -> None:
    vertex_key(v)
    if v in g.rotation:
        raise OperationError(f"vertex {v!r} is already present")


def _split_face(
    g: EmbeddedGraph, walk: FaceWalk, v: VertexId, new_outer: FaceWalk | None
) -> EmbeddedGraph:
    """Insert v inside the triangular face ``walk`` and join it to all corners.

    For every directed walk edge (p, q), v lands in rotation(q) immediately
    after p; rotation(v) is the reversed walk.  This replaces the face with
    the three triangles (p, q, v).  The result is normalized but not
    re-validated; callers guarantee the preconditions.
    """
    w0, w1, w2 = walk.vertices
    rotation = dict(g.rotation)
    for p, q in walk.edges:
        ring = list(rotation[q])
        ring.insert(ring.index(p) + 1, v)
        rotation[q] = canonical_ring(ring)
    rotation[v] = canonical_ring((w0, w2, w1))
    return EmbeddedGraph(sorted_ids(g.vertices + (v,)), rotation, new_outer)


def _remove_vertex(g: EmbeddedGraph, v: VertexId) -> dict[VertexId, tuple[VertexId, ...]]:
    rotation = {}
    for u, ring in g.rotation.items():
        if u == v:
            continue
        rotation[u] = canonical_ring(tuple(x for x in ring if x != v)) if v in ring else ring
    return rotation


# -- creation -----------------------------------------------------------------


def inside_create(
    g: EmbeddedGraph, face: Iterable[VertexId], v: VertexId
) -> tuple[EmbeddedGraph, OpEntry]:
    """Insert v inside an interior triangular face given by its three corners.

    v ends up adjacent to exactly the three corners and is trapped; the
    outer face and the boundary vertices are untouched.
    """
    _require_mpg_with_outer(g, "inside_create")
    _require_fresh(g, v)
    anchors = sorted_ids(face)
    if len(anchors) != 3:
        raise OperationError(f"a face is named by three distinct vertices, got {anchors!r}")
    target = frozenset(anchors)
    walk = next((f for f in g.faces if f.vertex_set == target), None)
    if walk is None:
        raise OperationError(f"{tuple(anchors)!r} is not a traced face")
    if walk == g.outer_face:
        raise OperationError(
            f"{tuple(anchors)!r} is the outer face; use outside_create to grow outward"
        )
    g2 = _split_face(g, walk, v, new_outer=g.outer_face)
    return g2, OpEntry(OpKind.INSIDE_CREATE, v, anchors)


def outside_create(
    g: EmbeddedGraph, entrap: VertexId, v: VertexId
) -> tuple[EmbeddedGraph, OpEntry]:
    """Insert v in the infinite face, joined to all three boundary vertices.

    ``entrap`` picks which of the three current boundary vertices falls
    inside: the new outer face is the triangle on v and the other two.
    """
    _require_mpg_with_outer(g, "outside_create")
    _require_fresh(g, v)
    outer = g.outer_face
    if entrap not in outer.vertex_set:
        raise OperationError(f"{entrap!r} is not one of the boundary vertices {outer}")
    anchors = sorted_ids(outer.vertex_set)
    # The face of the split that avoids the entrapped vertex stays outside.
    (p, q) = next(e for e in outer.edges if entrap not in e)
    g2 = _split_face(g, outer, v, new_outer=FaceWalk.from_sequence((p, q, v)))
    return g2, OpEntry(OpKind.OUTSIDE_CREATE, v, anchors, entrapped=entrap)


# -- annihilation ---------------------------------------------------------------


def _require_removable(g: EmbeddedGraph, v: VertexId, op: str) -> None:
    _require_mpg_with_outer(g, op)
    if v not in g.rotation:
        raise OperationError(f"vertex {v!r} is not in the graph")
    if g.degree(v) != 3:
        raise OperationError(f"{op} needs degree exactly 3; {v!r} has degree {g.degree(v)}")
    if len(g.vertices) < 5:
        raise OperationError(f"{op} would shrink the graph below four vertices")


def inside_annihilate(g: EmbeddedGraph, v: VertexId) -> tuple[EmbeddedGraph, OpEntry]:
    """Remove a trapped degree-3 vertex and its three edges.

    The three former neighbors bound the merged face; the outer face is
    unchanged.  Exact inverse of :func:`inside_create`.
    """
    _require_removable(g, v, "inside_annihilate")
    if classify_vertex(g, v) is not VertexClass.TRAPPED:
        raise OperationError(f"{v!r} is a boundary vertex; use outside_annihilate")
    anchors = sorted_ids(g.neighbors(v))
    g2 = EmbeddedGraph(sorted_ids(set(g.vertices) - {v}), _remove_vertex(g, v), g.outer_face)
    return g2, OpEntry(OpKind.INSIDE_ANNIHILATE, v, anchors)


def outside_annihilate(g: EmbeddedGraph, v: VertexId) -> tuple[EmbeddedGraph, OpEntry]:
    """Remove a degree-3 boundary vertex: two boundary edges and one inner edge.

    The new outer face is the triangle on v's three former neighbors.  Exact
    inverse of :func:`outside_create`.
    """
    _require_removable(g, v, "outside_annihilate")
    if classify_vertex(g, v) is not VertexClass.BOUNDARY:
        raise OperationError(f"{v!r} is trapped; use inside_annihilate")
    anchors = sorted_ids(g.neighbors(v))
    outer = g.outer_face.vertices
    i = outer.index(v)
    pred, succ = outer[i - 1], outer[(i + 1) % 3]
    inner = next(u for u in anchors if u not in (pred, succ))
    g2 = EmbeddedGraph(sorted_ids(set(g.vertices) - {v}), _remove_vertex(g, v), None)
    merged = g2.trace_from(succ, pred)
    g2 = g2.with_outer(merged)
    return g2, OpEntry(OpKind.OUTSIDE_ANNIHILATE, v, anchors, entrapped=inner)


def annihilate(g: EmbeddedGraph, v: VertexId) -> tuple[EmbeddedGraph, OpEntry]:
    """Dispatch to the inside or outside variant by v's classification."""
    if classify_vertex(g, v) is VertexClass.TRAPPED:
        return inside_annihilate(g, v)
    return outside_annihilate(g, v)


def apply_creation(g: EmbeddedGraph, entry: OpEntry) -> EmbeddedGraph:
    """Apply a creation-kind entry to g, reproducing the recorded insertion."""
    if not entry.kind.is_create:
        raise OperationError(f"{entry} is not a creation entry")
    if entry.kind is OpKind.INSIDE_CREATE:
        g2, _ = inside_create(g, entry.anchors, entry.vertex)
        return g2
    if g.outer_face is None or g.outer_face.vertex_set != frozenset(entry.anchors):
        raise OperationError(
            f"anchors of {entry} are not the current boundary {g.outer_face}"
        )
    # Foreign logs may omit the entrapped vertex; fall back deterministically.
    entrap = entry.entrapped if entry.entrapped is not None else entry.anchors[0]
    g2, _ = outside_create(g, entrap, entry.vertex)
    return g2


# -- search and reduction -------------------------------------------------------


def find_degree3(
    g: EmbeddedGraph, strategy: Strategy = "any"
) -> tuple[VertexId, VertexClass] | None:
    """Lowest-id degree-3 vertex under the given strategy, or None.

    ``trapped-first`` prefers trapped candidates over boundary ones; ``any``
    ignores the classification.  ``any`` is the default throughout the
    toolkit: it is what the reduction walkthroughs actually do, whereas a
    strict trapped preference can never produce an outside annihilation on a
    five-vertex graph (one of its two degree-3 vertices is always enclosed).
    """
    _require_mpg_with_outer(g, "find_degree3")
    if strategy not in ("trapped-first", "any"):
        raise OperationError(f"unknown strategy {strategy!r}")
    candidates = [v for v in g.vertices if g.degree(v) == 3]
    if not candidates:
        return None
    if strategy == "trapped-first":
        boundary = g.boundary_vertices()
        trapped = [v for v in candidates if v not in boundary]
        if trapped:
            v = trapped[0]
            return v, VertexClass.TRAPPED
    v = candidates[0]
    return v, classify_vertex(g, v)


def reduce_to_k4(
    g: EmbeddedGraph, strategy: Strategy = "any"
) -> tuple[EmbeddedGraph, OpLog]:
    """Annihilate degree-3 vertices one by one until four vertices remain.

    Returns the residual K4 and the annihilation log (length V - 4).  When
    no degree-3 vertex exists the outer face is re-selected over every face
    once; since degrees do not depend on that choice this cannot create a
    candidate, and :class:`StuckError` is raised with the irreducible graph.
    """
    _require_mpg_with_outer(g, "reduce_to_k4")
    entries: list[OpEntry] = []
    while len(g.vertices) > 4:
        found = find_degree3(g, strategy)
        if found is None:
            for face in g.faces:
                found = find_degree3(set_outer_face(g, face), strategy)
                if found is not None:  # pragma: no cover - degree is embedding-invariant
                    g = set_outer_face(g, face)
                    break
        if found is None:
            raise StuckError(
                f"no degree-3 vertex on {len(g.vertices)} vertices; reduction cannot proceed",
                graph=g,
                degree_multiset=g.degree_multiset(),
            )
        v, cls = found
        if cls is VertexClass.TRAPPED:
            g, entry = inside_annihilate(g, v)
        else:
            g, entry = outside_annihilate(g, v)
        entries.append(entry)
    return g, OpLog(tuple(entries))


# -- generator ------------------------------------------------------------------


def random_induced_mpg(n: int, seed: int) -> tuple[EmbeddedGraph, OpLog]:
    """Grow a random maximal planar graph from K4 by n - 4 seeded creations.

    Vertices are the integers 0..n-1.  Each step picks inside versus outside
    and the target uniformly from ``random.Random(seed)``, so a fixed seed
    reproduces the graph and the creation log exactly.
    """
    if n < 4:
        raise OperationError(f"an induced maximal planar graph needs n >= 4, got {n}")
    rng = random.Random(seed)
    g = _k4_int()
    entries: list[OpEntry] = []
    for v in range(4, n):
        if rng.random() < 0.5:
            interior = [f for f in g.faces if f != g.outer_face]
            face = interior[rng.randrange(len(interior))]
            g, entry = inside_create(g, face.vertex_set, v)
        else:
            boundary = sorted_ids(g.boundary_vertices())
            entrap = boundary[rng.randrange(3)]
            g, entry = outside_create(g, entrap, v)
        entries.append(entry)
    return g, OpLog(tuple(entries))


def _k4_int() -> EmbeddedGraph:
    rotation = {0: (2, 3, 1), 1: (0, 3, 2), 2: (1, 3, 0), 3: (0, 2, 1)}
    return EmbeddedGraph.build(range(4), rotation, outer_face=(0, 2, 1))
