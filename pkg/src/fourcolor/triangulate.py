"""Augment an embedded planar graph to a maximal one, reversibly.

Chords are inserted face by face until every face is a triangle.  Each
insertion is an ear cut: a chord between two walk positions at distance two
whose vertices are distinct and not yet adjacent.  The record of added edges
replays in reverse to restore the original graph exactly, including its
outer face designation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import OperationError, RecordMismatchError, StructureError
from .graph import (
    EmbeddedGraph,
    FaceWalk,
    VertexId,
    canonical_ring,
    is_mpg,
    sorted_ids,
    vertex_key,
)


@dataclass(frozen=True)
class AddedEdge:
    """A chord added during triangulation, with the face walk it split.

    ``host_face`` is informational (it documents where the chord landed);
    records parsed from JSON may not carry it.
    """

    u: VertexId
    v: VertexId
    host_face: FaceWalk | None = None

    def pair(self) -> tuple[VertexId, VertexId]:
        return (self.u, self.v)


@dataclass(frozen=True)
class TriangulationRecord:
    """Ordered list of added chords plus the original outer face.

    Removing the chords in reverse order from the triangulated graph
    restores the input graph exactly.  ``original_outer`` is always set on
    records produced by :func:`triangulate`; when absent (hand-made or
    parsed records), :func:`restrict_graph` keeps the current designation
    if it survives the removals.
    """

    added: tuple[AddedEdge, ...]
    original_outer: FaceWalk | None = None

    def pairs(self) -> tuple[tuple[VertexId, VertexId], ...]:
        return tuple(e.pair() for e in self.added)

    def __len__(self) -> int:
        return len(self.added)


def _insert_chord(
    rotation: dict[VertexId, tuple[VertexId, ...]],
    walk: tuple[VertexId, ...],
    i: int,
    j: int,
) -> tuple[tuple[VertexId, ...], tuple[VertexId, ...]]:
    """Add the chord walk[i]-walk[j] inside the face and split its walk.

    The chord lands in rotation(walk[i]) immediately after walk[i-1] and in
    rotation(walk[j]) immediately after walk[j-1], which keeps the traversal
    convention intact.  Returns the two replacement walks.
    """
    n = len(walk)
    a, b = walk[i], walk[j]
    ring_a = list(rotation[a])
    ring_a.insert(ring_a.index(walk[i - 1]) + 1, b)
    rotation[a] = canonical_ring(ring_a)
    ring_b = list(rotation[b])
    ring_b.insert(ring_b.index(walk[j - 1]) + 1, a)
    rotation[b] = canonical_ring(ring_b)
    if i < j:
        first = walk[i : j + 1]
        second = walk[j:] + walk[: i + 1]
    else:  # pragma: no cover - callers always pass i < j
        first = walk[i:] + walk[: j + 1]
        second = walk[j : i + 1]
    return first, second


def _pick_chord(
    walk: tuple[VertexId, ...], adjacency: dict[VertexId, set]
) -> tuple[int, int] | None:
    """First insertable chord position pair, scanning ears then general pairs."""
    n = len(walk)
    for i in range(n):
        j = (i + 2) % n
        u, x = walk[i], walk[j]
        if u != x and x not in adjacency[u]:
            return (i, j) if i < j else (j, i)
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            u, x = walk[i], walk[j]
            if u != x and x not in adjacency[u]:
                return (i, j)
    return None


def triangulate(g: EmbeddedGraph) -> tuple[EmbeddedGraph, TriangulationRecord]:
    """Add chords until every face is a triangle; the vertex set is unchanged.

    Returns the maximal graph plus a replayable record of added edges.  The
    number of chords is always 3V - 6 minus the input edge count.  The final
    outer face is chosen by :func:`select_outer_face` so that reduction has
    a useful mix of trapped and boundary degree-3 vertices to work on.
    """
    if len(g.vertices) < 4:
        raise OperationError(f"triangulation needs at least 4 vertices, got {len(g.vertices)}")
    if g.outer_face is None:
        raise OperationError("triangulation needs a designated outer face to record")
    rotation = dict(g.rotation)
    adjacency = {v: set(ring) for v, ring in rotation.items()}
    added: list[AddedEdge] = []

    pending = [f.vertices for f in g.faces if len(f) > 3]
    while pending:
        pending.sort(key=lambda w: [vertex_key(x) for x in w])
        walk = pending.pop(0)
        pos = _pick_chord(walk, adjacency)
        if pos is None:  # pragma: no cover - cannot occur on valid planar input
            raise StructureError(f"no insertable chord in face walk {walk}")
        i, j = pos
        u, x = walk[i], walk[j]
        first, second = _insert_chord(rotation, walk, i, j)
        adjacency[u].add(x)
        adjacency[x].add(u)
        host = FaceWalk.from_sequence(walk)
        a, b = sorted_ids((u, x))
        added.append(AddedEdge(a, b, host))
        for part in (first, second):
            if len(part) > 3:
                pending.append(part)

    mpg = EmbeddedGraph(g.vertices, rotation, None).check()
    expected = 3 * len(g.vertices) - 6 - g.edge_count
    if len(added) != expected:  # pragma: no cover - arithmetic consequence of fullness
        raise StructureError(f"added {len(added)} chords, expected {expected}")
    if not is_mpg(mpg):  # pragma: no cover
        raise StructureError("triangulation did not reach a maximal planar graph")
    mpg = mpg.with_outer(select_outer_face(mpg))
    record = TriangulationRecord(tuple(added), original_outer=g.outer_face)
    return mpg, record


def select_outer_face(g: EmbeddedGraph) -> FaceWalk:
    """Deterministic outer face for a freshly triangulated graph.

    Keeps the smallest degree-3 vertex enclosed, so the reducer's first move
    is an inside annihilation, and puts the smallest vertex that reaches
    degree 3 after that move on the boundary, so an outside annihilation
    follows without any re-selection.  Ties break canonically.
    """
    faces = g.faces
    degree3 = [v for v in g.vertices if g.degree(v) == 3]
    if not degree3 or len(g.vertices) == 4:
        return faces[0]
    first = degree3[0]
    near = g.adjacency[first]
    upcoming = [
        u
        for u in g.vertices
        if u != first and g.degree(u) == (4 if u in near else 3)
    ]
    follow = upcoming[0] if upcoming else None

    def rank(face: FaceWalk) -> tuple:
        on_face = face.vertex_set
        return (
            1 if first in on_face else 0,
            0 if follow in on_face else 1,
            [vertex_key(v) for v in face.vertices],
        )

    return min(faces, key=rank)


def restrict_graph(g: EmbeddedGraph, record: TriangulationRecord) -> EmbeddedGraph:
    """Remove recorded chords (in reverse) and restore the recorded outer face.

    Surviving neighbors keep their cyclic order.  Raises
    :class:`RecordMismatchError` when a recorded edge is absent from g.
    """
    rotation = dict(g.rotation)
    for entry in reversed(record.added):
        u, v = entry.pair()
        if u not in rotation or v not in rotation or v not in rotation[u]:
            raise RecordMismatchError(f"recorded edge ({u!r}, {v!r}) is not in the graph")
        rotation[u] = canonical_ring(tuple(x for x in rotation[u] if x != v))
        rotation[v] = canonical_ring(tuple(x for x in rotation[v] if x != u))
    restored = EmbeddedGraph(g.vertices, rotation, None).check()
    target = record.original_outer
    if target is None and g.outer_face is not None and g.outer_face in restored.faces:
        target = g.outer_face
    if target is not None:
        if target not in restored.faces:
            raise RecordMismatchError(
                f"recorded outer face {target} is not a face of the restored graph"
            )
        restored = restored.with_outer(target)
    return restored
