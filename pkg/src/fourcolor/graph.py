"""Embedded planar graphs: rotation systems, face traversal, Euler accounting.

A graph is stored purely combinatorially: an ordered vertex set plus, for
each vertex, the cyclic order of its neighbors (a rotation system).  Faces
are never stored as ground truth; they are traced on demand under one fixed
convention: from the directed edge (u, v) the walk continues with (v, w),
where w is the neighbor immediately after u in rotation(v).

All values are immutable from the caller's perspective.  Mutating operations
live in :mod:`fourcolor.ops` and :mod:`fourcolor.triangulate` and always
return new graphs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DisconnectedError, EulerError, OperationError, StructureError

VertexId = int | str


def vertex_key(v: VertexId) -> tuple:
    """Sort key giving a deterministic total order over mixed int/str ids.

    Integers sort before strings; bool is rejected to keep ids unambiguous.
    Used for every tie-break in the toolkit.
    """
    kind = type(v)
    if kind is int:
        return (0, v, "")
    if kind is str:
        return (1, 0, v)
    raise StructureError(f"vertex id must be an int or a str, got {v!r}")


def sorted_ids(vs: Iterable[VertexId]) -> tuple[VertexId, ...]:
    return tuple(sorted(vs, key=vertex_key))


def canonical_ring(neighbors: Sequence[VertexId]) -> tuple[VertexId, ...]:
    """Rotate a cyclic neighbor list to start at the smallest id."""
    ring = tuple(neighbors)
    if not ring:
        return ring
    i = min(range(len(ring)), key=lambda k: vertex_key(ring[k]))
    return ring[i:] + ring[:i]


def _canonical_walk(seq: Sequence[VertexId]) -> tuple[VertexId, ...]:
    """Rotate a closed walk to its lexicographically smallest rotation.

    Unlike rings, walks may repeat vertices (faces through cut vertices),
    so the full rotated sequence is compared, not just the first entry.
    Triangles with distinct corners, the common case by far, short-circuit.
    """
    walk = tuple(seq)
    n = len(walk)
    if n == 0:
        return walk
    if n == 3 and walk[0] != walk[1] and walk[1] != walk[2] and walk[0] != walk[2]:
        i = min(range(3), key=lambda k: vertex_key(walk[k]))
        return walk[i:] + walk[:i]
    keys = [vertex_key(x) for x in walk]
    best = min(range(n), key=lambda i: [keys[(i + k) % n] for k in range(n)])
    return walk[best:] + walk[:best]


@dataclass(frozen=True)
class FaceWalk:
    """A closed facial walk, stored as its canonical cyclic vertex sequence.

    The walk of length k visits vertices w0..w(k-1) and closes with the
    directed edge (w(k-1), w0).  Construct via :meth:`from_sequence` so the
    start position is canonical and equality is plain tuple equality.
    """

    vertices: tuple[VertexId, ...]

    @classmethod
    def from_sequence(cls, seq: Iterable[VertexId]) -> "FaceWalk":
        return cls(_canonical_walk(tuple(seq)))

    @property
    def edges(self) -> tuple[tuple[VertexId, VertexId], ...]:
        """Directed boundary edges (u -> v), in walk order."""
        w = self.vertices
        return tuple((w[i], w[(i + 1) % len(w)]) for i in range(len(w)))

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self.vertices)

    def __str__(self) -> str:
        return "(" + ",".join(str(v) for v in self.vertices) + ")"


class VertexClass(Enum):
    """Position of a vertex relative to the designated outer face."""

    BOUNDARY = "boundary"
    TRAPPED = "trapped"


@dataclass(frozen=True)
class EulerCounts:
    """Face, vertex and edge counts of a planar-embedded connected graph."""

    faces: int
    vertices: int
    edges: int

    def identity_holds(self) -> bool:
        return self.faces + self.vertices == self.edges + 2


def _trace_walks(rotation: Mapping[VertexId, tuple[VertexId, ...]]) -> list[tuple[VertexId, ...]]:
    """Trace every face walk of a rotation system.

    Each directed edge lies on exactly one returned walk.  The result is
    sorted canonically so face order is deterministic.
    """
    succ: dict[tuple[VertexId, VertexId], tuple[VertexId, VertexId]] = {}
    for v, ring in rotation.items():
        deg = len(ring)
        for i, u in enumerate(ring):
            succ[(u, v)] = (v, ring[(i + 1) % deg])
    walks: list[tuple[VertexId, ...]] = []
    seen: set[tuple[VertexId, VertexId]] = set()
    # Discovery order does not matter: each walk is canonicalized and the
    # final list is sorted, so the result is deterministic either way.
    for start in succ:
        if start in seen:
            continue
        walk: list[VertexId] = []
        edge = start
        while edge not in seen:
            seen.add(edge)
            walk.append(edge[0])
            edge = succ[edge]
        if edge != start:  # pragma: no cover - impossible for a symmetric rotation
            raise StructureError(f"face traversal did not close at {start}")
        walks.append(_canonical_walk(walk))
    walks.sort(key=lambda w: [vertex_key(x) for x in w])
    return walks


@dataclass(frozen=True)
class EmbeddedGraph:
    """A connected simple planar graph with a combinatorial embedding.

    Fields are normalized: ``vertices`` is sorted, every rotation ring starts
    at its smallest neighbor, and ``outer_face`` (when set) is the canonical
    form of one traced face.  Use :meth:`build` to construct and validate;
    the raw constructor is reserved for internal code that has already
    established the invariants.
    """

    vertices: tuple[VertexId, ...]
    rotation: dict[VertexId, tuple[VertexId, ...]]
    outer_face: FaceWalk | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def build(
        cls,
        vertices: Iterable[VertexId],
        rotation: Mapping[VertexId, Sequence[VertexId]],
        outer_face: Iterable[VertexId] | FaceWalk | None = None,
    ) -> "EmbeddedGraph":
        """Normalize, validate and return a new graph.

        Raises :class:`StructureError`, :class:`DisconnectedError` or
        :class:`EulerError` when the data does not describe a connected
        simple planar-embedded graph.
        """
        vs = sorted_ids(vertices)
        rot = {v: canonical_ring(tuple(rotation.get(v, ()))) for v in vs}
        if isinstance(outer_face, FaceWalk):
            outer = FaceWalk.from_sequence(outer_face.vertices)
        elif outer_face is not None:
            outer = FaceWalk.from_sequence(outer_face)
        else:
            outer = None
        g = cls(vs, rot, outer)
        g.check()
        return g

    def check(self) -> "EmbeddedGraph":
        """Re-validate every structural invariant; returns self when sound."""
        if not self.vertices:
            raise StructureError("graph has no vertices")
        keys = [vertex_key(v) for v in self.vertices]
        if keys != sorted(keys) or len(set(self.vertices)) != len(self.vertices):
            raise StructureError("vertex tuple is not sorted and unique")
        if set(self.rotation) != set(self.vertices):
            raise StructureError("rotation keys do not match the vertex set")
        for v, ring in self.rotation.items():
            if v in ring:
                raise StructureError(f"loop at vertex {v!r}")
            if len(set(ring)) != len(ring):
                raise StructureError(f"repeated neighbor in rotation of {v!r}")
        for v, ring in self.rotation.items():
            for u in ring:
                if u not in self.rotation:
                    raise StructureError(f"rotation of {v!r} names unknown vertex {u!r}")
                if v not in self.adjacency[u]:
                    raise StructureError(f"asymmetric rotation: edge ({v!r}, {u!r}) has no reverse")
        self._check_connected()
        counts = EulerCounts(self._face_count(), len(self.vertices), self.edge_count)
        if not counts.identity_holds():
            defect = (counts.edges + 2 - counts.vertices - counts.faces) // 2
            raise EulerError(
                f"rotation system is not planar: F={counts.faces} V={counts.vertices} E={counts.edges}",
                genus_defect=defect,
            )
        if self.outer_face is not None and self.outer_face not in self.faces:
            raise StructureError(
                f"outer face {self.outer_face} is not a traced face "
                "(note: walks are orientation-sensitive)"
            )
        return self

    def _check_connected(self) -> None:
        start = self.vertices[0]
        seen = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in self.rotation[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        if len(seen) != len(self.vertices):
            missing = sorted_ids(set(self.vertices) - seen)
            raise DisconnectedError(f"graph is disconnected; unreachable: {list(missing)}")

    # -- basic queries -----------------------------------------------------

    @cached_property
    def adjacency(self) -> dict[VertexId, frozenset]:
        return {v: frozenset(ring) for v, ring in self.rotation.items()}

    @cached_property
    def edge_count(self) -> int:
        return sum(len(ring) for ring in self.rotation.values()) // 2

    def degree(self, v: VertexId) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: VertexId) -> tuple[VertexId, ...]:
        return self.rotation[v]

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> tuple[tuple[VertexId, VertexId], ...]:
        """Undirected edges as (u, v) pairs with u before v, sorted."""
        out = []
        for v, ring in self.rotation.items():
            for u in ring:
                if vertex_key(v) < vertex_key(u):
                    out.append((v, u))
        out.sort(key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
        return tuple(out)

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(len(ring) for ring in self.rotation.values()))

    @cached_property
    def faces(self) -> tuple[FaceWalk, ...]:
        return tuple(FaceWalk(w) for w in _trace_walks(self.rotation))

    def _face_count(self) -> int:
        # A single vertex has no directed edges to trace but still lies in
        # the one infinite face.
        if self.edge_count == 0:
            return 1
        return len(self.faces)

    def trace_from(self, u: VertexId, v: VertexId) -> FaceWalk:
        """The unique face walk containing the directed edge (u, v)."""
        if v not in self.adjacency[u]:
            raise OperationError(f"({u!r}, {v!r}) is not an edge")
        walk = []
        edge = (u, v)
        while True:
            walk.append(edge[0])
            a, b = edge
            ring = self.rotation[b]
            edge = (b, ring[(ring.index(a) + 1) % len(ring)])
            if edge == (u, v):
                break
        return FaceWalk.from_sequence(walk)

    def boundary_vertices(self) -> frozenset:
        if self.outer_face is None:
            raise OperationError("no outer face is designated")
        return self.outer_face.vertex_set

    # -- derived views -----------------------------------------------------

    def with_outer(self, face: FaceWalk) -> "EmbeddedGraph":
        return EmbeddedGraph(self.vertices, self.rotation, face)

    def __str__(self) -> str:
        outer = str(self.outer_face) if self.outer_face else "-"
        return f"EmbeddedGraph(V={len(self.vertices)}, E={self.edge_count}, outer={outer})"


# -- module operations -------------------------------------------------------


def trace_faces(g: EmbeddedGraph) -> list[FaceWalk]:
    """All face walks of g; each directed edge appears in exactly one walk."""
    return list(g.faces)


def euler_counts(g: EmbeddedGraph) -> EulerCounts:
    """Face/vertex/edge counts, with the planar identity re-checked."""
    counts = EulerCounts(g._face_count(), len(g.vertices), g.edge_count)
    if not counts.identity_holds():
        defect = (counts.edges + 2 - counts.vertices - counts.faces) // 2
        raise EulerError(
            f"internal inconsistency: F={counts.faces} V={counts.vertices} E={counts.edges}",
            genus_defect=defect,
        )
    return counts


def is_mpg(g: EmbeddedGraph) -> bool:
    """True iff g is a maximal planar graph: V >= 4 and every face a triangle.

    Simplicity and connectivity are construction invariants of
    :class:`EmbeddedGraph`, so only the face condition is examined here.
    """
    if len(g.vertices) < 4:
        return False
    return all(len(f) == 3 for f in g.faces)


def classify_vertex(g: EmbeddedGraph, v: VertexId) -> VertexClass:
    """BOUNDARY when v lies on the designated outer walk, TRAPPED otherwise."""
    if g.outer_face is None:
        raise OperationError("classify_vertex requires a designated outer face")
    if v not in g.rotation:
        raise OperationError(f"vertex {v!r} is not in the graph")
    return VertexClass.BOUNDARY if v in g.outer_face.vertex_set else VertexClass.TRAPPED


def set_outer_face(g: EmbeddedGraph, face: FaceWalk | Iterable[VertexId]) -> EmbeddedGraph:
    """Redesignate the outer face; the graph is otherwise unchanged.

    ``face`` must equal one traced face of g (same cyclic orientation).
    """
    walk = FaceWalk.from_sequence(face.vertices if isinstance(face, FaceWalk) else face)
    if walk not in g.faces:
        raise OperationError(f"{walk} is not a traced face of the graph")
    return g.with_outer(walk)
