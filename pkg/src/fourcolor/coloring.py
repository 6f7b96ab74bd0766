"""Four-coloring by reverse replay, plus an independent brute-force oracle.

The pipeline colors a reduced K4 deterministically and then replays the
reversed annihilation log: every re-inserted vertex takes the one palette
color its three anchors do not use.  Properness is never assumed; it is
checked by :func:`verify_proper`, and :func:`brute_force_chromatic` gives an
oracle answer that does not share any code with the replay path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import OperationError
from .graph import EmbeddedGraph, VertexId, is_mpg, sorted_ids, vertex_key
from .ops import OpEntry, OpKind, OpLog, apply_creation

#: The closed four-color palette.
PALETTE: tuple[int, ...] = (1, 2, 3, 4)

#: Display names used at the CLI boundary (DOT fill colors, map output).
COLOR_NAMES: dict[int, str] = {1: "blue", 2: "yellow", 3: "red", 4: "green"}


@dataclass(frozen=True)
class Coloring:
    """A total assignment of palette colors to vertices."""

    assignment: dict[VertexId, int]

    def color_of(self, v: VertexId) -> int:
        return self.assignment[v]

    def colors_used(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.assignment.values())))

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of a properness check, with violations listed deterministically."""

    proper: bool
    violations: tuple[tuple[VertexId, VertexId], ...]


def color_k4(g: EmbeddedGraph) -> Coloring:
    """Color a K4 with the four palette colors in vertex-id order."""
    if not is_mpg(g) or len(g.vertices) != 4:
        raise OperationError("color_k4 expects the complete graph on four vertices")
    return Coloring({v: PALETTE[i] for i, v in enumerate(g.vertices)})


def fourth_color(a: int, b: int, c: int) -> int:
    """The unique palette color different from three pairwise distinct ones."""
    trio = {a, b, c}
    if not trio <= set(PALETTE):
        raise OperationError(f"colors must come from {PALETTE}, got {(a, b, c)}")
    if len(trio) != 3:
        raise OperationError(f"three pairwise distinct colors required, got {(a, b, c)}")
    return next(color for color in PALETTE if color not in trio)


def replay_coloring(k4: EmbeddedGraph, script: OpLog) -> tuple[EmbeddedGraph, Coloring]:
    """Rebuild a maximal planar graph from K4 and color it along the way.

    ``script`` must contain creation entries (an annihilation log reversed
    with :meth:`OpLog.reversed`).  Each inserted vertex takes the fourth
    color relative to its three anchors; because anchors always form a
    triangle of a properly colored graph, the choice is forced and the
    replay never backtracks.
    """
    colors = dict(color_k4(k4).assignment)
    g = k4
    for entry in script:
        if not entry.kind.is_create:
            raise OperationError(f"replay expects creation entries, got {entry}")
        anchor_colors = [colors[a] for a in entry.anchors if a in colors]
        if len(anchor_colors) != 3:
            missing = [a for a in entry.anchors if a not in colors]
            raise OperationError(f"anchors {missing!r} of {entry} are not present yet")
        g = apply_creation(g, entry)
        colors[entry.vertex] = fourth_color(*anchor_colors)
    return g, Coloring(colors)


def verify_proper(g: EmbeddedGraph, coloring: Coloring) -> VerifyReport:
    """Check that no edge joins two vertices of the same color.

    The coloring must cover every vertex of g; entries for unknown vertices
    are ignored.  Violating edges are reported in canonical order.
    """
    assignment = coloring.assignment
    missing = [v for v in g.vertices if v not in assignment]
    if missing:
        raise OperationError(f"coloring is partial; missing {missing!r}")
    bad = [c for c in assignment.values() if c not in PALETTE]
    if bad:
        raise OperationError(f"colors outside the palette: {sorted(set(bad))!r}")
    violations = tuple(
        (u, v) for u, v in g.edges() if assignment[u] == assignment[v]
    )
    return VerifyReport(proper=not violations, violations=violations)


def brute_force_chromatic(
    g: EmbeddedGraph, max_vertices: int = 16
) -> tuple[int, Coloring]:
    """Exact chromatic number by exhaustive backtracking, with a witness.

    Independent of the replay path by design: it only reads the adjacency.
    Vertices are tried largest-degree first; color symmetry is pruned by
    never using more than one fresh color at a time.  Exponential, hence
    the ``max_vertices`` bound.
    """
    n = len(g.vertices)
    if n > max_vertices:
        raise OperationError(f"{n} vertices exceed the oracle bound of {max_vertices}")
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), vertex_key(v)))
    index = {v: i for i, v in enumerate(order)}
    neighbors = [
        [index[u] for u in g.neighbors(v) ] for v in order
    ]
    assigned = [0] * n

    def extend(pos: int, k: int, used: int) -> bool:
        if pos == n:
            return True
        taken = {assigned[u] for u in neighbors[pos] if u in range(n) and assigned[u]}
        limit = min(k, used + 1)
        for color in range(1, limit + 1):
            if color in taken:
                continue
            assigned[pos] = color
            if extend(pos + 1, k, max(used, color)):
                return True
        assigned[pos] = 0
        return False

    for k in range(1, n + 1):
        for i in range(n):
            assigned[i] = 0
        if extend(0, k, 0):
            witness = Coloring({order[i]: assigned[i] for i in range(n)})
            return k, witness
    raise AssertionError("unreachable: n colors always suffice")  # pragma: no cover
