"""Four-coloring of planar maps via degree-3 vertex creation and annihilation.

The toolkit reduces any triangulated planar graph to K4 by removing
degree-3 vertices, then replays the removals in reverse to build a proper
coloring with at most four colors, end to end from a map adjacency
description.  Reduction honestly fails (with :class:`StuckError`) on
maximal planar graphs that have no degree-3 vertex, such as the
icosahedron.
"""

from .coloring import (
    COLOR_NAMES,
    PALETTE,
    Coloring,
    VerifyReport,
    brute_force_chromatic,
    color_k4,
    fourth_color,
    replay_coloring,
    verify_proper,
)
from .embedding import compute_embedding
from .errors import (
    DisconnectedError,
    EulerError,
    FourColorError,
    NonPlanarError,
    OperationError,
    RecordMismatchError,
    StructureError,
    StuckError,
)
from .graph import (
    EmbeddedGraph,
    EulerCounts,
    FaceWalk,
    VertexClass,
    VertexId,
    classify_vertex,
    euler_counts,
    is_mpg,
    set_outer_face,
    trace_faces,
)
from .mapcolor import MapColoring, MapDoc, color_map, map_to_graph
from .ops import (
    OpEntry,
    OpKind,
    OpLog,
    find_degree3,
    inside_annihilate,
    inside_create,
    outside_annihilate,
    outside_create,
    random_induced_mpg,
    reduce_to_k4,
)
from .triangulate import (
    AddedEdge,
    TriangulationRecord,
    restrict_graph,
    triangulate,
)

__version__ = "0.1.0"

__all__ = [
    "AddedEdge",
    "COLOR_NAMES",
    "Coloring",
    "DisconnectedError",
    "EmbeddedGraph",
    "EulerCounts",
    "EulerError",
    "FaceWalk",
    "FourColorError",
    "MapColoring",
    "MapDoc",
    "NonPlanarError",
    "OpEntry",
    "OpKind",
    "OpLog",
    "OperationError",
    "PALETTE",
    "RecordMismatchError",
    "StructureError",
    "StuckError",
    "TriangulationRecord",
    "VertexClass",
    "VertexId",
    "VerifyReport",
    "brute_force_chromatic",
    "classify_vertex",
    "color_k4",
    "color_map",
    "compute_embedding",
    "euler_counts",
    "find_degree3",
    "fourth_color",
    "inside_annihilate",
    "inside_create",
    "is_mpg",
    "map_to_graph",
    "outside_annihilate",
    "outside_create",
    "random_induced_mpg",
    "reduce_to_k4",
    "replay_coloring",
    "restrict_graph",
    "set_outer_face",
    "trace_faces",
    "triangulate",
    "verify_proper",
]
