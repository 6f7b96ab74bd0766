"""Country maps as adjacency data, and the end-to-end coloring pipeline.

A map is a list of countries plus the set of bordering pairs.  Countries
become vertices, borders become edges; the derived graph is embedded,
triangulated, reduced to K4, recolored by reverse replay, and finally
restricted back to the original border structure.  Colors transfer to
countries one to one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import (
    COLOR_NAMES,
    Coloring,
    color_k4,
    replay_coloring,
    verify_proper,
)
from .embedding import compute_embedding
from .errors import DisconnectedError, OperationError, StructureError
from .graph import EmbeddedGraph
from .ops import OpLog, Strategy, reduce_to_k4
from .triangulate import TriangulationRecord, restrict_graph, triangulate


@dataclass(frozen=True)
class MapDoc:
    """Countries and the deduplicated set of bordering pairs."""

    countries: tuple[str, ...]
    borders: tuple[tuple[str, str], ...]

    @classmethod
    def build(cls, countries: Iterable[str], borders: Iterable[Sequence[str]]) -> "MapDoc":
        names = tuple(countries)
        if not names:
            raise StructureError("a map needs at least one country")
        if len(set(names)) != len(names):
            raise StructureError("country names must be unique")
        for name in names:
            if not isinstance(name, str) or not name:
                raise StructureError(f"country name must be a non-empty string, got {name!r}")
        known = set(names)
        seen: set[frozenset] = set()
        cleaned: list[tuple[str, str]] = []
        for border in borders:
            pair = tuple(border)
            if len(pair) != 2:
                raise StructureError(f"border {pair!r} does not name two countries")
            a, b = pair
            if a == b:
                raise StructureError(f"country {a!r} cannot border itself")
            for name in (a, b):
                if name not in known:
                    raise StructureError(f"border names unknown country {name!r}")
            key = frozenset(pair)
            if key in seen:
                continue
            seen.add(key)
            cleaned.append((a, b) if a < b else (b, a))
        cleaned.sort()
        return cls(names, tuple(cleaned))

    def neighbor_count(self, country: str) -> int:
        return sum(1 for a, b in self.borders if country in (a, b))


@dataclass(frozen=True)
class MapColoring:
    """Colors per country plus the full provenance of how they were found."""

    colors: dict[str, str]
    palette: tuple[str, ...]
    triangulation: TriangulationRecord | None
    log: OpLog | None

    def colors_used(self) -> tuple[str, ...]:
        return tuple(sorted(set(self.colors.values())))


def map_to_graph(m: MapDoc) -> tuple[tuple[str, str], ...]:
    """One vertex per country, one edge per border, as a plain edge list."""
    return m.borders


def color_map(m: MapDoc, strategy: Strategy = "any") -> MapColoring:
    """Color a map with at most four colors so that no border is monochrome.

    Maps with fewer than four countries are colored directly with distinct
    colors.  Larger maps run the full pipeline; the result carries the
    triangulation record and the reduction log as provenance, and is checked
    on both sides of the map/graph correspondence before being returned.
    """
    palette_names = tuple(COLOR_NAMES[c] for c in sorted(COLOR_NAMES))
    if len(m.countries) < 4:
        table = {name: COLOR_NAMES[i + 1] for i, name in enumerate(m.countries)}
        return MapColoring(table, palette_names, None, None)

    edges = map_to_graph(m)
    if not edges:
        raise DisconnectedError("a map with four or more countries needs borders to embed")
    bordered = {name for border in edges for name in border}
    isolated = sorted(set(m.countries) - bordered)
    if isolated:
        raise DisconnectedError(f"countries without any border disconnect the map: {isolated}")
    derived = compute_embedding(edges)

    mpg, record = triangulate(derived)
    reduced, log = reduce_to_k4(mpg, strategy)
    rebuilt, coloring = replay_coloring(reduced, log.reversed())
    if rebuilt != mpg:  # pragma: no cover - replay inverts the reduction exactly
        raise AssertionError("replay did not reproduce the triangulated graph")
    restored = restrict_graph(rebuilt, record)

    graph_check = verify_proper(restored, coloring)
    if not graph_check.proper:  # pragma: no cover - properness is forced by replay
        raise AssertionError(f"pipeline produced an improper coloring: {graph_check.violations}")
    table = {name: COLOR_NAMES[coloring.color_of(name)] for name in m.countries}
    for a, b in m.borders:
        if table[a] == table[b]:  # pragma: no cover - equivalent to the graph check
            raise AssertionError(f"border {a}-{b} is monochrome")
    return MapColoring(table, palette_names, record, log)
