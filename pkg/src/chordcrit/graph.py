"""Immutable labelled graphs: edge deletion, colouring checks, text exports.

Vertices are dense integer ids 0..n-1; labels are presentation only.  All
derivation operations (edge or vertex deletion) return new graphs, so a base
graph can be shared by concurrent sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

VertexId = int

# Partial or total colour assignment, vertex id -> colour id.
Coloring = dict[int, int]


class MissingEdgeError(KeyError):
    """An operation named an edge that is not in the graph."""


class GraphFormatError(ValueError):
    """A serialized graph record could not be parsed."""


class Edge(NamedTuple):
    u: int
    v: int


def edge(u: int, v: int) -> Edge:
    """Normalize an unordered vertex pair to an Edge with u < v."""
    if u == v:
        raise ValueError(f"loop edge at vertex {u}")
    return Edge(u, v) if u < v else Edge(v, u)


@dataclass(frozen=True)
class Graph:
    """Labelled vertices with symmetric, loop-free adjacency sets."""

    labels: tuple[str, ...]
    adj: tuple[frozenset[int], ...]
    n_hint: int | None = None

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {lbl: i for i, lbl in enumerate(self.labels)}

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adj[v]))

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[Edge]:
        """All edges as (u, v) with u < v, ascending lexicographically."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield Edge(u, v)


def build_graph(
    labels: Iterable[str],
    edges: Iterable[tuple[int, int]],
    n_hint: int | None = None,
) -> Graph:
    """Construct a validated Graph from labels and an edge list."""
    labels = tuple(labels)
    n = len(labels)
    if len(set(labels)) != n:
        raise ValueError("vertex labels must be unique")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(labels, tuple(frozenset(a) for a in adj), n_hint)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Return g with edge e removed; g itself is untouched."""
    u, v = edge(e[0], e[1])
    if v not in g.adj[u]:
        raise MissingEdgeError(f"edge ({u},{v}) not in graph")
    adj = list(g.adj)
    adj[u] = adj[u] - {v}
    adj[v] = adj[v] - {u}
    return Graph(g.labels, tuple(adj), g.n_hint)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Return g minus vertex v, with the remaining ids repacked densely."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    keep = [u for u in range(g.n) if u != v]
    remap = {old: new for new, old in enumerate(keep)}
    labels = tuple(g.labels[u] for u in keep)
    adj = tuple(
        frozenset(remap[w] for w in g.adj[u] if w != v) for u in keep
    )
    return Graph(labels, adj, g.n_hint)


@dataclass(frozen=True)
class ColoringCheck:
    """Verdict of a properness check.

    `monochromatic` lists every edge whose endpoints carry equal colours;
    `uncolored` lists every vertex without a colour.  The colouring is
    proper exactly when both are empty.
    """

    monochromatic: tuple[Edge, ...]
    uncolored: tuple[int, ...]

    @property
    def proper(self) -> bool:
        return not self.monochromatic and not self.uncolored


def is_proper_coloring(g: Graph, c: Coloring) -> ColoringCheck:
    """Check c against g; failures are enumerated, never raised."""
    uncolored = tuple(v for v in range(g.n) if v not in c)
    mono = tuple(
        e for e in g.edges()
        if e.u in c and e.v in c and c[e.u] == c[e.v]
    )
    return ColoringCheck(mono, uncolored)


def count_colors(c: Coloring) -> int:
    return len(set(c.values()))


STRUCTURED_HEADER = "chordcrit-graph v1"

EXPORT_FORMATS = ("dimacs", "edgelist", "structured")


def export_graph(g: Graph, format: str = "dimacs") -> str:
    """Serialize g in DIMACS colouring, label edge list, or structured form."""
    if format == "dimacs":
        lines = [f"p edge {g.n} {g.edge_count}"]
        lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    elif format == "edgelist":
        lines = [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    elif format == "structured":
        lines = [STRUCTURED_HEADER]
        lines.append(f"vertices {g.n}")
        lines.append(f"n_hint {g.n_hint if g.n_hint is not None else '-'}")
        for i, lbl in enumerate(g.labels):
            lines.append(f"label {i} {lbl}")
        for i in range(g.n):
            nbrs = " ".join(str(w) for w in g.neighbors(i))
            lines.append(f"adj {i} {nbrs}".rstrip())
        lines.append("end")
    else:
        raise ValueError(f"unknown format {format!r}; expected one of {EXPORT_FORMATS}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse a structured-format record back into a Graph."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != STRUCTURED_HEADER:
        raise GraphFormatError(f"missing header {STRUCTURED_HEADER!r}")
    if lines[-1] != "end":
        raise GraphFormatError("missing 'end' terminator")
    body = lines[1:-1]
    n: int | None = None
    n_hint: int | None = None
    labels: dict[int, str] = {}
    adj: dict[int, list[int]] = {}
    for ln in body:
        key, _, rest = ln.partition(" ")
        if key == "vertices":
            n = int(rest)
        elif key == "n_hint":
            n_hint = None if rest == "-" else int(rest)
        elif key == "label":
            idx, _, lbl = rest.partition(" ")
            labels[int(idx)] = lbl
        elif key == "adj":
            parts = rest.split()
            adj[int(parts[0])] = [int(p) for p in parts[1:]]
        else:
            raise GraphFormatError(f"unknown record line {ln!r}")
    if n is None or sorted(labels) != list(range(n)) or sorted(adj) != list(range(n)):
        raise GraphFormatError("incomplete structured record")
    edges = [(u, v) for u, nbrs in adj.items() for v in nbrs if u < v]
    for u, nbrs in adj.items():
        for v in nbrs:
            if u not in adj[v]:
                raise GraphFormatError(f"asymmetric adjacency between {u} and {v}")
    return build_graph([labels[i] for i in range(n)], edges, n_hint)
