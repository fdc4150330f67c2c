"""Simple undirected graphs, family constructors, and DIMACS-style file io.

Vertices are 0-based integers in memory and 1-based on the wire.  All graph
objects are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

from .errors import InvalidColoringError, InvalidParameterError, ParseError


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Adjacency is stored as a tuple of sorted neighbor tuples.  An optional
    label map attaches a role string to a vertex ("hub", "x", "cycle:3", ...);
    the family constructors use it to mark special vertices so that callers
    can recover, say, the cycle part of a wheel without re-deriving indices.
    """

    __slots__ = ("n", "adj", "_labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Mapping[int, str] | None = None,
    ):
        if n < 0:
            raise InvalidParameterError(f"vertex count must be >= 0, got {n}")
        neigh: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InvalidParameterError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            neigh[u].append(v)
            neigh[v].append(u)
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in neigh)
        lab = dict(labels) if labels else {}
        for v, role in lab.items():
            if not (0 <= v < n):
                raise InvalidParameterError(f"label on nonexistent vertex {v}")
            if not isinstance(role, str) or not role:
                raise InvalidParameterError(f"label for vertex {v} must be a nonempty string")
        self._labels = lab

    @property
    def labels(self) -> Mapping[int, str]:
        return MappingProxyType(self._labels)

    @property
    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def with_labels(self, labels: Mapping[int, str]) -> "Graph":
        """A copy of this graph whose label map is replaced by ``labels``."""
        return Graph(self.n, self.edges(), labels)

    def vertex_with_role(self, role: str) -> int:
        """The unique vertex labeled ``role``; raises if absent or ambiguous."""
        hits = [v for v, r in self._labels.items() if r == role]
        if len(hits) != 1:
            raise InvalidParameterError(f"expected exactly one vertex with role {role!r}, found {len(hits)}")
        return hits[0]

    def vertices_with_role_prefix(self, prefix: str) -> list[int]:
        """Sorted vertices whose role starts with ``prefix``."""
        return sorted(v for v, r in self._labels.items() if r.startswith(prefix))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self._labels == other._labels

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# ---------------------------------------------------------------------------
# Family constructors
# ---------------------------------------------------------------------------

def cycle(n: int) -> Graph:
    """The cycle on n >= 3 vertices, edges {i, i+1 mod n}, roles "cycle:i"."""
    if n < 3:
        raise InvalidParameterError(f"a cycle needs at least 3 vertices, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n, edges, {i: f"cycle:{i}" for i in range(n)})


def empty(m: int) -> Graph:
    """The edgeless graph on m >= 1 vertices."""
    if m < 1:
        raise InvalidParameterError(f"empty graph needs at least 1 vertex, got {m}")
    return Graph(m)


def complete(k: int) -> Graph:
    """The complete graph on k >= 1 vertices."""
    if k < 1:
        raise InvalidParameterError(f"complete graph needs at least 1 vertex, got {k}")
    return Graph(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of g1 and g2 plus every edge between the two sides.

    g2's vertices are shifted up by g1.n; labels travel with their vertices.
    The result has ``|E1| + |E2| + n1*n2`` edges.
    """
    if g1.n == 0 or g2.n == 0:
        raise InvalidParameterError("join requires two nonempty graphs")
    off = g1.n
    edges = g1.edges()
    edges += [(u + off, v + off) for u, v in g2.edges()]
    edges += [(u, v + off) for u in range(g1.n) for v in range(g2.n)]
    labels = dict(g1.labels)
    labels.update({v + off: r for v, r in g2.labels.items()})
    return Graph(g1.n + g2.n, edges, labels)


def one_point_union(parts: Sequence[tuple[Graph, int]]) -> Graph:
    """Glue the designated vertex of every part into a single vertex.

    The first part keeps its vertex indices and the glued vertex takes the
    index of the first part's designated vertex; later parts occupy the
    following contiguous index blocks.  The glued vertex is labeled "x".
    Each part is an induced subgraph of the result, and distinct parts meet
    only at the glued vertex.
    """
    if not parts:
        raise InvalidParameterError("one_point_union needs at least one part")
    for g, v in parts:
        if not (0 <= v < g.n):
            raise InvalidParameterError(f"designated vertex {v} out of range for a {g.n}-vertex part")
    g0, v0 = parts[0]
    total = g0.n
    edges = g0.edges()
    labels = {v: r for v, r in g0.labels.items() if v != v0}
    for g, v in parts[1:]:
        mapping = {}
        nxt = total
        for w in range(g.n):
            if w == v:
                mapping[w] = v0
            else:
                mapping[w] = nxt
                nxt += 1
        edges += [(mapping[a], mapping[b]) for a, b in g.edges()]
        labels.update({mapping[w]: r for w, r in g.labels.items() if w != v})
        total = nxt
    labels[v0] = "x"
    return Graph(total, edges, labels)


# ---------------------------------------------------------------------------
# Family specs
# ---------------------------------------------------------------------------

def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameterError(msg)


@dataclass(frozen=True)
class Cycle:
    n: int

    def __post_init__(self):
        _require(self.n >= 3, f"Cycle needs n >= 3, got {self.n}")


@dataclass(frozen=True)
class Empty:
    m: int

    def __post_init__(self):
        _require(self.m >= 1, f"Empty needs m >= 1, got {self.m}")


@dataclass(frozen=True)
class Complete:
    k: int

    def __post_init__(self):
        _require(self.k >= 1, f"Complete needs k >= 1, got {self.k}")


@dataclass(frozen=True)
class Wheel:
    """Cycle on n vertices joined with one universal hub vertex."""

    n: int

    def __post_init__(self):
        _require(self.n >= 3, f"Wheel needs n >= 3, got {self.n}")


@dataclass(frozen=True)
class JoinCycleEmpty:
    """Cycle on n vertices joined with m pairwise nonadjacent hub vertices."""

    n: int
    m: int

    def __post_init__(self):
        _require(self.n >= 3, f"JoinCycleEmpty needs n >= 3, got {self.n}")
        _require(self.m >= 1, f"JoinCycleEmpty needs m >= 1, got {self.m}")


@dataclass(frozen=True)
class Bipyramid:
    """Cycle on n vertices joined with two nonadjacent apexes labeled x and y."""

    n: int

    def __post_init__(self):
        _require(self.n >= 3, f"Bipyramid needs n >= 3, got {self.n}")


@dataclass(frozen=True)
class BipyramidUnion:
    """Two bipyramids (sizes m and n) glued at their y apex; planar for all m, n."""

    m: int
    n: int

    def __post_init__(self):
        _require(self.m >= 3, f"BipyramidUnion needs m >= 3, got {self.m}")
        _require(self.n >= 3, f"BipyramidUnion needs n >= 3, got {self.n}")


@dataclass(frozen=True)
class FromFile:
    path: str


FamilySpec = Union[
    Cycle, Empty, Complete, Wheel, JoinCycleEmpty, Bipyramid, BipyramidUnion, FromFile
]


def build(spec: FamilySpec) -> Graph:
    """Construct the graph described by a family spec.

    Index layout is deterministic: cycle vertices come first in cycle order,
    then hub/apex vertices.  For BipyramidUnion(m, n) the first bipyramid
    occupies 0..m+1 (x at m, glued y at m+1), the second cycle occupies
    m+2..m+n+1, and its x apex is the last vertex.
    """
    if isinstance(spec, Cycle):
        return cycle(spec.n)
    if isinstance(spec, Empty):
        return empty(spec.m)
    if isinstance(spec, Complete):
        return complete(spec.k)
    if isinstance(spec, Wheel):
        g = join(cycle(spec.n), complete(1))
        labels = dict(g.labels)
        labels[spec.n] = "hub"
        return g.with_labels(labels)
    if isinstance(spec, JoinCycleEmpty):
        g = join(cycle(spec.n), empty(spec.m))
        labels = dict(g.labels)
        for j in range(spec.m):
            labels[spec.n + j] = f"hub:{j}"
        return g.with_labels(labels)
    if isinstance(spec, Bipyramid):
        g = join(cycle(spec.n), empty(2))
        labels = dict(g.labels)
        labels[spec.n] = "x"
        labels[spec.n + 1] = "y"
        return g.with_labels(labels)
    if isinstance(spec, BipyramidUnion):
        g1 = build(Bipyramid(spec.m))
        g2 = build(Bipyramid(spec.n))
        u = one_point_union([(g1, g1.vertex_with_role("y")), (g2, g2.vertex_with_role("y"))])
        labels = dict(u.labels)
        labels[spec.m + 1] = "y"
        return u.with_labels(labels)
    if isinstance(spec, FromFile):
        return from_dimacs(Path(spec.path).read_text(encoding="utf-8"))
    raise InvalidParameterError(f"unknown family spec {spec!r}")


# ---------------------------------------------------------------------------
# Pendant augmentation
# ---------------------------------------------------------------------------

def pendant_augment(g: Graph, coloring) -> tuple[Graph, "Coloring"]:
    """Repair every even neighborhood color class by attaching pendants.

    Takes a proper coloring of ``g``.  For each vertex v and each color c
    other than v's own, if c appears a positive even number of times among
    v's neighbors, a new degree-1 vertex adjacent to v is added and colored
    c.  The returned coloring is a strong odd coloring of the returned graph
    and uses no colors beyond the input palette; ``g`` is an induced
    subgraph of the result.
    """
    from .coloring import Coloring, as_coloring, is_proper

    col = as_coloring(coloring)
    if not is_proper(g, col):
        raise InvalidColoringError("pendant_augment requires a proper input coloring")
    edges = g.edges()
    colors = list(col.colors)
    nxt = g.n
    for v in range(g.n):
        counts: dict[int, int] = {}
        for w in g.adj[v]:
            counts[colors[w]] = counts.get(colors[w], 0) + 1
        for c in sorted(counts):
            if c != colors[v] and counts[c] % 2 == 0:
                edges.append((v, nxt))
                colors.append(c)
                nxt += 1
    out = Graph(nxt, edges, dict(g.labels))
    return out, Coloring(colors)


# ---------------------------------------------------------------------------
# DIMACS-style serialization
# ---------------------------------------------------------------------------
#
# Format: one "p edge <V> <E>" header, then E lines "e <u> <v>" with
# 1 <= u < v <= V, optional comment lines starting with "c", and optional
# label lines "l <vertex> <role>".  UTF-8, LF line endings.

def to_dimacs(g: Graph, include_labels: bool = True) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    if include_labels:
        for v in sorted(g.labels):
            lines.append(f"l {v + 1} {g.labels[v]}")
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = -1
    expected_edges = -1
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "p":
            if n >= 0:
                raise ParseError("duplicate problem header", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(f"malformed header {line!r}", lineno)
            try:
                n, expected_edges = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(f"malformed header {line!r}", lineno) from None
            if n < 0 or expected_edges < 0:
                raise ParseError("header counts must be nonnegative", lineno)
            header_line = lineno
        elif kind == "e":
            if n < 0:
                raise ParseError("edge before problem header", lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed edge line {line!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"malformed edge line {line!r}", lineno) from None
            if not (1 <= u < v <= n):
                raise ParseError(f"edge endpoints ({u}, {v}) must satisfy 1 <= u < v <= {n}", lineno)
            if (u, v) in seen:
                raise ParseError(f"duplicate edge ({u}, {v})", lineno)
            seen.add((u, v))
            edges.append((u - 1, v - 1))
        elif kind == "l":
            if n < 0:
                raise ParseError("label before problem header", lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed label line {line!r}", lineno)
            try:
                v = int(tokens[1])
            except ValueError:
                raise ParseError(f"malformed label line {line!r}", lineno) from None
            if not (1 <= v <= n):
                raise ParseError(f"label vertex {v} out of range", lineno)
            if v - 1 in labels:
                raise ParseError(f"duplicate label for vertex {v}", lineno)
            labels[v - 1] = tokens[2]
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n < 0:
        raise ParseError("missing problem header")
    if len(edges) != expected_edges:
        raise ParseError(
            f"header announced {expected_edges} edges but {len(edges)} were given", header_line
        )
    return Graph(n, edges, labels)
