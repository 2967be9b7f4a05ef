"""Graphs, paths and S-path families, plus the checks that define them.

Vertices are integer ids ``0..n-1``.  For complete bipartite graphs the ids
``0..a-1`` are ``x_1..x_a`` and ``a..a+b-1`` are ``y_1..y_b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphParseError, InvalidArgument

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgument(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidArgument(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgument(f"edge ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            normalized.add(_edge(u, v))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        """Build a graph, rejecting duplicate edges (in either orientation)."""
        seen: set[Edge] = set()
        for u, v in edges:
            e = _edge(u, v)
            if e in seen:
                raise InvalidArgument(f"duplicate edge ({u}, {v})")
            seen.add(e)
        return cls(n, frozenset(seen))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks: bit ``v`` of ``adjacency[u]`` is set iff uv is an edge."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Stable numbering of the edges, used for edge bitsets."""
        return {e: i for i, e in enumerate(sorted(self.edges))}

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adjacency[v] >> u & 1]

    def check_vertices(self, vs: Iterable[int]) -> None:
        for v in vs:
            if not isinstance(v, int) or not 0 <= v < self.n:
                raise InvalidArgument(f"vertex id {v!r} is not in 0..{self.n - 1}")


@dataclass(frozen=True)
class BipartiteLabeling:
    """Translation between vertex ids of K_{a,b} and the names x_i / y_j."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 1:
            raise InvalidArgument(f"part sizes must be positive, got ({self.a}, {self.b})")

    @property
    def n(self) -> int:
        return self.a + self.b

    def x(self, i: int) -> int:
        """Id of x_i (1-based)."""
        if not 1 <= i <= self.a:
            raise InvalidArgument(f"x_{i} does not exist for a={self.a}")
        return i - 1

    def y(self, j: int) -> int:
        """Id of y_j (1-based)."""
        if not 1 <= j <= self.b:
            raise InvalidArgument(f"y_{j} does not exist for b={self.b}")
        return self.a + j - 1

    @property
    def X(self) -> frozenset[int]:
        return frozenset(range(self.a))

    @property
    def Y(self) -> frozenset[int]:
        return frozenset(range(self.a, self.a + self.b))

    def in_x(self, v: int) -> bool:
        return 0 <= v < self.a

    def label(self, v: int) -> str:
        if 0 <= v < self.a:
            return f"x{v + 1}"
        if self.a <= v < self.n:
            return f"y{v - self.a + 1}"
        raise InvalidArgument(f"vertex id {v} is not in 0..{self.n - 1}")

    def parse(self, label: str) -> int:
        m = re.fullmatch(r"\s*([xXyY])_?(\d+)\s*", label)
        if not m:
            raise InvalidArgument(f"cannot parse vertex label {label!r} (expected x<i> or y<j>)")
        idx = int(m.group(2))
        return self.x(idx) if m.group(1) in "xX" else self.y(idx)

    def parse_many(self, labels: str | Iterable[str]) -> frozenset[int]:
        if isinstance(labels, str):
            labels = [t for t in labels.split(",") if t.strip()]
        return frozenset(self.parse(t) for t in labels)

    def format_path(self, path: Path, sep: str = " ") -> str:
        return sep.join(self.label(v) for v in path.vertices)


def canonicalize(seq: Sequence[int]) -> tuple[int, ...]:
    """Orient a vertex sequence so that it equals the canonical form of its reverse."""
    t = tuple(seq)
    r = t[::-1]
    if t[0] != t[-1]:
        return t if t[0] < t[-1] else r
    return min(t, r)


@dataclass(frozen=True)
class Path:
    """A simple path, stored in canonical orientation (smaller endpoint first)."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        if not vs:
            raise InvalidArgument("a path needs at least one vertex")
        if len(set(vs)) != len(vs):
            raise InvalidArgument(f"path {vs} repeats a vertex")
        object.__setattr__(self, "vertices", canonicalize(vs))

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))

    def reversed(self) -> tuple[int, ...]:
        return self.vertices[::-1]


@dataclass(frozen=True)
class SPathFamily:
    """A target set ``s`` together with paths claimed to be internally disjoint S-paths.

    Construction does not enforce the claim; use :func:`validate_family`.
    """

    s: frozenset[int]
    paths: tuple[Path, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", frozenset(self.s))
        object.__setattr__(
            self, "paths", tuple(p if isinstance(p, Path) else Path(tuple(p)) for p in self.paths)
        )
        if len(self.s) < 2:
            raise InvalidArgument(f"S must have at least 2 vertices, got {sorted(self.s)}")

    def __len__(self) -> int:
        return len(self.paths)


@dataclass(frozen=True)
class PiValue:
    """A path-connectivity value and where it came from.

    ``provenance`` is a formula branch name (e.g. ``"EQ_TWO"``, ``"COMPLETE"``) or
    ``"oracle"``.  ``witness`` has exactly ``value`` paths when present;
    for k-subset minima it belongs to ``argmin_s``.
    """

    value: int
    provenance: str
    witness: SPathFamily | None = None
    argmin_s: frozenset[int] | None = None
    swapped: bool = False
    evaluations: int = 0


@dataclass(frozen=True)
class Violation:
    kind: str  # "not-s-path", "edge", "vertex"
    paths: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return "; ".join(f"{v.kind} {list(v.paths)}: {v.detail}" for v in self.violations)


def make_complete_bipartite(a: int, b: int) -> tuple[Graph, BipartiteLabeling]:
    labeling = BipartiteLabeling(a, b)
    edges = frozenset((i, a + j) for i in range(a) for j in range(b))
    return Graph(a + b, edges), labeling


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidArgument(f"complete graph order must be at least 1, got {n}")
    return Graph(n, frozenset(combinations(range(n), 2)))


def _check_s(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    g.check_vertices(s)
    if len(s) < 2:
        raise InvalidArgument(f"S must have at least 2 vertices, got {sorted(s)}")
    return s


def _path_defects(g: Graph, s: frozenset[int], p: Path) -> list[str]:
    defects = []
    for u, v in zip(p.vertices, p.vertices[1:]):
        if not g.has_edge(u, v):
            defects.append(f"step {u}-{v} is not an edge")
    missing = s - p.vertex_set
    if missing:
        defects.append(f"misses S-vertices {sorted(missing)}")
    return defects


def is_s_path(g: Graph, s: Iterable[int], p: Path | Sequence[int]) -> bool:
    """True iff ``p`` is a simple path of ``g`` through every vertex of ``s``."""
    s = _check_s(g, s)
    if not isinstance(p, Path):
        if len(set(p)) != len(p) or not p:
            return False
        p = Path(tuple(p))
    g.check_vertices(p.vertices)
    return not _path_defects(g, s, p)


def validate_family(g: Graph, fam: SPathFamily) -> ValidationReport:
    """Check every path and every pair of paths, reporting all violations."""
    s = _check_s(g, fam.s)
    violations: list[Violation] = []
    for i, p in enumerate(fam.paths):
        try:
            g.check_vertices(p.vertices)
        except InvalidArgument as exc:
            violations.append(Violation("not-s-path", (i,), str(exc)))
            continue
        for d in _path_defects(g, s, p):
            violations.append(Violation("not-s-path", (i,), d))
    for i, j in combinations(range(len(fam.paths)), 2):
        p, q = fam.paths[i], fam.paths[j]
        shared = p.edges & q.edges
        if shared:
            violations.append(Violation("edge", (i, j), f"shared edges {sorted(shared)}"))
        extra = (p.vertex_set & q.vertex_set) - s
        if extra:
            violations.append(Violation("vertex", (i, j), f"shared vertices outside S {sorted(extra)}"))
    return ValidationReport(tuple(violations))


def parse_graph_text(text: str) -> Graph:
    """Parse the edge-list format: first line ``n``, then one ``u v`` per line.

    ``#`` starts a comment; blank lines are skipped.  Duplicate edges and
    self-loops are errors.
    """
    n: int | None = None
    seen: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 1:
                raise GraphParseError("expected the vertex count on its own line", lineno)
            try:
                n = int(tokens[0])
            except ValueError:
                raise GraphParseError(f"vertex count {tokens[0]!r} is not an integer", lineno) from None
            if n < 0:
                raise GraphParseError("vertex count must be non-negative", lineno)
            continue
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex in {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex out of range 0..{n - 1} in {line!r}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        e = _edge(u, v)
        if e in seen:
            raise GraphParseError(f"duplicate edge {u} {v} (first on line {seen[e]})", lineno)
        seen[e] = lineno
    if n is None:
        raise GraphParseError("empty graph file: missing vertex count")
    return Graph(n, frozenset(seen))


def format_graph_text(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_text(fh.read())
