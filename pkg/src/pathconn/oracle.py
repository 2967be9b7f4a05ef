"""Exact brute-force pi_G(S) and pi_k(G) for small graphs.

pi_G(S) is the maximum clique of the compatibility graph whose nodes are the
S-paths of G and whose edges join internally disjoint pairs.  Everything here
is exhaustive; budgets turn runaway searches into :class:`BudgetExhausted`
instead of a truncated answer.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExhausted, InvalidArgument
from .graph_core import Graph, Path, PiValue, SPathFamily

DEFAULT_MAX_NODES = 50_000_000


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one pi_G(S) evaluation (enumeration plus clique search).

    ``max_nodes`` counts DFS extensions and branch-and-bound nodes, so the
    cutoff is deterministic.  ``time_limit`` (seconds) is opt-in.
    """

    max_nodes: int = DEFAULT_MAX_NODES
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_nodes <= 0:
            raise InvalidArgument(f"max_nodes must be positive, got {self.max_nodes}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise InvalidArgument(f"time_limit must be positive, got {self.time_limit}")

    @classmethod
    def from_env(cls, time_limit: float | None = None) -> SearchBudget:
        raw = os.environ.get("PATHCONN_BUDGET")
        if raw is None or not raw.strip():
            return cls(time_limit=time_limit)
        try:
            nodes = int(raw)
        except ValueError:
            raise InvalidArgument(f"PATHCONN_BUDGET must be an integer, got {raw!r}") from None
        return cls(max_nodes=nodes, time_limit=time_limit)


class _Meter:
    __slots__ = ("budget", "nodes", "deadline")

    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit

    def tick(self, n: int = 1) -> None:
        self.nodes += n
        if self.nodes > self.budget.max_nodes:
            raise BudgetExhausted(f"node budget of {self.budget.max_nodes} exhausted", self.nodes)
        if self.deadline is not None and self.nodes & 0x3FF == 0 and time.monotonic() > self.deadline:
            raise BudgetExhausted(f"time limit of {self.budget.time_limit}s exceeded", self.nodes)


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _validated_s(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    if len(s) < 2:
        raise InvalidArgument(f"S must have at least 2 vertices, got {sorted(s)}")
    g.check_vertices(s)
    return s


def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` moving only through ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _enumerate(g: Graph, s: frozenset[int], endpoints_in_s: bool, meter: _Meter) -> list[Path]:
    adj = g.adjacency
    s_mask = _mask(s)
    full = (1 << g.n) - 1
    found: list[tuple[int, ...]] = []
    seq: list[int] = []

    def extend(u: int, visited: int) -> None:
        meter.tick()
        need = s_mask & ~visited
        if not need:
            if seq[0] < seq[-1] and (not endpoints_in_s or s_mask >> u & 1):
                found.append(tuple(seq))
            if endpoints_in_s:
                # every S-vertex is behind us: no extension can end in S again
                return
        elif need & ~_reach(adj, u, full & ~visited):
            return
        for v in _bits(adj[u] & ~visited):
            seq.append(v)
            extend(v, visited | 1 << v)
            seq.pop()

    starts = sorted(s) if endpoints_in_s else range(g.n)
    for v in starts:
        seq.append(v)
        extend(v, 1 << v)
        seq.pop()
    found.sort(key=lambda t: (len(t), t))
    return [Path(t) for t in found]


def enumerate_s_paths(
    g: Graph,
    s: Iterable[int],
    budget: SearchBudget | None = None,
    *,
    endpoints_in_s: bool = False,
) -> list[Path]:
    """All simple paths of ``g`` through every vertex of ``s``, one per reversal class.

    Paths come in canonical orientation, sorted by length and then
    lexicographically.  With ``endpoints_in_s`` only paths that start and end
    in ``s`` are produced; trimming any S-path to the stretch between its
    outermost S-vertices keeps internal disjointness, so these suffice for
    computing pi_G(S).
    """
    s = _validated_s(g, s)
    return _enumerate(g, s, endpoints_in_s, _Meter(budget or SearchBudget()))


@dataclass(frozen=True)
class CompatibilityGraph:
    """Candidate S-paths with bitmask adjacency: i ~ j iff the paths are internally disjoint."""

    s: frozenset[int]
    nodes: tuple[Path, ...]
    adjacency: tuple[int, ...]

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)


def build_compatibility(g: Graph, s: Iterable[int], paths: Sequence[Path]) -> CompatibilityGraph:
    s = frozenset(s)
    m = len(paths)
    # inverted indexes: which paths use a given non-S vertex / a given edge
    by_vertex: dict[int, int] = {}
    by_edge: dict[tuple[int, int], int] = {}
    for i, p in enumerate(paths):
        bit = 1 << i
        for v in p.vertex_set - s:
            by_vertex[v] = by_vertex.get(v, 0) | bit
        for e in p.edges:
            by_edge[e] = by_edge.get(e, 0) | bit
    everyone = (1 << m) - 1
    adjacency = []
    for i, p in enumerate(paths):
        conflict = 1 << i
        for v in p.vertex_set - s:
            conflict |= by_vertex[v]
        for e in p.edges:
            conflict |= by_edge[e]
        adjacency.append(everyone & ~conflict)
    return CompatibilityGraph(s, tuple(paths), tuple(adjacency))


def _color_sort(cand: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of ``cand``; returns vertices and colours in colour order."""
    order: list[int] = []
    colors: list[int] = []
    uncolored = cand
    color = 0
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncolored ^= low
            q &= ~adj[v] & ~low
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(
    adj: Sequence[int],
    meter: _Meter | None = None,
    *,
    stop_at: int | None = None,
    upper: int | None = None,
) -> list[int]:
    """Maximum clique of a bitmask graph by colouring-bounded branch and bound.

    The search returns early once the clique reaches ``stop_at`` or the known
    ``upper`` bound.  Among maximum cliques the first one found is returned,
    which makes the result a pure function of ``adj``.
    """
    n = len(adj)
    if n == 0:
        return []
    meter = meter or _Meter(SearchBudget())
    # renumber by non-increasing degree so low bits are branched on last
    perm = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    pos = {v: i for i, v in enumerate(perm)}
    radj = [0] * n
    for i, v in enumerate(perm):
        radj[i] = _mask(pos[u] for u in _bits(adj[v]))

    limit = n if upper is None else min(upper, n)
    if stop_at is not None:
        limit = min(limit, stop_at)
    best: list[int] = []
    current: list[int] = []

    class _Done(Exception):
        pass

    def expand(cand: int) -> None:
        nonlocal best
        meter.tick()
        order, colors = _color_sort(cand, radj)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + colors[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            nxt = cand & radj[v]
            if nxt:
                expand(nxt)
            elif len(current) > len(best):
                best = list(current)
                if len(best) >= limit:
                    raise _Done
            current.pop()
            cand &= ~(1 << v)

    try:
        expand((1 << n) - 1)
    except _Done:
        pass
    return sorted(perm[i] for i in best)


def _family_for(
    g: Graph, s: frozenset[int], meter: _Meter, stop_at: int | None
) -> tuple[SPathFamily, bool]:
    """Best family found for S; the flag is False when ``stop_at`` cut the search short."""
    paths = _enumerate(g, s, True, meter)
    compat = build_compatibility(g, s, paths)
    # each path uses a distinct edge at every S-vertex
    degree_cap = min(g.degree(v) for v in s)
    clique = max_clique(compat.adjacency, meter, stop_at=stop_at, upper=degree_cap)
    fam = SPathFamily(s, tuple(paths[i] for i in clique))
    complete = stop_at is None or len(clique) < stop_at or len(clique) >= degree_cap
    return fam, complete


def max_internally_disjoint(g: Graph, s: Iterable[int], budget: SearchBudget | None = None) -> PiValue:
    """Exact pi_G(S) with one maximum family of internally disjoint S-paths as witness."""
    s = _validated_s(g, s)
    fam, _ = _family_for(g, s, _Meter(budget or SearchBudget()), None)
    return PiValue(len(fam), "oracle", witness=fam, argmin_s=s)


def _evaluate(args: tuple[Graph, frozenset[int], SearchBudget, int | None]) -> tuple[SPathFamily, bool]:
    g, s, budget, stop_at = args
    return _family_for(g, s, _Meter(budget), stop_at)


def _first_min(results: Sequence[tuple[SPathFamily, bool]]) -> tuple[SPathFamily, bool]:
    if not results:
        raise InvalidArgument("subset source yielded no subsets")
    best = results[0]
    for item in results[1:]:
        if len(item[0]) < len(best[0]):
            best = item
    return best


def pi_k_exact(
    g: Graph,
    k: int,
    budget: SearchBudget | None = None,
    subset_source: Iterable[Iterable[int]] | None = None,
    *,
    cap: int | None = None,
    workers: int | None = None,
) -> PiValue:
    """Exact min of pi_G(S) over k-subsets (all of them unless ``subset_source`` is given).

    ``argmin_s`` is the first minimising subset in iteration order and the
    witness is a maximum family for it.  With ``cap`` each evaluation stops
    once it reaches ``cap`` paths; a value cut short this way is only a lower
    bound (at least ``cap``) and carries provenance ``"oracle>="``.  ``workers > 1``
    evaluates subsets in a process pool and reduces in iteration order, giving
    the same result as the sequential run.
    """
    if not 2 <= k <= g.n:
        raise InvalidArgument(f"k must satisfy 2 <= k <= n = {g.n}, got {k}")
    budget = budget or SearchBudget()
    if subset_source is None:
        subsets = [frozenset(c) for c in combinations(range(g.n), k)]
    else:
        subsets = [frozenset(c) for c in subset_source]
    for s in subsets:
        if len(s) != k:
            raise InvalidArgument(f"subset {sorted(s)} does not have size {k}")
        g.check_vertices(s)

    if cap is not None and cap < 1:
        raise InvalidArgument(f"cap must be at least 1, got {cap}")

    if workers and workers > 1 and len(subsets) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_evaluate, [(g, s, budget, cap) for s in subsets], chunksize=1))
        fam, complete = _first_min(results)
    else:
        # running minimum: a later subset only matters if it beats the best so far
        fam, complete = None, True
        for s in subsets:
            if fam is not None and len(fam) == 0:
                break
            limit = cap if fam is None else (len(fam) if cap is None else min(cap, len(fam)))
            cand, cand_complete = _family_for(g, s, _Meter(budget), limit)
            if fam is None or len(cand) < len(fam):
                fam, complete = cand, cand_complete
        if fam is None:
            raise InvalidArgument("subset source yielded no subsets")
    provenance = "oracle" if complete else "oracle>="
    return PiValue(len(fam), provenance, witness=fam, argmin_s=fam.s, evaluations=len(subsets))


def bipartite_subset_classes(a: int, b: int, k: int) -> Iterator[frozenset[int]]:
    """One k-subset of K_{a,b} per (|S cap X|, |S cap Y|) split.

    Part-preserving permutations act transitively on each split, so these
    representatives give the same minimum as all k-subsets.  They are yielded
    in the lexicographic order of their first members, X-heavy splits first,
    so the first minimiser matches that of a full sweep.
    """
    if a < 1 or b < 1:
        raise InvalidArgument(f"part sizes must be positive, got ({a}, {b})")
    if not 0 <= k <= a + b:
        raise InvalidArgument(f"k must satisfy 0 <= k <= a+b = {a + b}, got {k}")
    for sx in range(min(a, k), max(0, k - b) - 1, -1):
        sy = k - sx
        yield frozenset(range(sx)) | frozenset(range(a, a + sy))
