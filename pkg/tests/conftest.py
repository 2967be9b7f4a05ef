from __future__ import annotations

from itertools import combinations, permutations

import pytest

from pathconn.graph_core import Graph


def brute_s_paths(g: Graph, s) -> set[tuple[int, ...]]:
    """Every S-path by trying all vertex sequences; independent of the DFS enumerator."""
    s = set(s)
    out = set()
    for r in range(2, g.n + 1):
        for seq in permutations(range(g.n), r):
            if seq[0] > seq[-1]:
                continue
            if s <= set(seq) and all(g.has_edge(u, v) for u, v in zip(seq, seq[1:])):
                out.add(seq)
    return out


def brute_pi(g: Graph, s) -> int:
    """pi_G(S) by trying ever larger sets of S-paths for pairwise internal disjointness."""
    s = frozenset(s)
    paths = sorted(brute_s_paths(g, s))
    info = [(frozenset(p) - s, {frozenset(e) for e in zip(p, p[1:])}) for p in paths]

    def ok(i, j):
        return not (info[i][0] & info[j][0]) and not (info[i][1] & info[j][1])

    best = 0
    for size in range(1, len(paths) + 1):
        if any(all(ok(i, j) for i, j in combinations(group, 2)) for group in combinations(range(len(paths)), size)):
            best = size
        else:
            break
    return best


@pytest.fixture
def c4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def p3() -> Graph:
    return Graph.from_edges(3, [(0, 1), (1, 2)])


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module and module.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in module.RESULTS:
            terminalreporter.write_line(line)
