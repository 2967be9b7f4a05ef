from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pathconn.errors import InvalidArgument
from pathconn.formula import (
    BipartiteCase,
    matching_cases,
    pi_bipartite,
    pi_complete,
    pi_spanning_bipartite,
    spanning_path_edge_bound,
)
from pathconn.graph_core import make_complete
from pathconn.oracle import pi_k_exact

GRID = [(a, b, k) for a in range(1, 13) for b in range(a, 13) for k in range(2, a + b + 1)]


@pytest.mark.parametrize(
    "n,k,expected",
    [
        (5, 2, 4),
        (4, 4, 2),
        # frozen from pi_k_exact(K_7, 3); floor((14 + 9 - 9) / 4) = 3
        (7, 3, 3),
    ],
)
def test_pi_complete_examples(n, k, expected):
    assert pi_complete(n, k).value == expected
    assert pi_complete(n, k).provenance == "COMPLETE"


def test_pi_complete_k7_k3_matches_oracle():
    assert pi_k_exact(make_complete(7), 3).value == pi_complete(7, 3).value == 3


@pytest.mark.parametrize("n,k", [(5, 1), (5, 6), (1, 2), (3, 0)])
def test_pi_complete_range(n, k):
    with pytest.raises(InvalidArgument):
        pi_complete(n, k)


@pytest.mark.parametrize(
    "a,b,k,value,case",
    [
        (3, 3, 4, 1, "EQ_SMALL_ONE"),
        (1, 1, 2, 1, "EQ_HALF"),
        (4, 4, 6, 2, "EQ_TWO"),
        (4, 4, 7, 2, "EQ_HALF"),
        (2, 5, 4, 0, "WIDE_ZERO"),
        (2, 4, 3, 1, "WIDE_ONE"),
        (3, 5, 2, 3, "LEM6_RANGE"),
        (4, 4, 5, 1, "EQ_SMALL_ONE"),
        (2, 3, 5, 1, "OFFBYONE_HALF"),
        (2, 3, 4, 1, "OFFBYONE_ONE"),
        (2, 2, 3, 1, "EQ_HALF"),
    ],
)
def test_pi_bipartite_examples(a, b, k, value, case):
    r = pi_bipartite(a, b, k)
    assert (r.value, r.provenance) == (value, case)


@pytest.mark.parametrize("a,b,k", [(3, 3, 1), (3, 3, 7), (0, 3, 2), (2, 2, 0)])
def test_pi_bipartite_range(a, b, k):
    with pytest.raises(InvalidArgument):
        pi_bipartite(a, b, k)


def test_branches_partition_the_grid():
    for a, b, k in GRID:
        assert len(matching_cases(a, b, k)) == 1, (a, b, k, matching_cases(a, b, k))
    seen = {pi_bipartite(a, b, k).provenance for a, b, k in GRID}
    assert seen == {c.value for c in BipartiteCase}


def test_degenerate_overlaps_resolve_to_single_branch():
    assert matching_cases(2, 2, 3) == [BipartiteCase.EQ_HALF]
    assert matching_cases(3, 3, 4) == [BipartiteCase.EQ_SMALL_ONE]


@given(st.integers(1, 30), st.integers(1, 30), st.data())
def test_symmetric_in_parts(a, b, data):
    k = data.draw(st.integers(2, a + b))
    left, right = pi_bipartite(a, b, k), pi_bipartite(b, a, k)
    assert left.value == right.value and left.provenance == right.provenance
    assert right.swapped == (b > a)


def test_small_k_range_consistency():
    for a, b, k in GRID:
        if k <= min(a, b):
            assert pi_bipartite(a, b, k).value == min(a // (k - 1), b // (k - 1))


@pytest.mark.parametrize("a,b,value", [(2, 3, 1), (4, 5, 2), (2, 4, 0), (1, 1, 1), (5, 4, 2)])
def test_pi_spanning_examples(a, b, value):
    assert pi_spanning_bipartite(a, b).value == value


def test_spanning_consistency():
    for a in range(1, 13):
        for b in range(a, 13):
            assert pi_spanning_bipartite(a, b).value == pi_bipartite(a, b, a + b).value


@pytest.mark.parametrize("a,b,bound", [(4, 5, 2), (1, 1, 1), (5, 5, 2)])
def test_spanning_path_edge_bound_examples(a, b, bound):
    assert spanning_path_edge_bound(a, b) == bound


def test_edge_bound_is_tight_when_spanning_paths_exist():
    for a in range(1, 40):
        for b in (a, a + 1):
            assert pi_spanning_bipartite(a, b).value == spanning_path_edge_bound(a, b)


def test_non_monotone_in_k():
    assert pi_bipartite(4, 4, 5).value == 1
    assert pi_bipartite(4, 4, 6).value == 2


def test_zero_size_errors():
    with pytest.raises(InvalidArgument):
        pi_spanning_bipartite(0, 2)
    with pytest.raises(InvalidArgument):
        spanning_path_edge_bound(0, 2)
