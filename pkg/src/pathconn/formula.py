"""Closed forms for the k-path-connectivity of K_n and K_{a,b}."""

from __future__ import annotations

from enum import Enum
from typing import Callable, NamedTuple

from .errors import InvalidArgument
from .graph_core import PiValue


class BipartiteCase(str, Enum):
    LEM6_RANGE = "LEM6_RANGE"
    EQ_SMALL_ONE = "EQ_SMALL_ONE"
    EQ_TWO = "EQ_TWO"
    EQ_HALF = "EQ_HALF"
    OFFBYONE_ONE = "OFFBYONE_ONE"
    OFFBYONE_HALF = "OFFBYONE_HALF"
    WIDE_ONE = "WIDE_ONE"
    WIDE_ZERO = "WIDE_ZERO"


class _Branch(NamedTuple):
    case: BipartiteCase
    applies: Callable[[int, int, int], bool]
    value: Callable[[int, int, int], int]
    text: str


# Branch order; a <= b is assumed. Every branch after the first carries k > a.
_BRANCHES: tuple[_Branch, ...] = (
    _Branch(
        BipartiteCase.LEM6_RANGE,
        lambda a, b, k: 2 <= k <= a,
        lambda a, b, k: a // (k - 1),
        "floor(a/(k-1)), 2 <= k <= a",
    ),
    _Branch(
        BipartiteCase.EQ_SMALL_ONE,
        lambda a, b, k: a == b and k > a and ((a == 3 and k == 4) or (a >= 4 and a + 1 <= k <= 2 * a - 3)),
        lambda a, b, k: 1,
        "1, a=b and (a=3, k=4 or a+1 <= k <= 2a-3 with a >= 4)",
    ),
    _Branch(
        BipartiteCase.EQ_TWO,
        lambda a, b, k: a == b and k > a and a >= 4 and k == 2 * a - 2,
        lambda a, b, k: 2,
        "2, a=b and k=2a-2 with a >= 4",
    ),
    _Branch(
        BipartiteCase.EQ_HALF,
        lambda a, b, k: a == b and k > a and ((a >= 2 and k == 2 * a - 1) or k == 2 * a),
        # max(.., 1) kept as written although floor(a/2) >= 1 whenever k = 2a-1
        lambda a, b, k: max(a // 2, 1),
        "max(floor(a/2), 1), a=b and (k=2a-1 with a >= 2 or k=2a)",
    ),
    _Branch(
        BipartiteCase.OFFBYONE_ONE,
        lambda a, b, k: b == a + 1 and a + 1 <= k <= 2 * a,
        lambda a, b, k: 1,
        "1, b=a+1 and a+1 <= k <= 2a",
    ),
    _Branch(
        BipartiteCase.OFFBYONE_HALF,
        lambda a, b, k: b == a + 1 and k == a + b,
        lambda a, b, k: (a + 1) // 2,
        "floor((a+1)/2), b=a+1 and k=2a+1=a+b",
    ),
    _Branch(
        BipartiteCase.WIDE_ONE,
        lambda a, b, k: b >= a + 2 and k == a + 1,
        lambda a, b, k: 1,
        "1, b >= a+2 and k=a+1",
    ),
    _Branch(
        BipartiteCase.WIDE_ZERO,
        lambda a, b, k: b >= a + 2 and a + 2 <= k <= a + b,
        lambda a, b, k: 0,
        "0, b >= a+2 and a+2 <= k <= a+b",
    ),
)

BRANCH_TEXT: dict[BipartiteCase, str] = {br.case: br.text for br in _BRANCHES}
COMPLETE_TEXT = "floor((2n + k^2 - 3k) / (2(k-1))), 2 <= k <= n"


def _check_bipartite(a: int, b: int, k: int) -> tuple[int, int, bool]:
    if a < 1 or b < 1:
        raise InvalidArgument(f"part sizes must be positive, got ({a}, {b})")
    if not 2 <= k <= a + b:
        raise InvalidArgument(f"k must satisfy 2 <= k <= a+b = {a + b}, got {k}")
    if a > b:
        return b, a, True
    return a, b, False


def matching_cases(a: int, b: int, k: int) -> list[BipartiteCase]:
    """Every branch whose side conditions hold at (a, b, k); a partition has exactly one."""
    a, b, _ = _check_bipartite(a, b, k)
    return [br.case for br in _BRANCHES if br.applies(a, b, k)]


def pi_bipartite(a: int, b: int, k: int) -> PiValue:
    """pi_k(K_{a,b}), labelled with the branch of the case table that produced it."""
    a, b, swapped = _check_bipartite(a, b, k)
    for br in _BRANCHES:
        if br.applies(a, b, k):
            return PiValue(br.value(a, b, k), br.case.value, swapped=swapped)
    raise AssertionError(f"no branch covers (a={a}, b={b}, k={k})")


def pi_complete(n: int, k: int) -> PiValue:
    if n < 2:
        raise InvalidArgument(f"order must be at least 2, got {n}")
    if not 2 <= k <= n:
        raise InvalidArgument(f"k must satisfy 2 <= k <= n = {n}, got {k}")
    return PiValue((2 * n + k * k - 3 * k) // (2 * (k - 1)), "COMPLETE")


def pi_spanning_bipartite(a: int, b: int) -> PiValue:
    """Maximum number of edge-disjoint spanning paths of K_{a,b}."""
    if a < 1 or b < 1:
        raise InvalidArgument(f"part sizes must be positive, got ({a}, {b})")
    swapped = a > b
    if swapped:
        a, b = b, a
    value = max(b // 2, 1) if b <= a + 1 else 0
    return PiValue(value, "SPANNING", swapped=swapped)


def spanning_path_edge_bound(a: int, b: int) -> int:
    """Edge-count upper bound on edge-disjoint spanning paths: each uses a+b-1 of the ab edges."""
    if a < 1 or b < 1:
        raise InvalidArgument(f"part sizes must be positive, got ({a}, {b})")
    return a * b // (a + b - 1)
