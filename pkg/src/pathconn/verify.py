"""Formula-versus-oracle sweep over complete bipartite graphs."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import BudgetExhausted
from .formula import pi_bipartite
from .graph_core import make_complete_bipartite
from .oracle import SearchBudget, bipartite_subset_classes, pi_k_exact

DEFAULT_MAX_ORDER = 9
LARGE_MAX_ORDER = 11


@dataclass(frozen=True)
class CellResult:
    a: int
    b: int
    k: int
    formula: int
    case: str
    oracle: int | None  # None when the budget ran out
    at_least: bool = False  # oracle value is only a lower bound
    argmin: tuple[int, ...] = ()
    evaluations: int = 0

    @property
    def skipped(self) -> bool:
        return self.oracle is None

    @property
    def mismatch(self) -> bool:
        return self.oracle is not None and (self.at_least or self.oracle != self.formula)


@dataclass(frozen=True)
class VerifyReport:
    max_order: int
    orbit: bool
    cells: tuple[CellResult, ...]

    @property
    def mismatches(self) -> list[CellResult]:
        return [c for c in self.cells if c.mismatch]

    @property
    def skipped(self) -> list[CellResult]:
        return [c for c in self.cells if c.skipped]

    @property
    def evaluations(self) -> int:
        return sum(c.evaluations for c in self.cells)

    def render(self, verbose: bool = False) -> str:
        lines = [
            f"verify: 1 <= a <= b, a+b <= {self.max_order}, 2 <= k <= a+b, "
            f"orbit reduction {'on' if self.orbit else 'off'}"
        ]
        for c in self.cells:
            if verbose or c.mismatch or c.skipped:
                if c.skipped:
                    status, shown = "SKIPPED", "?"
                else:
                    status = "MISMATCH" if c.mismatch else "ok"
                    shown = f">={c.oracle}" if c.at_least else str(c.oracle)
                lines.append(
                    f"{status:8} a={c.a} b={c.b} k={c.k} formula={c.formula} ({c.case}) "
                    f"oracle={shown} argmin={list(c.argmin)} subsets={c.evaluations}"
                )
        lines.append(
            f"{len(self.mismatches)} mismatches, {len(self.cells) - len(self.skipped)} cells checked, "
            f"{len(self.skipped)} skipped, {self.evaluations} subset evaluations"
        )
        return "\n".join(lines) + "\n"


def sweep_cells(max_order: int) -> list[tuple[int, int, int]]:
    return [
        (a, b, k)
        for total in range(2, max_order + 1)
        for a in range(1, total // 2 + 1)
        for b in [total - a]
        for k in range(2, a + b + 1)
    ]


def check_cell(a: int, b: int, k: int, orbit: bool = True, budget: SearchBudget | None = None) -> CellResult:
    expected = pi_bipartite(a, b, k)
    g, _ = make_complete_bipartite(a, b)
    source = bipartite_subset_classes(a, b, k) if orbit else None
    try:
        # cap at formula+1: below the cap the minimum is exact, reaching it is already a mismatch
        got = pi_k_exact(g, k, budget, source, cap=expected.value + 1)
    except BudgetExhausted:
        return CellResult(a, b, k, expected.value, expected.provenance, None)
    return CellResult(
        a,
        b,
        k,
        expected.value,
        expected.provenance,
        got.value,
        at_least=got.provenance != "oracle",
        argmin=tuple(sorted(got.argmin_s)),
        evaluations=got.evaluations,
    )


def _check(args: tuple[int, int, int, bool, SearchBudget | None]) -> CellResult:
    return check_cell(*args)


def run_verify(
    max_order: int = DEFAULT_MAX_ORDER,
    orbit: bool = True,
    workers: int | None = None,
    budget: SearchBudget | None = None,
) -> VerifyReport:
    """Compare the case table with the exact oracle on every cell with a+b <= max_order.

    Cells are reported in canonical order whatever the worker count.
    """
    jobs = [(a, b, k, orbit, budget) for a, b, k in sweep_cells(max_order)]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_check, jobs, chunksize=1))
    else:
        cells = [_check(job) for job in jobs]
    return VerifyReport(max_order, orbit, tuple(cells))
