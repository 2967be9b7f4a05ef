"""Exit criteria.  Each test records one PASS/FAIL line, echoed in the pytest summary.

Run alone with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import time

from pathconn.cli import main
from pathconn.formula import pi_bipartite, pi_complete, spanning_path_edge_bound
from pathconn.graph_core import make_complete, make_complete_bipartite, validate_family
from pathconn.oracle import bipartite_subset_classes, pi_k_exact
from pathconn.witness import ConstructionRecipe, build_spanning_family, build_witness

RESULTS: list[str] = []


def record(number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" [{detail}]" if detail else "")
    RESULTS.append(line)
    print(line)
    assert ok, line


def _cli(*argv: str) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_criterion_1_verify_sweep_order_9():
    start = time.perf_counter()
    code, out = _cli("verify", "--max-order", "9", "--orbit")
    elapsed = time.perf_counter() - start
    summary = out.splitlines()[-1]
    ok = code == 0 and summary.startswith("0 mismatches, ") and " 0 skipped" in summary and elapsed < 300
    record(1, "verify --max-order 9 has zero mismatches", ok, f"{summary}; {elapsed:.1f}s")


SPOT = [
    (3, 3, 4, 1),
    (1, 1, 2, 1),
    (4, 4, 6, 2),
    (4, 4, 7, 2),
    (2, 3, 5, 1),
]


def test_criterion_2_spot_values():
    got = []
    for a, b, k, value in SPOT:
        g, _ = make_complete_bipartite(a, b)
        got.append((pi_bipartite(a, b, k).value, pi_k_exact(g, k).value, value))
    ok = all(f == o == v for f, o, v in got)
    record(2, "spot values by formula and oracle", ok, " ".join(f"{f}/{o}" for f, o, _ in got))


def test_criterion_3_complete_graph_formula():
    bad = []
    for n in range(3, 8):
        g = make_complete(n)
        for k in range(2, n + 1):
            if pi_k_exact(g, k).value != pi_complete(n, k).value:
                bad.append((n, k))
    record(3, "oracle on K_n equals the complete-graph formula, 3 <= n <= 7", not bad, f"mismatches={bad}")


def test_criterion_4_spanning_families():
    bad = []
    checked = 0
    for a in range(1, 9):
        for b in (a, a + 1):
            if a + b > 16:
                continue
            g, _ = make_complete_bipartite(a, b)
            fam = build_spanning_family(a, b)
            checked += 1
            if not (
                len(fam) == max(b // 2, 1) == spanning_path_edge_bound(a, b)
                and validate_family(g, fam).ok
            ):
                bad.append((a, b))
    record(4, "spanning families valid, sized max(floor(b/2),1), bound tight", not bad, f"{checked} shapes, bad={bad}")


def test_criterion_5_replacement_witness():
    bad = []
    for a in range(4, 7):
        g, lab = make_complete_bipartite(a, a)
        s = lab.X | {lab.y(j) for j in range(1, a - 1)}
        w = build_witness(a, a, s)
        if not (w.recipe is ConstructionRecipe.REPLACEMENT_2A_MINUS_2 and len(w) == 2 and validate_family(g, w.family).ok):
            bad.append(a)
    record(5, "replacement witness gives 2 internally disjoint S-paths, a = 4..6", not bad, f"bad={bad}")


def test_criterion_6_non_monotone():
    g, _ = make_complete_bipartite(4, 4)
    p5, p6 = pi_k_exact(g, 5).value, pi_k_exact(g, 6).value
    record(6, "oracle: pi_5(K_4,4) = 1 < pi_6(K_4,4) = 2", (p5, p6) == (1, 2), f"{p5} < {p6}")


def test_criterion_7_orbit_reduction():
    bad = []
    cells = 0
    for total in range(2, 8):
        for a in range(1, total // 2 + 1):
            b = total - a
            g, _ = make_complete_bipartite(a, b)
            for k in range(2, total + 1):
                full = pi_k_exact(g, k)
                reduced = pi_k_exact(g, k, subset_source=bipartite_subset_classes(a, b, k))
                cells += 1
                if (full.value, full.argmin_s) != (reduced.value, reduced.argmin_s):
                    bad.append((a, b, k))
    record(7, "orbit reduction equals full sweep, a+b <= 7", not bad, f"{cells} cells, bad={bad}")


def test_criterion_8_determinism():
    code_seq, seq = _cli("verify", "--max-order", "8")
    code_par, par = _cli("verify", "--max-order", "8", "--parallel", "--workers", "2")
    record(8, "sequential and parallel verify --max-order 8 reports byte-identical", seq == par and code_seq == code_par == 0)


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
