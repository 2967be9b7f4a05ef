"""Explicit families of internally disjoint S-paths in K_{a,b}.

The builders work on local names ``("x", i)`` / ``("y", j)`` of a small
complete bipartite graph K_{p,q} and then place those names onto actual
vertex ids.  Subscripts are 1-based and taken modulo the part size into
``1..m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Sequence

from .errors import InvalidArgument, NoSpanningPath
from .graph_core import BipartiteLabeling, Path, SPathFamily, make_complete_bipartite, validate_family
from .oracle import SearchBudget, max_internally_disjoint

Local = tuple[str, int]


class ConstructionRecipe(str, Enum):
    SPANNING_OFFBYONE = "SPANNING_OFFBYONE"
    SPANNING_BALANCED = "SPANNING_BALANCED"
    RESTRICT_2A_MINUS_1 = "RESTRICT_2A_MINUS_1"
    REPLACEMENT_2A_MINUS_2 = "REPLACEMENT_2A_MINUS_2"
    SINGLE_SPANNING = "SINGLE_SPANNING"
    EXTEND_SHAT = "EXTEND_SHAT"
    ORACLE_FALLBACK = "ORACLE_FALLBACK"
    NO_PATH = "NO_PATH"


@dataclass(frozen=True)
class Witness:
    family: SPathFamily
    recipe: ConstructionRecipe

    def __len__(self) -> int:
        return len(self.family)


def _wrap(t: int, m: int) -> int:
    return (t - 1) % m + 1


def spanning_local(p: int, q: int) -> list[list[Local]]:
    """Edge-disjoint spanning paths of K_{p,q} (p <= q <= p+1) in local names.

    For q = p+1 the j-th path gives x_i the neighbours y_{i+2(j-1)}, y_{i+2j-1};
    for q = p >= 2 the same holds for i < p while x_p ends the path at
    y_{p+2j-2}.
    """
    if p < 1 or q < 1:
        raise InvalidArgument(f"part sizes must be positive, got ({p}, {q})")
    if not p <= q <= p + 1:
        raise NoSpanningPath(f"K_{{{p},{q}}} has no spanning-path family of this shape")
    if p == q == 1:
        return [[("x", 1), ("y", 1)]]
    paths = []
    for j in range(1, q // 2 + 1):
        off = 2 * (j - 1)
        seq: list[Local] = []
        if q == p + 1:
            for i in range(1, p + 1):
                seq += [("y", _wrap(i + off, q)), ("x", i)]
            seq.append(("y", _wrap(p + 1 + off, q)))
        else:
            for i in range(1, p):
                seq += [("y", _wrap(i + off, q)), ("x", i)]
            seq += [("y", _wrap(p + off, q)), ("x", p)]
        paths.append(seq)
    return paths


def _place(seq: Sequence[Local], xs: Sequence[int], ys: Sequence[int]) -> Path:
    return Path(tuple(xs[i - 1] if side == "x" else ys[i - 1] for side, i in seq))


def build_spanning_family(a: int, b: int) -> SPathFamily:
    """max(floor(b/2), 1) edge-disjoint spanning paths of K_{a,b} for a <= b <= a+1."""
    if a < 1 or b < 1:
        raise InvalidArgument(f"part sizes must be positive, got ({a}, {b})")
    labeling = BipartiteLabeling(a, b)
    xs = [labeling.x(i) for i in range(1, a + 1)]
    ys = [labeling.y(j) for j in range(1, b + 1)]
    if a > b:
        # same construction with the roles of the parts exchanged
        local = spanning_local(b, a)
        xs, ys = ys, xs
    else:
        local = spanning_local(a, b)
    paths = tuple(_place(seq, xs, ys) for seq in local)
    return SPathFamily(frozenset(range(a + b)), paths)


def _oracle(a: int, b: int, s: frozenset[int], budget: SearchBudget | None) -> Witness:
    g, _ = make_complete_bipartite(a, b)
    result = max_internally_disjoint(g, s, budget)
    return Witness(result.witness, ConstructionRecipe.ORACLE_FALLBACK)


def build_witness(a: int, b: int, s: Iterable[int], budget: SearchBudget | None = None) -> Witness:
    """A family of internally disjoint S-paths in K_{a,b} with at least pi_k(K_{a,b}) paths, k = |S|.

    S is first moved by a part-preserving relabelling to the standard shape
    {x_1..x_sx, y_1..y_sy}; the family is built there and mapped back.
    Shapes without a direct construction go to the exact oracle, which may
    raise :class:`BudgetExhausted`.
    """
    labeling = BipartiteLabeling(a, b)
    s = frozenset(s)
    if len(s) < 2:
        raise InvalidArgument(f"S must have at least 2 vertices, got {sorted(s)}")
    for v in s:
        if not 0 <= v < a + b:
            raise InvalidArgument(f"vertex id {v} is not in 0..{a + b - 1}")

    X, Y = sorted(labeling.X), sorted(labeling.Y)
    small, large = (X, Y) if a <= b else (Y, X)
    p, q = len(small), len(large)
    # canonical order: S-members first, so local x_1..x_sx / y_1..y_sy are exactly S
    small_order = sorted(small, key=lambda v: (v not in s, v))
    large_order = sorted(large, key=lambda v: (v not in s, v))
    sx = sum(v in s for v in small)
    sy = sum(v in s for v in large)
    k = sx + sy
    R = ConstructionRecipe

    def single(paths: Iterable[Path], recipe: ConstructionRecipe) -> Witness:
        return Witness(SPathFamily(s, tuple(paths)), recipe)

    def spanning_pq(count: int | None = None) -> list[Path]:
        local = spanning_local(p, q)
        return [_place(seq, small_order, large_order) for seq in local[:count]]

    if k == p + q:
        if q > p + 1:
            return single((), R.NO_PATH)
        if p == q == 1:
            return single(spanning_pq(), R.SINGLE_SPANNING)
        return single(spanning_pq(), R.SPANNING_OFFBYONE if q == p + 1 else R.SPANNING_BALANCED)

    if k <= p:
        return _oracle(a, b, s, budget)

    if p == q:
        if k == 2 * p - 1:
            # K[S] = K_{p-1,p}: the side with p-1 members plays the small part
            short, full = (small_order, large_order) if sx == p - 1 else (large_order, small_order)
            paths = [_place(seq, short[: p - 1], full) for seq in spanning_local(p - 1, p)]
            return single(paths, R.RESTRICT_2A_MINUS_1)
        if k == 2 * p - 2 and p >= 4:
            if {sx, sy} == {p, p - 2}:
                full, short = (small_order, large_order) if sx == p else (large_order, small_order)
                added, spare = short[p - 2], short[p - 1]
                first, second = spanning_local(p - 1, p)[:2]
                p1 = _place(first, short[: p - 1], full)
                p2 = _place(second, short[: p - 1], full)
                p2 = Path(tuple(spare if v == added else v for v in p2.vertices))
                return single([p1, p2], R.REPLACEMENT_2A_MINUS_2)
            if p >= 5:
                paths = [_place(seq, small_order, large_order) for seq in spanning_local(p - 1, p - 1)]
                return single(paths, R.SPANNING_BALANCED)
            # a = 4 with a (3, 3) split has no written construction
            return _oracle(a, b, s, budget)
        # a = 3, k = 4 and a+1 <= k <= 2a-3: any spanning path passes through S
        return single(spanning_pq(1), R.SINGLE_SPANNING)

    if q == p + 1:
        return single(spanning_pq(1), R.SINGLE_SPANNING)

    if sy >= p + 2:
        return single((), R.NO_PATH)
    # S-hat = small part plus p+1 large-side vertices covering S
    path = _place(spanning_local(p, p + 1)[0], small_order, large_order[: p + 1])
    return single([path], R.EXTEND_SHAT)


def witness_document(labeling: BipartiteLabeling | None, witness: Witness, g=None) -> dict[str, Any]:
    """Machine-readable form of a witness.

    ``labeling`` gives x_i / y_j labels; without it (file-loaded graphs) the
    raw ids are used as labels.  Validation runs against ``g`` or, by
    default, against K_{a,b}.
    """
    fam = witness.family
    if g is None:
        if labeling is None:
            raise InvalidArgument("need a labeling or a graph to validate against")
        g, _ = make_complete_bipartite(labeling.a, labeling.b)
    label = labeling.label if labeling is not None else str
    s_ids = sorted(fam.s)
    doc: dict[str, Any] = {
        "s": {"labels": [label(v) for v in s_ids], "ids": s_ids},
        "paths": [[label(v) for v in path.vertices] for path in fam.paths],
        "recipe": witness.recipe.value,
        "valid": validate_family(g, fam).ok,
    }
    if labeling is not None:
        doc["a"], doc["b"] = labeling.a, labeling.b
    else:
        doc["n"] = g.n
    return doc


def parse_witness_document(doc: dict[str, Any]) -> tuple[BipartiteLabeling | None, Witness]:
    """Inverse of :func:`witness_document`; labels are resolved back to ids."""
    try:
        if "a" in doc:
            labeling: BipartiteLabeling | None = BipartiteLabeling(int(doc["a"]), int(doc["b"]))
            resolve = labeling.parse
        else:
            labeling = None
            resolve = int
        s = frozenset(resolve(t) for t in doc["s"]["labels"])
        if s != frozenset(doc["s"]["ids"]):
            raise InvalidArgument("S labels and ids disagree")
        paths = tuple(Path(tuple(resolve(t) for t in seq)) for seq in doc["paths"])
        recipe = ConstructionRecipe(doc["recipe"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidArgument(f"malformed witness document: {exc}") from None
    return labeling, Witness(SPathFamily(s, paths), recipe)
