"""k-path-connectivity of complete and complete bipartite graphs.

Closed forms (:mod:`pathconn.formula`), explicit witness families
(:mod:`pathconn.witness`) and an exact brute-force oracle
(:mod:`pathconn.oracle`) for arbitrary small graphs.
"""

from .errors import BudgetExhausted, GraphParseError, InvalidArgument, NoSpanningPath
from .formula import BipartiteCase, pi_bipartite, pi_complete, pi_spanning_bipartite, spanning_path_edge_bound
from .graph_core import (
    BipartiteLabeling,
    Graph,
    Path,
    PiValue,
    SPathFamily,
    ValidationReport,
    canonicalize,
    is_s_path,
    make_complete,
    make_complete_bipartite,
    parse_graph_text,
    validate_family,
)
from .oracle import (
    CompatibilityGraph,
    SearchBudget,
    bipartite_subset_classes,
    build_compatibility,
    enumerate_s_paths,
    max_internally_disjoint,
    pi_k_exact,
)
from .witness import ConstructionRecipe, Witness, build_spanning_family, build_witness

__version__ = "0.1.0"
