"""ev-degree topological indices, graph constructions, and identity checks."""
from .fsum import FKind, f_sum
from .generators import FamilySpec, complete, cycle, generate, path, star
from .graph import Graph, GraphError, ParseError, from_edge_list, from_graph6, to_edge_list, to_graph6
from .indices import ClassicInvariants, EvIndexBundle, classic_invariants, ev_indices, mev
from .products import cartesian, composition, corona, join, tensor, union
from .transforms import edge_semitotal, line_graph, subdivision, total_graph, vertex_semitotal
from .verifier import CorpusSpec, IdentityResult, Report, run_suite

__version__ = "0.1.0"

__all__ = [
    "ClassicInvariants", "CorpusSpec", "EvIndexBundle", "FKind", "FamilySpec", "Graph",
    "GraphError", "IdentityResult", "ParseError", "Report", "cartesian", "classic_invariants",
    "complete", "composition", "corona", "cycle", "edge_semitotal", "ev_indices", "f_sum",
    "from_edge_list", "from_graph6", "generate", "join", "line_graph", "mev", "path",
    "run_suite", "star", "subdivision", "tensor", "to_edge_list", "to_graph6", "total_graph",
    "union", "vertex_semitotal",
]
