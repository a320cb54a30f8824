"""Proper conflict-free list coloring of outerplanar graphs.

A coloring is proper conflict-free when adjacent vertices get distinct
colors and every vertex with at least one neighbor sees some color exactly
once in its neighborhood.  This package provides:

- a constructive solver that colors any connected outerplanar graph other
  than the 5-cycle from lists of size degree + 2 (`solver.solve`),
- an exhaustive oracle for cross-checking on small graphs (`oracle`),
- generators for the known tight families: the 5-cycle with identical
  4-lists, theta graphs needing degree + 2 everywhere, and gadgets showing
  degree + 1 fails even at a single vertex (`families`),
- a `pcfcolor` command line front end.
"""

from .graphs import (
    Graph,
    cycle_graph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    write_edge_list,
    write_graph6,
)
from .kernel import (
    Coloring,
    ListAssignment,
    Verdict,
    Violation,
    degree_plus_k_lists,
    unique_colors,
    verify,
)
from .oracle import OracleResult, pcf_chromatic_number, refute_choosability, solve_exact
from .solver import (
    Obstruction,
    SolveResult,
    SolverInternalError,
    TraceStep,
    color_constrained_path,
    color_cycle,
    extend_ear,
    replay_trace,
    solve,
    trace_to_json_lines,
    trim_lists,
)
from .structure import (
    BlockDecomposition,
    Ear,
    EarChain,
    OuterEmbedding,
    block_decomposition,
    classify_end_block,
    find_good_ear_or_chain,
    is_outerplanar,
    outer_embedding,
)

__all__ = [
    "Graph",
    "cycle_graph",
    "path_graph",
    "parse_graph6",
    "write_graph6",
    "parse_edge_list",
    "write_edge_list",
    "ListAssignment",
    "Coloring",
    "Verdict",
    "Violation",
    "unique_colors",
    "verify",
    "degree_plus_k_lists",
    "OracleResult",
    "solve_exact",
    "pcf_chromatic_number",
    "refute_choosability",
    "solve",
    "SolveResult",
    "Obstruction",
    "SolverInternalError",
    "TraceStep",
    "color_cycle",
    "color_constrained_path",
    "extend_ear",
    "replay_trace",
    "trace_to_json_lines",
    "trim_lists",
    "BlockDecomposition",
    "block_decomposition",
    "OuterEmbedding",
    "outer_embedding",
    "is_outerplanar",
    "Ear",
    "EarChain",
    "find_good_ear_or_chain",
    "classify_end_block",
]

__version__ = "0.1.0"
