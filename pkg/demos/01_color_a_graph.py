"""
Coloring an outerplanar graph from lists
========================================

Build a graph, hand every vertex a list two colors longer than its degree,
and ask for a coloring where adjacent vertices differ and every vertex sees
some color exactly once in its neighborhood.
"""

import random

from pcfcolor import (
    Graph,
    degree_plus_k_lists,
    solve,
    verify,
)

# a 6-cycle with one chord and a pendant vertex
g = Graph(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 2), (3, 6)])

# random degree+2 lists over a small palette
lists = degree_plus_k_lists(g, 2, range(1, 9), random.Random(7))
for v in range(g.n):
    print(f"vertex {v}: list {sorted(lists[v])}")

result = solve(g, lists)
print("\ncoloring:", result.coloring)

# the verifier re-checks properness and the unique-neighbor-color rule
verdict = verify(g, result.coloring, lists)
print("verified:", verdict.ok)

# the trace records which structural case handled each peeled piece
print("\nhow the solver took the graph apart:")
for step in result.trace:
    print(f"  {step.case:>12}  removed {step.removed}  set {step.colors}")
