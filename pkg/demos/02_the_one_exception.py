"""
The five-cycle is the only hard case
====================================

Every connected outerplanar graph can be colored from degree+2 lists,
except the 5-cycle when all five lists are identical.  Both engines agree:
the constructive solver names the obstruction, the exhaustive oracle
proves no coloring exists, and changing a single color in one list
dissolves the difficulty.
"""

from pcfcolor import ListAssignment, cycle_graph, solve, verify
from pcfcolor.oracle import solve_exact

g = cycle_graph(5)
uniform = ListAssignment([[1, 2, 3, 4]] * 5)

res = solve(g, uniform)
print("constructive:", res.obstruction.reason, "-", res.obstruction.detail)

exact = solve_exact(g, uniform)
print(f"oracle: {exact.status} after {exact.nodes} nodes")

# tweak one list and the graph colors immediately
tweaked = uniform.with_list(4, [1, 2, 3, 5])
res = solve(g, tweaked)
print("\nwith one list changed:", res.coloring)
print("verified:", verify(g, res.coloring, tweaked).ok)

# five identical colors are also fine: more room than degree+2 needs
bigger = ListAssignment([[1, 2, 3, 4, 5]] * 5)
print("five identical 5-lists:", solve(g, bigger).coloring)
