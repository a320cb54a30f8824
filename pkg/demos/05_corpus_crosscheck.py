"""
Two engines, one verdict
========================

Enumerate every connected outerplanar graph on up to six vertices, throw
random degree+2 lists at each, and confirm that the constructive solver and
the exhaustive oracle never disagree.
"""

import random

from pcfcolor import degree_plus_k_lists, solve, verify
from pcfcolor.families import enumerate_connected_outerplanar, random_outerplanar
from pcfcolor.oracle import SAT, solve_exact

rng = random.Random(2026)
total = 0
for n in range(2, 7):
    graphs = enumerate_connected_outerplanar(n)
    print(f"n={n}: {len(graphs)} graphs")
    for g in graphs:
        for _ in range(10):
            lists = degree_plus_k_lists(g, 2, range(1, 2 * g.max_degree() + 5), rng)
            res = solve(g, lists)
            assert res.ok and verify(g, res.coloring, lists).ok
            assert solve_exact(g, lists).status == SAT
            total += 1
print(f"{total} instances, zero disagreements")

# the sampler covers bigger graphs than exhaustive enumeration can
g = random_outerplanar(40, seed=1)
lists = degree_plus_k_lists(g, 2, range(1, 2 * g.max_degree() + 5), rng)
res = solve(g, lists)
print(f"\nrandom 40-vertex graph: solved={res.ok}, "
      f"verified={verify(g, res.coloring, lists).ok}")
