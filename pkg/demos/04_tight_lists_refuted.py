"""
Degree+1 is not enough
======================

Two families show that lists one color longer than the degree can fail:
theta graphs with carefully repeating lists, and a gadget that pins a
chosen host vertex.  An exhaustive search refuter can also hunt for such
assignments on its own.
"""

from pcfcolor import Graph, path_graph
from pcfcolor.families import degree_plus_one_gadget, theta_hard_lists
from pcfcolor.oracle import refute_choosability, solve_exact

# theta graphs: two terminals joined by three paths
for l1, l2 in ((4, 4), (4, 7), (7, 7)):
    inst = theta_hard_lists(l1, l2)
    res = solve_exact(inst.graph, inst.lists)
    print(f"{inst.name}: n={inst.graph.n}, {res.status} ({res.nodes} nodes)")

# the gadget: enough four-cycles glued to one vertex of a host
for host, v0 in ((Graph(2, [(0, 1)]), 0), (path_graph(3), 1)):
    inst = degree_plus_one_gadget(host, v0)
    res = solve_exact(inst.graph, inst.lists)
    print(f"{inst.name}: n={inst.graph.n}, {res.status} ({res.nodes} nodes)")

# ask the refuter to find a bad degree+1 assignment for the 4-cycle
from pcfcolor import cycle_graph

found = refute_choosability(cycle_graph(4), 1)
print("\n4-cycle, degree+1:", found.status)
print("witness lists:", [sorted(l) for l in found.witness])

# degree+2 on an edge: nothing to find, the search exhausts
clean = refute_choosability(path_graph(2), 2, universe_bound=4)
print(f"edge, degree+2: {clean.status} ({clean.assignments_checked} assignments)")
