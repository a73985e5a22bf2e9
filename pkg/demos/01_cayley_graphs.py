"""Cayley graphs and the two graphs attached to a subset A.

For a subset A of a finite group we build Cay(G, dA), where dA collects the
quotients a^-1 b of distinct elements. Its maximal independent sets are the
s-factors of A. The complement set F = G - A^-1 A carries a second graph,
Delta(F), whose clique numbers sit exactly one below the independence numbers.
"""

from sfactors.catalog import build_group
from sfactors.cayley import boundary_set, cayley_graph, complement_set, delta_graph
from sfactors.cliques import extremal_clique_numbers, extremal_independent_numbers

G = build_group("dihedral:4")
A = [G.parse_element(x) for x in ("e", "a", "b")]
print(f"G = {G.label} of order {G.order}; A = {[G.name(a) for a in A]}")

dA = boundary_set(G, A)
print("dA =", [G.name(x) for x in dA.elements])

gamma = cayley_graph(G, dA)
print(f"Cay(G, dA): {gamma.n} vertices, {len(list(gamma.edges()))} edges")
ind = extremal_independent_numbers(gamma)
print(f"  alpha = {ind.max_size}, i = {ind.min_maximal_size}")

F = complement_set(G, A)
delta = delta_graph(G, F)
cl = extremal_clique_numbers(delta)
print("F =", [G.name(x) for x in F.elements])
print(f"Delta(F): omega = {cl.max_size}, iota = {cl.min_maximal_size}")
print("omega == alpha - 1:", cl.max_size == ind.max_size - 1)
print("iota  == i - 1:    ", cl.min_maximal_size == ind.min_maximal_size - 1)

print("\nDOT export of Delta(F):")
print(delta.to_dot(G.name))
