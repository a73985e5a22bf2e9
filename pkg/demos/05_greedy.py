"""Growing a subset A of Z with a prescribed complement F.

Each step adds an element so that A^-1 A avoids F while covering the next
enumerated group element. We watch both invariants hold step by step.
"""

from sfactors.catalog import build_group
from sfactors.constructions import greedy_construct_A

Z = build_group("z")
F = [1, -1, 2, -2, 3, -3, 7, -7]
state = greedy_construct_A(Z, F, 12, check_each_step=True)
print("F =", F)
print("A after 12 steps:", state.A)
print("targets covered: ", state.covered)
print("invariants held at every step:", all(state.invariant_log))

diffs = sorted({b - a for a in state.A for b in state.A if abs(b - a) <= 12})
print("small quotients in A^-1 A:", diffs)
