"""The four witness configurations.

Each builds a symmetric set F whose graph Delta(F) has an isolated vertex
(or, for the cube case, a maximal edge) next to a larger clique. That gap
between iota and omega is what makes a subset unstable.
"""

from sfactors.catalog import build_group
from sfactors.constructions import witness_cube, witness_infinite_cyclic, witness_involution, witness_noncube
from sfactors.groups import cyclic_subgroup, generated_subgroup


def show(tag, G, w):
    print(f"{tag}: |F|={len(w.F)} iota={w.iota} omega={w.omega}")
    print("   F =", ", ".join(G.format(x) for x in w.F.elements))


S3 = build_group("sym:3")
show("involution in sym:3", S3, witness_involution(S3, cyclic_subgroup(S3, S3.parse_element("(123)")), S3.parse_element("(12)")))

P3 = build_group("pruefer:3")
show("noncube in Z(3^inf)", P3, witness_noncube(P3, cyclic_subgroup(P3, P3.parse_element("1/3")), P3.parse_element("1/9")))

A4 = build_group("alt:4")
klein = generated_subgroup(A4, [A4.parse_element("(12)(34)"), A4.parse_element("(13)(24)")])
show("cube in alt:4", A4, witness_cube(A4, klein, A4.parse_element("(123)")))

Z = build_group("z")
show("infinite cyclic in Z", Z, witness_infinite_cyclic(Z, 1, 3, 7))
