"""Lower and upper s-indices of a few subsets.

A subset is stable when every maximal "direct" partner U has the same size.
Here we compare the definition-level checker with the graph answer.
"""

from sfactors.catalog import build_group
from sfactors.stability import check_sfactor, s_indices, sfactor_family

for text, names in [("cyclic:4", ["e", "g"]), ("cyclic:6", ["e", "g"]), ("sym:3", ["e", "(12)"])]:
    G = build_group(text)
    A = [G.parse_element(x) for x in names]
    r = s_indices(G, A)
    print(f"{text:9s} A={names}: lower={r.lower} upper={r.upper} stable={r.stable}")
    print("   smallest s-factor:", [G.name(u) for u in r.witness_min])
    print("   largest  s-factor:", [G.name(u) for u in r.witness_max])
    assert check_sfactor(G, A, r.witness_min).ok and check_sfactor(G, A, r.witness_max).ok
    sizes = sorted({len(U) for U in sfactor_family(G, A)})
    print("   sizes found by direct search:", sizes)
