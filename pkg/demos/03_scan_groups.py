"""Which small groups are stable?

An exhaustive scan runs over subsets containing e, smallest first, and stops
at the first unstable one. The witness pair of s-factors is printed so the
verdict can be checked by hand.
"""

from sfactors.catalog import finite_catalog
from sfactors.stability import Verdict, scan_group_stability

for text, G in finite_catalog(12):
    rep = scan_group_stability(G)
    line = f"{text:28s} order {G.order:2d}  {rep.verdict.value:8s} after {rep.subsets_scanned} subsets"
    if rep.verdict == Verdict.UNSTABLE:
        idx = rep.indices
        line += f"  A={[G.name(a) for a in rep.witness_A]} sizes {idx.lower} and {idx.upper}"
    print(line)
