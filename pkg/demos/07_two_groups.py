"""Two facts about 2-groups used by the case analysis.

Cyclic and generalized quaternion groups of order 32 have a single
involution and a large set of squares. A subgroup H containing all squares
is normal with an elementary abelian quotient.
"""

from sfactors.catalog import build_group
from sfactors.constructions import verify_exponent2_quotient, verify_order32_lemma

rep = verify_order32_lemma()
for g in rep["groups"]:
    print(f"{g['group']}: involutions={g['involutions']} |squares|={g['squares']}")
print("holds:", rep["holds"])

for text in ("quaternion:8", "dihedral:4"):
    G = build_group(text)
    H = [G.parse_element("e"), G.parse_element("a^2")]
    print(f"{text} with H = <a^2>:", verify_exponent2_quotient(G, H).value)
