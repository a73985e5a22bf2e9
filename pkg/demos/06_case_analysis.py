"""Routing each infinite catalog group to a witness.

A group with an element of infinite order goes to the infinite-cyclic case.
Otherwise the driver searches a finite subgroup H and an element f outside
it, following the involution, noncube and cube branches.
"""

from sfactors.catalog import enumerable_catalog
from sfactors.constructions import case_analysis

for text, G in enumerable_catalog():
    w = case_analysis(G)
    print(f"{text:10s} route {w.route:16s} case {w.case.value:15s} iota={w.iota} omega={w.omega} params={w.params}")
