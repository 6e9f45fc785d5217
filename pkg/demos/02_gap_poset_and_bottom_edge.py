"""
The gap poset of <7, 10> and its bottom edge
============================================

Beta-sets of (7, 10)-cores are the order ideals of the gaps of the
semigroup generated by 7 and 10. The gaps below 10 form a chain.
"""

from corehook.core_poset import (
    CoreParams,
    bottom_edge,
    g_of,
    gap_poset,
    h_of,
    ledge,
    ledge_length_formula,
    principal_ideal,
)

params = CoreParams.from_st(7, 10)
poset = gap_poset(params)
print(f"s={params.s} t={params.t} k={params.k} s_bar={params.s_bar}")
print(f"{len(poset)} gaps, largest M = {params.M}")
print("gaps:", poset.elements)

# The bottom edge, listed along its chain order
edge = bottom_edge(params)
print("bottom edge order:", edge.ordered)

# Ledges group the edge by residue mod k; sizes follow a closed form
for i in range(params.k):
    lg = ledge(i, params)
    print(f"  L_{i} = {sorted(lg.members)}  size {len(lg)}, closed form {ledge_length_formula(i, params)}")

# Down-set of 19: h counts its edge elements, g is the first of them in edge order
ideal = principal_ideal(19, params)
on_edge = edge.sort(ideal & set(edge.ordered))
print("<19> =", sorted(ideal, reverse=True))
print("<19> on the edge:", on_edge, " h(19) =", h_of(19, params), " g(19) =", g_of(19, params))
