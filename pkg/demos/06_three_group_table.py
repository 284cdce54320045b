# # Three local groups: the tabulated expression against exact counts
#
# For three or more groups a tabulated closed form is available, but it disagrees
# with exact enumeration.  Its rank counts subtract nested totals without
# inclusion-exclusion, so sets that fully contain two groups are counted twice.

# %%
from mrcweights import (
    GF,
    MrcParams,
    construct_mrc,
    data_local_ell_weight_enumerators,
    enumerate_weight_distribution,
    greene_weight_enumerator,
    rank_size_counts_closed_form,
    table_discrepancies,
)

p, q = MrcParams(9, 3, 1), 4
exact = rank_size_counts_closed_form(p)
simple = rank_size_counts_closed_form(p, as_printed=True)
print("N(8, 7): exact", exact.N[8][7], " simple difference", simple.N[8][7])

# %%
table = data_local_ell_weight_enumerators(3, 3, 1, q, check=False).A
brute = enumerate_weight_distribution(construct_mrc(p, GF(q), seed=1).code).A
print("tabulated:", table)
print("brute:    ", brute)
print("exact Greene equals brute force:", greene_weight_enumerator(exact, q).A == brute)
for w, x, y in table_discrepancies(3, 3, 1, q):
    print(f"  w={w:2d}: tabulated {x:6d}  exact {y:6d}")
