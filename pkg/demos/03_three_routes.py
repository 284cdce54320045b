# # One weight distribution, three routes
#
# The weight distribution of an MRC is fixed by its matroid, so it can be computed
# without any field arithmetic.  Here a closed form, the Tutte/Greene route and brute
# force enumeration of all q^k codewords are compared.

# %%
from mrcweights import (
    GF,
    MrcParams,
    construct_mrc,
    data_local_two_weight_enumerators,
    enumerate_weight_distribution,
    greene_weight_enumerator,
    mrc_matroid,
    rank_size_distribution,
    tutte_from_distribution,
)

p, q = MrcParams(4, 2, 1), 16
N = rank_size_distribution(mrc_matroid(p))
print("Tutte polynomial:", tutte_from_distribution(N))

formula = data_local_two_weight_enumerators(p.r, p.h, q).A
greene = greene_weight_enumerator(N, q).A
brute = enumerate_weight_distribution(construct_mrc(p, GF(q), seed=1).code).A
print("formula:", formula)
print("greene: ", greene)
print("brute:  ", brute)
assert formula == greene == brute

# %%
# The local variant, where the global parities sit inside the local groups.
from mrcweights import LOCAL, local_two_weight_enumerators

p = MrcParams(3, 2, 1, LOCAL)
inst = construct_mrc(p, GF(8), seed=1)
print(local_two_weight_enumerators(3, 2, 1, 8).A)
print(enumerate_weight_distribution(inst.code).A)
