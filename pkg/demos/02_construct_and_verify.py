# # Building and checking a maximally recoverable code
#
# A data-local code with k=4 data symbols, locality r=2 and h=1 global parity has two
# local groups.  Every erasure pattern that leaves r symbols per group plus the global
# parity must be decodable.

# %%
from mrcweights import GF, MrcParams, construct_mrc, min_distance, singleton_locality_bound, verify_data_local_mrc

p = MrcParams(4, 2, 1)
inst = construct_mrc(p, GF(8), seed=1)
print(f"found after {inst.attempts} attempt(s)")
for row in inst.code.G:
    print(" ".join(f"{x:2d}" for x in row))

# %%
# Verification checks each recovery set for full rank and the remaining code for MDS.
print("maximally recoverable:", verify_data_local_mrc(inst.code, p))
print("d_min =", min_distance(inst.code), " bound =", singleton_locality_bound(p.n, p.k, p.r))

# %%
# GF(2) is too small: random search gives up with a clear error.
from mrcweights.mrc import ConstructionFailed

try:
    construct_mrc(p, GF(2), seed=1, max_attempts=20)
except ConstructionFailed as exc:
    print(exc)
