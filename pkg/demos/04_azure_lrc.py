# # The (k=6, r=3, h=2) layout over GF(16)
#
# Six data symbols, two local groups of three, two global parities: n = 10.
# The closed form is instant; brute force over 16^6 codewords takes a few seconds.

# %%
import time

from mrcweights import (
    GF,
    MrcParams,
    construct_mrc,
    data_local_two_dual_weight_enumerators,
    data_local_two_weight_enumerators,
    dual,
    enumerate_weight_distribution,
)

A = data_local_two_weight_enumerators(3, 2, 16)
print("A_w:", A.A, " total:", A.total())

# %%
start = time.perf_counter()
inst = construct_mrc(MrcParams(6, 3, 2), GF(16), seed=1)
print(f"constructed in {inst.attempts} attempts, {time.perf_counter() - start:.1f}s")
start = time.perf_counter()
print("brute force agrees:", enumerate_weight_distribution(inst.code).A == A.A, f"({time.perf_counter() - start:.1f}s)")

# %%
# The dual has minimum distance r + 1 = 4.
D = data_local_two_dual_weight_enumerators(3, 2, 16)
print("dual A_w:", D.A)
print("dual brute force agrees:", enumerate_weight_distribution(dual(inst.code)).A == D.A)
