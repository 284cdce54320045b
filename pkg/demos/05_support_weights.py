# # Generalized Hamming weights and support weight distributions
#
# d_s is the smallest support of an s-dimensional subcode; A^(s)_w counts the
# s-dimensional subcodes with support size w.

# %%
from mrcweights import (
    GF,
    MrcParams,
    construct_mrc,
    data_local_two_ghw,
    data_local_two_hsw,
    dual,
    enumerate_support_weight_distribution,
    gaussian_binomial,
    ghw_brute,
)

print("GHW for r=3, h=2:", data_local_two_ghw(3, 2))

p, q = MrcParams(4, 2, 1), 8
inst = construct_mrc(p, GF(q), seed=1)
print("GHW (brute):", ghw_brute(inst.code), " dual:", ghw_brute(dual(inst.code)))

# %%
for s in range(1, p.k + 1):
    A = data_local_two_hsw(p.r, p.h, q, s).A
    assert A == enumerate_support_weight_distribution(inst.code, s).A
    print(f"s={s}: {A}  total={sum(A)} = [{p.k} choose {s}]_{q} = {gaussian_binomial(p.k, s, q)}")
