# # Finite field arithmetic
#
# Field elements are plain integers.  For GF(p^m) with m > 1 the integer holds the
# base-p digits of a polynomial, reduced by a fixed irreducible modulus.

# %%
import numpy as np

from mrcweights import GF

F = GF(16)
print(F)  # the modulus is part of the field's identity

# %%
# Addition in characteristic 2 is XOR; multiplication goes through log/exp tables.
a, b = 7, 11
print("a + b =", F.add(a, b), " a * b =", F.mul(a, b), " a^-1 =", F.inv(a))
assert F.mul(a, F.inv(a)) == 1

# %%
# The vectorised forms work on whole arrays at once.
x = np.arange(16)
print("x * 3 =", F.vmul(x, np.full(16, 3)))
print("x + x =", F.vadd(x, x))  # every element is its own negative

# %%
# Odd characteristic works the same way.
F9 = GF(9)
print(F9, " 2 * 4 =", F9.mul(2, 4), " 5^-1 =", F9.inv(5))
