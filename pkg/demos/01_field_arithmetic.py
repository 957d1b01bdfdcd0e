# %% [markdown]
# # Finite field arithmetic
# Elements of GF(p^m) are integers 0..p^m-1: the base-p digits are the
# polynomial-basis coefficients, constant term first.

# %%
from kcomplete import make_field

F = make_field(3, 2)
print(F, "modulus coefficients:", F.irr)
print("elements:", list(F.elements()))

# %% [markdown]
# Index 3 is the generator t (digits [0, 1]). Since t^2 + 1 = 0 here, t^2 = -1 = 2.

# %%
t = F(3)
print("t =", t, " t^2 =", t * t, " t^8 =", t ** 8)
print("1/t =", t ** -1)

# %% [markdown]
# Subfields and Frobenius. GF(81) contains GF(9); its nine elements are
# exactly the fixed points of a -> a^9.

# %%
G = make_field(3, 4)
sub = G.subfield(2)
print("GF(9) inside GF(81):", sub)
print("fixed by a^9:", [a for a in G.elements() if G.frobenius(a, 2) == a] == sub)

# %% [markdown]
# Vectorized arithmetic works on whole numpy arrays of indices.

# %%
import numpy as np

a = np.arange(G.order)
sq = G.vmul(a, a)
print("number of distinct squares:", len(np.unique(sq)))  # (81 - 1)/2 + 1
