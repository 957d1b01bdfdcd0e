# %% [markdown]
# # The two polynomial families
# With q = p^s, m = q + q^2 + ... + q^(n-1):
#
#     f_c+(x) = x + c * sum_{j=1..m} x^(j(q-1))
#     f_c*(x) = x + c * sum_{j=1..m} x^(j(q-1)+1)
#
# over GF(q^n), with c taken from the base field GF(q).

# %%
from kcomplete import FamilyParams, build
from kcomplete.families import closed_table
from kcomplete.poly import value_table
import numpy as np

params = FamilyParams("plus", 5, 1, 2, 2)
f = build(params)
print(params.descriptor(), "->", f)

g = build(FamilyParams("star", 7, 1, 2, 6))
print("star, p=7, c=6 ->", g)

# %% [markdown]
# The geometric sum collapses: it is 0 on nonzero base elements and -1 off
# the base field. So f_c+ fixes GF(q) and shifts everything else by -c, and
# f_c* fixes GF(q) and scales everything else by 1 - c.

# %%
for flavor in ("plus", "star"):
    p = FamilyParams(flavor, 5, 1, 2, 3)
    same = np.array_equal(value_table(build(p)), closed_table(p))
    print(flavor, "polynomial table == closed form:", same)

# %% [markdown]
# A concrete look at f_2+ over GF(25): base elements 0..4 stay, t moves to t - 2.

# %%
table = value_table(f)
F = params.field
print("first five images:", table[:5].tolist())
print("t =", 5, "->", int(table[5]), "which is", int(F.sub(5, 2)))
