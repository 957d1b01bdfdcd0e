# %% [markdown]
# # Completeness levels
# f is k-complete when f(x) + i*x permutes the field for every i = 0..k.
# The level is the largest such k (capped at p - 1), or -1 if f itself
# is not a permutation.

# %%
from kcomplete import FamilyParams, build, completeness_level

for desc in [("plus", 5, 2), ("plus", 7, 4)]:
    flavor, p, c = desc
    rep = completeness_level(build(FamilyParams(flavor, p, 1, 2, c)))
    print(f"f_{c}+ over GF({p}^2): level {rep.level}, first failure {rep.level_failure_witness}")

# %% [markdown]
# The plus family always lands at p - 2: adding (p-1)x turns t -> t - c into
# t -> -c, which collapses everything off the base field.
#
# The star family behaves differently when c is in the prime field. Off the
# base field, f_c* + kx acts as a -> (1 - c + k) a, and that multiplier is
# zero at k = c - 1. So the level is c - 2, not p - 2.

# %%
for p, c in [(5, 4), (7, 6), (7, 3)]:
    rep = completeness_level(build(FamilyParams("star", p, 1, 2, c)))
    print(f"f_{c}* over GF({p}^2): level {rep.level}  (c - 2 = {c - 2}, p - 2 = {p - 2})")
    k, (a, b) = rep.level_failure_witness
    print(f"    f + {k}x collides at indices {a} and {b}")

# %% [markdown]
# For c outside the prime field the multiplier 1 - c + k never vanishes, and
# the level is p - 2 again.

# %%
F = FamilyParams("plus", 3, 2, 2).field
c = F.subfield(2)[-1]
print("c =", c, "level:", completeness_level(build(FamilyParams("star", 3, 2, 2, c))).level)
