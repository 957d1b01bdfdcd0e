# %% [markdown]
# # Groups under composition
# {f_c+ : c in GF(q)} composes like addition in GF(q). The star family, with
# c != 1, composes like c * d = c + d - cd, which mirrors multiplication via
# c -> 1 - c.

# %%
from kcomplete.gf import make_field
from kcomplete.groups import (
    literal_inverse_report,
    verify_additive_group,
    verify_multiplicative_group,
    verify_relationship,
    verify_star_lemma,
)

F = make_field(5, 2)
for rep in (verify_additive_group(F, 1), verify_multiplicative_group(F, 1)):
    print(rep.to_dict())

# %% [markdown]
# The binary operation c * d on GF(q) \ {1} is itself a group for every q.

# %%
for q in (3, 9, 25, 27):
    print(q, verify_star_lemma(q))

# %% [markdown]
# The inverse of f_c* is f_{c/(c-1)}*. Read literally as the map x -> cx/(c-1)
# it fails, except for c = -1.

# %%
print("inverse as a map:", literal_inverse_report(F, 1).to_dict())

# %% [markdown]
# Finally, the families are tied coefficientwise: x (f_c+(x) - x + 1) = f_c*(x).

# %%
print("relationship holds over GF(25):", verify_relationship(F, 1))
