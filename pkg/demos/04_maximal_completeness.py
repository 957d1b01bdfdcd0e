# %% [markdown]
# # Reaching the cap p - 1
# Scaling by b from a middle subfield (outside the prime field) can push the
# level to p - 1. Here: GF(81) with base GF(9), and b in GF(9) \ GF(3).

# %%
from collections import Counter

from kcomplete import FamilyParams, completeness_level
from kcomplete.families import build_scaled, rewritten_parameters

F = FamilyParams("plus", 3, 2, 2).field
middle = [b for b in F.subfield(2) if not F.in_subfield(b, 1)]
print("candidate scales b:", middle)

# %%
levels = Counter()
for b in middle:
    for c in F.subfield(2):
        for flavor in ("plus", "star"):
            if flavor == "star" and c == 1:
                continue
            m = build_scaled(FamilyParams(flavor, 3, 2, 2, c, b=b))
            levels[flavor, completeness_level(m.poly).level, m.maximality_guaranteed] += 1
for key in sorted(levels):
    print(key, levels[key])

# %% [markdown]
# Every plus member is maximal. Star members fail exactly when
# b f_c* + kx = (b+k) f_c'* has c' = bc/(b+k) = 1, that is c = 1 + k/b;
# maximality_guaranteed flags those cases ahead of time.

# %%
b = middle[0]
bad = [c for c in F.subfield(2) if not build_scaled(FamilyParams("star", 3, 2, 2, c, b=b)).maximality_guaranteed and c != 1]
print("b =", b, "degenerate c values:", bad)
print("rewrites for the first:", rewritten_parameters(FamilyParams("star", 3, 2, 2, bad[0], b=b)))
