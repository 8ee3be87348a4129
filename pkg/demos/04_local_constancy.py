# %% [markdown]
# Slope multisets agree on congruence classes modulo (p - 1) p^m below m - 4.

# %%
from ghostseries import validate
from ghostseries.verify import WeightFamily, check_local_constancy, check_main_proposition, sharpness_search

params = validate(11, 2, 0)
for m, k1 in ((4, 14), (5, 14), (6, 24)):
    res = check_local_constancy(params, m, k1, 2)
    print(f"m={m} k1={k1}: {res.status} ({res.note})")

# %% the slope at d_ur(k0) along the family of 14
fam = WeightFamily(params, 14, 4)
for tk in fam.members(3):
    print(tk, check_main_proposition(params, tk, fam.k0_min, 4).note)

# %% one step past the bound is where differences may start; diagnostic only
diffs = sharpness_search(params, 4, 14, 3)
print("pairs differing at bound m-3:", [(d.k1, d.k2) for d in diffs] or "none found")
