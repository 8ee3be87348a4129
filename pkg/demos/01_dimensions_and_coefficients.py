# %% [markdown]
# Dimensions, multiplicities and ghost coefficients for (p, a, s) = (11, 2, 0).

# %%
import numpy as np

from ghostseries import validate
from ghostseries.dims import d_iw_array, d_ur_array, multiplicity
from ghostseries.ghost import coefficient_valuations
from ghostseries.newton import ghost_np

params = validate(11, 2, 0)
print("derived:", params.derived)

# %%
ks = np.arange(0, 25)
ur, iw = d_ur_array(params, ks), d_iw_array(params, ks)
table = np.column_stack([ks, ur, iw, iw - 2 * ur])
print("k_bullet  d_ur  d_iw  d_new")
print(table[:12])

# %% multiplicities m_n(k) form a tent between d_ur and d_iw - d_ur
grid = np.array([[multiplicity(params, n, kb) for n in range(12)] for kb in range(6)])
print(grid)

# %% coefficient valuations at w_4 and the Newton polygon they span
vals = coefficient_valuations(params, 0, 8)
print("v(g_n(w_4)):", vals)
poly = ghost_np(params, 0, 8)
print("slopes:", [(str(s), n) for s, n in poly.segments])

# %% at w_146424 the weight 14 sits close by, and g_2 jumps above the chord
print("v(g_n(w_146424)):", coefficient_valuations(params, 14642, 5))
print("vertices:", ghost_np(params, 14642, 5).vertices)
