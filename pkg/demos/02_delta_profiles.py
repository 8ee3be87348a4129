# %% [markdown]
# Tilted valuations, their hull, and how much room the -4 bound leaves.

# %%
from fractions import Fraction

import numpy as np

from ghostseries import validate
from ghostseries.ghost import delta_profile
from ghostseries.verify import figure_envelope

params = validate(11, 2, 0)
prof = delta_profile(params, 12)
ells = sorted(prof.raw)
print("ell   raw   hull")
for ell in ells[:6]:
    print(f"{ell:4d} {str(prof.raw[ell]):>6} {str(prof.hull[ell]):>6}")
print("hull vertices:", prof.hull_vertices)

# %% margin (k-2)/2 - (gap at D - 4) over k_bullet; never negative
margins = []
for kb in range(1, 200):
    p = delta_profile(params, kb)
    margins.append(float(Fraction(p.k - 2, 2) - p.gap(p.half_new) + 4))
margins = np.array(margins)
print("smallest margin %.1f at k_bullet %d" % (margins.min(), margins.argmin() + 1))

# %% the envelope behind the -4.417 / -3.961 constants (plot-ready columns)
xs = np.arange(1, 40)
ys = np.array([figure_envelope(int(x)) for x in xs])
print(np.column_stack([xs[:6], ys[:6].round(4)]))
