# %% [markdown]
# Near-Steinberg ranges at an evaluation weight and their match with Newton polygon segments.

# %%
from ghostseries import validate
from ghostseries.steinberg import all_ns_ranges, maximal_of, vertex_correspondence

params = validate(11, 2, 0)
ev = 14642  # k = 146424, congruent to 14 modulo 10 * 11^4

ranges = all_ns_ranges(params, ev, 300)
maximal = set(maximal_of(ranges))
for r in ranges[:8]:
    print(f"({r.lo}, {r.hi}) from k_bullet={r.k_bullet} L={r.L}", "maximal" if r in maximal else "")

# %% every maximal range inside the certified prefix is a segment, and conversely
rep = vertex_correspondence(params, ev, 40)
print("prefix end", rep.prefix_end, "window", rep.window)
for lo, hi, kb, slope in rep.matched:
    print(f"segment ({lo}, {hi}) slope {slope} <- k_bullet {kb}")
print("mismatches:", rep.mismatches or "none")
