"""The flat-to-curved lookup table and where it stops being invertible.

Run: python demos/03_lookup_table.py
"""

import numpy as np

from leafbend import NonMonotoneError, PRESETS, build_map, build_profile, longest_monotone_range, monotone_runs

profile = build_profile(PRESETS["fig5"], 2048)

# %% The stretched fig5 leaf curls back over itself, so its x-projection folds
try:
    build_map(profile)
except NonMonotoneError as exc:
    print("fold:", exc)

for i, j in monotone_runs(profile):
    print(f"monotone on s in [{profile.s[i]:.4f}, {profile.s[j]:.4f}] ({j - i + 1} knots)")

# %% Tabulating only the longest monotone run gives an invertible map
fmap = build_map(profile, longest_monotone_range(profile))
s = np.linspace(*fmap.s_range, 5)
u = fmap.forward(s)
print("s        ", np.round(s, 4))
print("u = F(s) ", np.round(u, 4))
print("F^-1(u)  ", np.round(fmap.inverse(u), 4))

# %% How unevenly the map spreads columns: local slope relative to the mean
slope = np.abs(np.gradient(fmap.u, fmap.s)) / (np.ptp(fmap.u) / np.ptp(fmap.s))
for q in (0.1, 0.5, 0.9, 0.99):
    print(f"at {q:.0%} of the run the map magnifies by {slope[int(q * (len(slope) - 1))]:.3f}")
