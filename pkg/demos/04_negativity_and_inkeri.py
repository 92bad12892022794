# # Sign beyond the last zero, and root counts of B_m
#
# Past p/(2 pi e) + log(p)/(4 pi e) + 1, zeta(-p, a) stays negative. For
# integer p that makes the real-root count of Bernoulli polynomials grow
# like 2m/(pi e).

# %%
import math

from hurwitz_zeros import inkeri_report, negativity_certificate
from hurwitz_zeros import bounds

# %%
for p in (50, 100, 400):
    r = negativity_certificate(p, 64)
    print(f"p={p}: {len(r.samples)} samples from a={r.boundary:.3f}, all negative: {r.passed}")

# %% [markdown]
# Exact root counts against the two-sided bounds, and the ratio
# N(m) pi e / (2m), which tends to 1.

# %%
for row in inkeri_report([50, 100, 150, 200]):
    lo, hi = bounds.bernoulli_N_bounds(row.m)
    print(f"m={row.m:3}  N={row.N:3}  bounds ({lo:.2f}, {hi:.2f})  ratio {row.N_ratio:.4f}  A ratio {row.A_ratio:.4f}")

print(f"N(200)/200 = {row.N / row.m:.4f} against the limit 2/(pi e) = {2 / (math.pi * math.e):.4f}")
