# # Census of the real zeros of zeta(-p, a)
#
# For fixed p the zeros in a > 0 sit next to the half-integer lattice
# p/4 + l/2 up to (p - 1)/(2 pi e), then a few more in a short boundary zone,
# and none after p/(2 pi e) + log(p)/(4 pi e) + 1.

# %%
from hurwitz_zeros import bernoulli_census, census
from hurwitz_zeros import bounds

# %%
p = 200
c = census(p)
print(f"p = {p}: N = {c.N}, largest zero A = {c.A:.12f}")
print(f"main edge {bounds.main_edge(p):.4f}, negativity edge {bounds.negativity_edge(p):.4f}")
for name, ok in c.bound_checks.items():
    print(f"  {'pass' if ok else 'FAIL'}  {name}")

# %% [markdown]
# Lattice proximity: main-interval zeros are within float resolution of
# p/4 + l/2; boundary-zone zeros drift away.

# %%
for z in c.zeros[-6:]:
    print(f"{z.root:18.12f}  lattice {str(z.lattice_point):>6}  dist {z.lattice_distance:.2e}  {z.region}")

# %% [markdown]
# At integer p the count can be checked against the exact Sturm count of
# the positive roots of B_{p+1}.

# %%
for p in (20, 57, 100):
    print(p, census(p).N, bernoulli_census(p + 1).positive_count)

# %% [markdown]
# N(p) is not monotone in p: a boundary-zone pair can disappear as p grows.

# %%
print([(p, census(p).N) for p in range(55, 60)])
