# # Exact Bernoulli polynomials
#
# B_n(a) has rational coefficients, so everything in this script is exact:
# no rounding anywhere, and root counts come from Sturm sequences.

# %%
from fractions import Fraction

from hurwitz_zeros import (
    bernoulli_census,
    eval_exact,
    generate_bernoulli,
    isolate_real_roots,
    zeta_at_negative_integer,
)

# %% [markdown]
# The first few polynomials, printed in the usual textbook form.

# %%
for n in range(5):
    print(f"B_{n}(a) =", generate_bernoulli(n))

# %% [markdown]
# Values of the Hurwitz zeta function at negative integers are Bernoulli
# values in disguise: zeta(-m, a) = -B_{m+1}(a)/(m+1).

# %%
print("zeta(-3, 1/2) =", zeta_at_negative_integer(3, Fraction(1, 2)))
print("zeta(-1, 1/4) =", zeta_at_negative_integer(1, Fraction(1, 4)))

# %% [markdown]
# Reflection symmetry B_n(1 - a) = (-1)^n B_n(a), checked exactly.

# %%
b7 = generate_bernoulli(7)
x = Fraction(3, 11)
print(eval_exact(b7, 1 - x) == -eval_exact(b7, x))

# %% [markdown]
# Real roots. Rational roots come back exact; the rest come back as
# intervals with a certified sign change and width below 2^-40.

# %%
iso = isolate_real_roots(generate_bernoulli(9))
print("exact roots:", [str(r) for r in iso.exact_roots])
for lo, hi in iso.intervals:
    print(f"  root in ({float(lo):.12f}, {float(hi):.12f})")

# %% [markdown]
# For large degree the census only needs the positive half-line and the
# symmetry about 1/2. B_200 has 48 real roots.

# %%
c = bernoulli_census(200)
print(f"N(200) = {c.N}, largest root ~ {float(c.A):.10f}")
