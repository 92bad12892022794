# # Evaluating zeta(sigma, a) with error bounds
#
# For sigma = -p the package evaluates the normalized function
# Z_p(a) = zeta(-p, a) / Q(-p), which stays of order one while zeta itself
# grows like Gamma(1 + p). Every result carries a rigorous error bound and
# a flag saying whether its sign is certain.

# %%
from fractions import Fraction

from mpmath import mp

from hurwitz_zeros import EvalConfig, Z, hurwitz_zeta

# %% [markdown]
# A few classical values.

# %%
print(hurwitz_zeta(0, Fraction(1, 4)).value)   # 1/2 - a
print(hurwitz_zeta(-2, 1).value)               # trivial zero of Riemann zeta
print(hurwitz_zeta(2, 1).value, mp.pi**2 / 6)  # Basel

# %% [markdown]
# For large p, Z_p(a) hugs sin(2 pi a - pi p / 2) over most of the range.

# %%
p = 200
for a in (1.3, 2.25, 5.55, 9.9):
    r = Z(p, a)
    with mp.workprec(200):
        lead = +mp.sin(2 * mp.pi * a - mp.pi * p / 2)
    print(f"a={a:5}  Z={mp.nstr(r.normalized, 12):>16}  sine={mp.nstr(lead, 12):>16}  err<={mp.nstr(r.err_bound, 3)}")

# %% [markdown]
# The raw value overflows a double long before the log form does; the
# result keeps both.

# %%
r = hurwitz_zeta(-300.5, 40.1)
print("value:", r.value, " sign:", r.sign, " log|zeta|:", mp.nstr(r.log_abs, 15))

# %% [markdown]
# Near a zero the evaluator raises its working precision until the sign is
# settled, up to a ceiling. Past the ceiling it says so instead of guessing.

# %%
cfg = EvalConfig(precision_bits=53, tail_epsilon=1e-12)
near = Z(12, Fraction(1, 2) + Fraction(1, 2**60), cfg)
print("near a zero:", near.sign, near.precision_bits, "bits, determinate:", near.determinate)
lost = hurwitz_zeta(-2000.5, Fraction(5, 8))
print("beyond the ceiling: determinate =", lost.determinate)
