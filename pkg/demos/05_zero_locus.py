# # The zero locus in the (sigma, a) plane
#
# Each sigma = -p contributes the zeros of zeta(sigma, .). Plotted together
# they fall on the lines sigma + 4a + 2m = 0. This script writes the rows
# to a CSV that any plotting tool can read, then checks the line residual
# shrinking as -sigma grows.

# %%
import csv
import sys
from pathlib import Path

from mpmath import mp

from hurwitz_zeros.cli import main
from hurwitz_zeros.locus import locus, mean_main_residual

# %%
for outcome in locus(-400, -100, 100):
    print(f"sigma={outcome.sigma:6}: {len(outcome.rows)} zeros, "
          f"mean |residual| {mp.nstr(mean_main_residual(outcome.rows), 4)}")

# %% [markdown]
# The same sweep through the command line, with a manifest written next to
# the data file.

# %%
out = Path(sys.argv[1] if len(sys.argv) > 1 else "locus.csv")
main(["locus", "--sigma-min", "-120", "--sigma-max", "-40", "--sigma-step", "10", "--out", str(out)])
rows = list(csv.DictReader(out.open()))
print(len(rows), "rows in", out, "; manifest", out.name + ".manifest.json")
print(rows[0])
