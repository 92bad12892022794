# # Running the verification suites
#
# Each suite checks one family of printed statements and returns a report
# of named cases. Cases marked INFO are exploratory and never fail a run.

# %%
from hurwitz_zeros import run_suite

# %%
def show(rep, limit=6):
    for c in rep.cases[:limit]:
        tag = ("PASS" if c.passed else "FAIL") if c.asserted else "INFO"
        print(f"{tag}  {c.name}  [{c.detail}]")
    print(f"... {rep.suite}: passed={rep.passed} in {rep.seconds:.1f}s\n")

# %%
show(run_suite("inequalities", p_max=64, n_max=200))
show(run_suite("theorem1"))
show(run_suite("theorem3", ps=(100, 400)), limit=30)
show(run_suite("oracle", p_min=5, p_max=12))
