# # Comparing definitions
#
# Each definition has its own preconditions; the cross-check evaluates the
# applicable ones on a box and lists any disagreement.

# %%
from valpoincare import AmbientSpace, Box, Instance, ValuationSet, cross_check

cone = AmbientSpace.semigroup([(1, 0), (1, 1), (1, 2)])
inst = Instance(cone, ValuationSet([(0, 1), (1, 0)]))
report = cross_check(inst, Box.cube(0, 3, 2), rank_path=True)
for name, ok in report.applicable.items():
    print(f"{name:18} {'yes' if ok else 'no ':3} {report.reasons[name]}")
print("agreement:", report.ok)

# %% [markdown]
# A perturbed coefficient is caught.

# %%
bad = cross_check(inst, Box.cube(0, 3, 2), fault=("homological", (1, 1), 1))
print(bad.disagreements)
