# # Newton polyhedra and their facet valuations

# %%
from valpoincare import MonomialPoly, hypothesis_check
from valpoincare.newton import newton_report

cusp = MonomialPoly.from_terms([(1, (2, 0)), (1, (0, 3))])
report = newton_report(cusp)
for f in report["facets"]:
    print(f)
print("valuations:", report["valuations"], "q:", report["q"])
print("round trip equal:", report["roundtrip_equal"])

# %% [markdown]
# A variable that both divides h and appears alone in it breaks the hypothesis.

# %%
print(hypothesis_check(MonomialPoly.from_terms([(1, (1, 0)), (1, (1, 1))])))
print(hypothesis_check(MonomialPoly.from_terms([(1, (2, 1)), (1, (1, 2))])))
