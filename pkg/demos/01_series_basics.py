# # Series of a monomial filtration
#
# Two coordinate valuations on the plane, nu_1(x^a y^b) = a and nu_2(x^a y^b) = b.
# Neither is centered at the origin, so the quotients M(v+e_I)/M(v+1) are
# infinite dimensional, yet the homological coefficient is a plain count.

# %%
from valpoincare import AmbientSpace, Box, Instance, ValuationSet, ambient_series, finiteness_check
from valpoincare import coeff_description1, InfiniteDimensionError

plane = AmbientSpace.affine(2)
coords = Instance(plane, ValuationSet([(1, 0), (0, 1)]))
print("every fiber finite:", finiteness_check(plane, coords.valuations))

# %% [markdown]
# The series on a box around the origin: a 1 at every nonnegative point,
# i.e. the expansion of 1/((1-t1)(1-t2)).

# %%
s = ambient_series(coords, Box.cube(-2, 4, 2))
for b in range(4, -3, -1):
    print(f"{b:>3} |", " ".join(str(s[(a, b)]) for a in range(-2, 5)))

# %% [markdown]
# The alternating sum of quotient dimensions is not available here; the
# library refuses instead of returning a number.

# %%
try:
    coeff_description1(coords, (1, 1))
except InfiniteDimensionError as exc:
    print("refused:", exc)

# %% [markdown]
# With both valuations centered every definition applies.

# %%
centered = Instance(plane, ValuationSet([(1, 1), (1, 2)]))
print(ambient_series(centered, Box((0, 0), (4, 6))).support())
