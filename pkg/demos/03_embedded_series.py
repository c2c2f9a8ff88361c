# # The series of a hypersurface
#
# For h = x + y the series of the image filtration is (1 - t^q) times the
# ambient series, q = nu(h).  The truncated oracle computes the same
# coefficients directly from the embedded complexes.

# %%
from valpoincare import AmbientSpace, Box, Instance, MonomialPoly, ValuationSet, embedded_series, q_vector

h = MonomialPoly.from_terms([(1, (1, 0)), (1, (0, 1))])
inst = Instance(AmbientSpace.affine(2), ValuationSet([(1, 1), (0, 1)]), h)
print("q =", q_vector(h, inst.valuations))

box = Box.cube(0, 4, 2)
product = embedded_series(inst, box, "product")
oracle = embedded_series(inst, box, "oracle", schedule=(6, 8, 10))
print("product support:", product.support())
print("modes agree:", product.coeffs == oracle.coeffs)

# %% [markdown]
# With the coordinate valuations q = 0 and the series vanishes.

# %%
flat = Instance(AmbientSpace.affine(2), ValuationSet([(1, 0), (0, 1)]), h)
print(embedded_series(flat, box, "product").coeffs, embedded_series(flat, box, "oracle").coeffs)
