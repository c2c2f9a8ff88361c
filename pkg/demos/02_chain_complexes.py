# # Chain complexes and their homology
#
# For each v the subspaces V_I assemble into a complex whose Euler
# characteristic is the coefficient.  For monomial valuations it is exact
# everywhere except in degree 0.

# %%
from valpoincare import AmbientSpace, ValuationSet, build_ambient_complex, build_tilde_complex, homology_profile
from valpoincare.complexes import assemble, subsets_by_size

plane = AmbientSpace.affine(2)
nus = ValuationSet([(1, 1), (1, 2)])
c = build_ambient_complex(plane, nus, (3, 5))
print("dims:", c.dims)
for i, d in enumerate(c.boundaries, start=1):
    print(f"d_{i} =", d.to_dense())
print("profile:", homology_profile(c))

# %% [markdown]
# The smaller complex over subsets of {1..r-1} has the same Euler characteristic.

# %%
print("tilde profile:", homology_profile(build_tilde_complex(plane, nus, (3, 5))))

# %% [markdown]
# The sign rule for four valuations and one basis vector per subset,
# third boundary map (columns x, y, z, u):

# %%
c4 = assemble(range(4), {I: ["m"] for layer in subsets_by_size(range(4)) for I in layer})
for row in c4.boundaries[2].to_dense():
    print(row)
