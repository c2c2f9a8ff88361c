from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from valpoincare import MalformedComplexError, SparseMatrix, ValidationError, homology_dims, rank
from valpoincare.linalg import Echelon, block_diagonal

import oracles

# columns (x, y, z, u) = V_123, V_124, V_134, V_234; rows V_12, V_13, V_14, V_23, V_24, V_34
D3_R4 = [
    [-1, -1, 0, 0],
    [1, 0, -1, 0],
    [0, 1, 1, 0],
    [-1, 0, 0, -1],
    [0, -1, 0, 1],
    [0, 0, -1, -1],
]


def test_rank_examples():
    assert rank(SparseMatrix.zeros(0, 5)) == 0
    assert rank(SparseMatrix.zeros(4, 0)) == 0
    assert rank(SparseMatrix.identity(3)) == 3
    assert rank(SparseMatrix.from_dense(D3_R4)) == oracles.frac_rank(D3_R4) == 3


def test_rank_with_rational_entries():
    m = SparseMatrix.from_dense([[Fraction(1, 2), Fraction(1, 3)], [3, 2]])
    assert rank(m) == 1


entry = st.sampled_from([0, 0, 0, 1, -1, 2, -3, 7, 10**20])
dense = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(entry, min_size=n, max_size=n), min_size=1, max_size=7)
)


@settings(max_examples=200)
@given(dense)
def test_rank_matches_rational_elimination(rows):
    assert rank(SparseMatrix.from_dense(rows)) == oracles.frac_rank(rows)


@given(dense)
def test_rank_of_transpose(rows):
    m = SparseMatrix.from_dense(rows)
    assert rank(m) == rank(m.transpose())


def test_homology_trivial_complexes():
    assert homology_dims([], dims=[1]) == [1]
    assert homology_dims([SparseMatrix.zeros(1, 0), SparseMatrix.zeros(0, 0)]) == [1, 0, 0]


def simplex_complex(n):
    """Augmented chain complex of the full simplex on n vertices."""
    from valpoincare.complexes import assemble, subsets_by_size

    bases = {I: ["m"] for layer in subsets_by_size(range(n)) for I in layer}
    return assemble(range(n), bases)


def test_full_simplex_is_exact():
    c = simplex_complex(4)
    assert c.dims == [1, 4, 6, 4, 1]
    assert homology_dims(c.boundaries) == [0, 0, 0, 0, 0]


def test_malformed_complex_detected():
    d1 = SparseMatrix.from_dense([[1, 1]])
    d2 = SparseMatrix.from_dense([[1], [1]])
    with pytest.raises(MalformedComplexError):
        homology_dims([d1, d2])


def test_shape_mismatch():
    with pytest.raises(ValidationError):
        homology_dims([SparseMatrix.zeros(1, 2), SparseMatrix.zeros(3, 1)])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_euler_characteristic_identity(n):
    c = simplex_complex(n)
    h = homology_dims(c.boundaries)
    assert sum((-1) ** i * x for i, x in enumerate(h)) == sum((-1) ** i * x for i, x in enumerate(c.dims))


def test_direct_sum_adds_homology():
    a = simplex_complex(3)
    # 0 -> Q --0--> Q^2: homology (2, 1)
    b = [SparseMatrix.zeros(2, 1), SparseMatrix.zeros(1, 0), SparseMatrix.zeros(0, 0)]
    summed = [block_diagonal(x, y) for x, y in zip(a.boundaries, b)]
    assert homology_dims(summed) == [x + y for x, y in zip(homology_dims(a.boundaries), homology_dims(b))]


def test_echelon_span_and_coordinates():
    e = Echelon()
    assert e.add({0: 2, 1: 4})
    assert e.add({1: 1, 2: 1})
    assert not e.add({0: 1, 1: 3, 2: 1})
    w = {0: 1, 1: 3, 2: 1}
    coords = e.coordinates(w)
    recombined = {}
    for c, row in zip(coords, e.basis()):
        for k, x in row.items():
            recombined[k] = recombined.get(k, 0) + c * x
    assert {k: x for k, x in recombined.items() if x} == w
    assert e.pivots() == [0, 1]
    assert e.reduce({2: 5}) == {2: 5}
