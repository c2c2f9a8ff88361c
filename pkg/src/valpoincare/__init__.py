"""Multi-index Poincare series of filtrations defined by monomial valuations."""

from .complexes import (
    ChainComplex,
    HomologyProfile,
    build_ambient_complex,
    build_embedded_complex,
    build_tilde_complex,
    homology_profile,
    stabilized_euler,
)
from .enumeration import (
    FilterPredicate,
    dim_filtration_quotient,
    enumerate_fiber,
    enumerate_quotient_basis,
    fiber_size,
    finiteness_check,
)
from .errors import (
    CrossCheckDisagreement,
    InfiniteBasisError,
    InfiniteDimensionError,
    MalformedComplexError,
    NonStabilizedError,
    PoincareError,
    PreconditionError,
    UnsupportedDimensionError,
    ValidationError,
)
from .lattice import (
    AmbientSpace,
    MonomialPoly,
    Valuation,
    ValuationSet,
    is_centered_at_maximal_ideal,
    pair,
    value_of_poly,
)
from .linalg import SparseMatrix, homology_dims, rank
from .newton import (
    cancellation_check,
    hypothesis_check,
    induced_valuations,
    newton_polyhedron,
    q_vector,
    roundtrip_reconstruct,
    same_polyhedron,
)
from .poincare import (
    Instance,
    ambient_profile,
    ambient_series,
    coeff_description1,
    coeff_description2,
    coeff_description3,
    coeff_description4,
    coeff_homological,
    cross_check,
    embedded_series,
)
from .series import Box, TruncatedSeries, equal_on_box, mul_one_minus_monomial, series_on_box

__version__ = "0.1.0"
