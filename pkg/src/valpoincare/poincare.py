"""Coefficients of the multi-index Poincare series under the different
definitions, and cross-checks between them.

Definitions computed per value vector v:

description1
    sum over I of (-1)^|I| dim M(v+e_I)/M(v+1); needs every quotient finite.
description2
    sum over K in {1..r-1} of (-1)^|K| dim M(v+e_K)/M(v+e_K+e_r); needs
    the last valuation centered at the maximal ideal.
description3
    dim M(v)/(M(v+e_1)+M(v+e_2)) for r = 2.
description4
    Euler characteristic of the projectivized fiber, which for monomial
    valuations is the number of monomials of value exactly v.
homological
    sum of (-1)^i h_i of the ambient complex.
"""

from dataclasses import dataclass, field

from .complexes import (
    build_ambient_complex,
    build_embedded_complex,
    homology_profile,
    stabilized_euler,
)
from .enumeration import dim_filtration_quotient, fiber_size, fiber_with_lengths, finiteness_check, lowest_length
from .errors import InfiniteBasisError, InfiniteDimensionError, PoincareError, PreconditionError, ValidationError
from .lattice import AmbientSpace, MonomialPoly, ValuationSet, as_point, is_centered_at_maximal_ideal, unit
from .newton import q_vector
from .series import mul_one_minus_monomial, series_on_box

DEFINITIONS = ("description1", "description2", "description3", "description4", "homological")
DEFAULT_SCHEDULE = (6, 8, 10)


@dataclass(frozen=True)
class Instance:
    ambient: AmbientSpace
    valuations: ValuationSet
    h: MonomialPoly = None

    def __post_init__(self):
        if not isinstance(self.valuations, ValuationSet):
            object.__setattr__(self, "valuations", ValuationSet(self.valuations))
        self.valuations.validate_for(self.ambient)
        if self.h is not None:
            if self.h.is_zero():
                raise ValidationError("h must be a nonzero polynomial")
            if self.h.dim != self.ambient.dim:
                raise ValidationError(f"h lives in dimension {self.h.dim}, ambient is {self.ambient.dim}")
            for e in self.h.support:
                if not self.ambient.contains(e):
                    raise ValidationError(f"exponent {e} of h is not in the semigroup")

    @property
    def r(self):
        return len(self.valuations)

    def centered(self):
        return [is_centered_at_maximal_ideal(nu, self.ambient) for nu in self.valuations]


def _v(inst, v):
    return as_point(v, inst.r)


def coeff_description1(inst, v):
    v = _v(inst, v)
    r = inst.r
    top = tuple(x + 1 for x in v)
    total = 0
    for mask in range(2 ** r - 1):
        I = tuple(j for j in range(r) if mask >> j & 1)
        lower = tuple(a + b for a, b in zip(v, unit(r, I)))
        try:
            d = dim_filtration_quotient(inst.ambient, inst.valuations, lower, top)
        except InfiniteDimensionError as exc:
            raise InfiniteDimensionError(
                f"M(v+e_I)/M(v+1) is infinite dimensional for I={[j + 1 for j in I]}",
                subset=I, witness=exc.witness, v=v,
            ) from exc
        total += (-1) ** len(I) * d
    return total


def coeff_description2(inst, v):
    v = _v(inst, v)
    r = inst.r
    if not is_centered_at_maximal_ideal(inst.valuations[-1], inst.ambient):
        raise PreconditionError("the last valuation is not centered at the maximal ideal")
    er = unit(r, (r - 1,))
    total = 0
    for mask in range(2 ** (r - 1)):
        K = tuple(j for j in range(r - 1) if mask >> j & 1)
        lower = tuple(a + b for a, b in zip(v, unit(r, K)))
        upper = tuple(a + b for a, b in zip(lower, er))
        total += (-1) ** len(K) * dim_filtration_quotient(inst.ambient, inst.valuations, lower, upper)
    return total


def coeff_description3(inst, v):
    if inst.r != 2:
        raise PreconditionError("description 3 needs exactly two valuations")
    # monomial basis of M(v)/(M(v+e_1)+M(v+e_2)) is the value fiber over v
    return fiber_size(inst.ambient, inst.valuations, _v(inst, v))


def coeff_description4(inst, v):
    return fiber_size(inst.ambient, inst.valuations, _v(inst, v))


def ambient_profile(inst, v):
    """Rank-computed homology profile of the ambient complex at v.

    When some V_I is infinite the complex is truncated at the largest
    generator length occurring in the value fiber; the complex splits as a
    direct sum over monomials, so this truncation does not change h.
    """
    v = _v(inst, v)
    try:
        c = build_ambient_complex(inst.ambient, inst.valuations, v)
    except InfiniteBasisError:
        if finiteness_check(inst.ambient, inst.valuations):
            fiber = fiber_with_lengths(inst.ambient, inst.valuations, v)
            bound = max(fiber.values(), default=0)
        else:
            fiber_size(inst.ambient, inst.valuations, v)  # raises unless the fiber is empty
            bound = 0
        c = build_ambient_complex(inst.ambient, inst.valuations, v, degree_bound=bound)
    return homology_profile(c)


def coeff_homological(inst, v, method="fast"):
    """Homological coefficient at v.

    ``method="fast"`` counts the value fiber; ``method="rank"`` computes the
    homology of the ambient complex by exact rank computations.
    """
    if method == "fast":
        return fiber_size(inst.ambient, inst.valuations, _v(inst, v))
    if method == "rank":
        return ambient_profile(inst, v).euler
    raise ValueError(f"unknown method {method!r}")


def ambient_series(inst, box, method="fast"):
    return series_on_box(lambda v: coeff_homological(inst, v, method), box)


def _require_h(inst):
    if inst.h is None:
        raise ValidationError("instance has no polynomial h")
    return inst.h


def embedded_coefficient(inst, v, schedule=DEFAULT_SCHEDULE, return_trace=False):
    """Stabilized Euler characteristic of the truncated embedded complex.

    Each bound T of the schedule is measured above the lowest degree of
    M(v): the complex is built with total degree <= T + lowest_length(v), so
    one schedule serves every v in a box.  Traces report T itself.
    """
    h = _require_h(inst)
    v = _v(inst, v)
    base = lowest_length(inst.ambient, inst.valuations, v)

    def build(t):
        return build_embedded_complex(inst.ambient, inst.valuations, h, v, t + base)

    try:
        return stabilized_euler(build, schedule, return_trace=return_trace)
    except PoincareError as exc:
        exc.v = v
        raise


def embedded_series(inst, box, mode="product", schedule=DEFAULT_SCHEDULE):
    """Series of the subspace cut out by h on ``box``.

    ``product`` multiplies the ambient series by (1 - t^q), q = nu(h),
    computed on box union (box - q) so every coefficient is exact.
    ``oracle`` computes each coefficient from truncated embedded complexes.
    """
    h = _require_h(inst)
    if mode == "product":
        q = q_vector(h, inst.valuations)
        wide = box.hull(box.shifted(tuple(-x for x in q)))
        return mul_one_minus_monomial(ambient_series(inst, wide), q).restrict(box)
    if mode == "oracle":
        return series_on_box(lambda v: embedded_coefficient(inst, v, schedule), box)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass
class CrossCheckReport:
    applicable: dict
    reasons: dict
    table: dict = field(default_factory=dict)
    disagreements: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.disagreements

    def to_dict(self):
        return {
            "applicable": self.applicable,
            "reasons": self.reasons,
            "coefficients": [
                {"v": list(v), **{k: row[k] for k in sorted(row)}} for v, row in sorted(self.table.items())
            ],
            "disagreements": [{"v": list(v), "values": vals} for v, vals in self.disagreements],
            "ok": self.ok,
        }


def applicability(inst):
    centered = inst.centered()
    finite = finiteness_check(inst.ambient, inst.valuations)
    flags = {
        "description1": all(centered),
        "description2": centered[-1],
        "description3": inst.r == 2 and finite,
        "description4": finite,
        "homological": finite,
    }
    reasons = {
        "description1": "all valuations centered" if flags["description1"] else "some valuation is not centered",
        "description2": "last valuation centered" if flags["description2"] else "last valuation is not centered",
        "description3": "r = 2 and fibers finite" if flags["description3"]
        else ("r != 2" if inst.r != 2 else "fibers may be infinite"),
        "description4": "fibers finite" if finite else "fibers may be infinite",
        "homological": "fibers finite" if finite else "fibers may be infinite",
    }
    return flags, reasons


_COEFF = {
    "description1": coeff_description1,
    "description2": coeff_description2,
    "description3": coeff_description3,
    "description4": coeff_description4,
    "homological": coeff_homological,
    "homological_rank": lambda inst, v: coeff_homological(inst, v, "rank"),
}


def cross_check(inst, box, rank_path=False, fault=None):
    """Evaluate every applicable definition on ``box`` and collect
    disagreements.  ``fault=(name, v, delta)`` perturbs one coefficient, for
    testing the gate itself."""
    flags, reasons = applicability(inst)
    if rank_path:
        flags["homological_rank"] = flags["homological"]
        reasons["homological_rank"] = reasons["homological"]
    names = [n for n in _COEFF if n in flags and flags[n]]
    report = CrossCheckReport(flags, reasons)
    for v in box.points():
        row = {n: _COEFF[n](inst, v) for n in names}
        if fault is not None and fault[0] in row and tuple(fault[1]) == v:
            row[fault[0]] += fault[2]
        report.table[v] = row
        if len(set(row.values())) > 1:
            report.disagreements.append((v, row))
    return report
