"""Chain complexes attached to a value vector v.

For a family of subspaces V_I indexed by subsets I of {1..r}, with
V_I contained in V_J whenever J is contained in I, the complex has
C_i = (+) over |I| = i of V_I, and d maps x in V_I to (-1)^k x in
V_{I minus a_k}, where a_k is the k-th smallest element of I.

Three families are built here:

* ambient:  V_I = M(v + e_I) / M(v + 1)
* tilde:    V_I = M(v + e_I) / M(v + e_I + e_r),  I a subset of {1..r-1}
* embedded: V_I = (M(v + e_I) + (h)) / (M(v + 1) + (h)), truncated by degree

Subsets are 0-based tuples in ``itertools.combinations`` order.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .enumeration import FilterPredicate, elements_up_to_degree, enumerate_quotient_basis
from .errors import NonStabilizedError, PreconditionError, ValidationError
from .lattice import as_point, is_centered_at_maximal_ideal
from .linalg import Echelon, SparseMatrix, homology_dims


@dataclass
class ChainComplex:
    """spaces[i] lists the basis labels (I, label) of C_i; boundaries[i-1] is d_i."""

    spaces: list
    boundaries: list
    v: tuple = None
    meta: dict = field(default_factory=dict)

    @property
    def dims(self):
        return [len(s) for s in self.spaces]


@dataclass(frozen=True)
class HomologyProfile:
    h: tuple
    euler: int

    @classmethod
    def from_h(cls, h):
        h = tuple(h)
        return cls(h, sum((-1) ** i * x for i, x in enumerate(h)))


def subsets_by_size(indices):
    indices = list(indices)
    return [list(combinations(indices, i)) for i in range(len(indices) + 1)]


def assemble(indices, bases, include=None, v=None):
    """Complex on the subsets of ``indices``.

    ``bases[I]`` is the list of basis labels of V_I.  ``include(I, J, n)``
    returns {m: coefficient} giving the n-th basis vector of V_I in the basis
    of V_J; by default labels are identified (monomial bases).
    """
    layers = subsets_by_size(indices)
    spaces, offsets = [], []
    for layer in layers:
        labels, off = [], {}
        for I in layer:
            off[I] = len(labels)
            labels.extend((I, lab) for lab in bases.get(I, ()))
        spaces.append(labels)
        offsets.append(off)

    if include is None:
        lookup = {I: {lab: n for n, lab in enumerate(b)} for I, b in bases.items()}

        def include(I, J, n):
            lab = bases[I][n]
            pos = lookup.get(J, {}).get(lab)
            return {} if pos is None else {pos: 1}

    boundaries = []
    for i in range(1, len(layers)):
        ent = {}
        for I in layers[i]:
            for n in range(len(bases.get(I, ()))):
                col = offsets[i][I] + n
                for k, a in enumerate(I, start=1):
                    J = tuple(x for x in I if x != a)
                    sign = -1 if k % 2 else 1
                    for m, c in include(I, J, n).items():
                        ent[(offsets[i - 1][J] + m, col)] = sign * c
        boundaries.append(SparseMatrix(len(spaces[i - 1]), len(spaces[i]), ent))
    return ChainComplex(spaces, boundaries, v=v)


def _shift(v, I, extra=()):
    return tuple(x + (j in I) + (j in extra) for j, x in enumerate(v))


def build_ambient_complex(amb, nus, v, degree_bound=None):
    """Complex with V_I = M(v+e_I)/M(v+1) over monomial bases.

    Without ``degree_bound`` every V_I must be finite dimensional, otherwise
    InfiniteBasisError is raised.
    """
    r = len(nus)
    v = as_point(v, r)
    top = tuple(x + 1 for x in v)
    bases = {}
    for layer in subsets_by_size(range(r)):
        for I in layer:
            lower = _shift(v, I)
            if lower == top:
                bases[I] = []
                continue
            bases[I] = enumerate_quotient_basis(amb, nus, FilterPredicate(lower, top), degree_bound)
    c = assemble(range(r), bases, v=v)
    c.meta.update(kind="ambient", degree_bound=degree_bound)
    return c


def build_tilde_complex(amb, nus, v):
    """Complex over subsets of {1..r-1} with V_I = M(v+e_I)/M(v+e_I+e_r).

    Requires the last valuation to be centered at the maximal ideal.
    """
    r = len(nus)
    v = as_point(v, r)
    if not is_centered_at_maximal_ideal(nus[-1], amb):
        raise PreconditionError("last valuation is not centered at the maximal ideal")
    bases = {}
    for layer in subsets_by_size(range(r - 1)):
        for I in layer:
            p = FilterPredicate(_shift(v, I), _shift(v, I, (r - 1,)))
            bases[I] = enumerate_quotient_basis(amb, nus, p)
    c = assemble(range(r - 1), bases, v=v)
    c.meta.update(kind="tilde")
    return c


def build_embedded_complex(amb, nus, h, v, degree_bound):
    """Truncated complex of V_I = (M(v+e_I) + (h)) / (M(v+1) + (h)).

    Works inside W = P_T / (monomials of M(v+1) + multiples m*h), where P_T is
    spanned by the monomials of generator length <= T and only multiples whose
    whole support stays in P_T are used.  Each V_I is the image of the
    monomials of M(v+e_I) in W, with a reduced echelon basis; boundary entries
    are coordinates in those bases.
    """
    r = len(nus)
    v = as_point(v, r)
    if h.is_zero():
        raise ValidationError("h must be nonzero")
    if h.dim != amb.dim:
        raise ValidationError("polynomial and ambient dimension differ")
    if degree_bound < 0:
        raise ValidationError("degree bound must be >= 0")
    top = tuple(x + 1 for x in v)
    elems = elements_up_to_degree(amb, degree_bound)
    values = {m: nus.value(m) for m in elems}
    free = sorted(m for m in elems if not all(x >= t for x, t in zip(values[m], top)))
    col = {m: n for n, m in enumerate(free)}

    relations = Echelon()
    for m in sorted(elems):
        prods = [(tuple(a + b for a, b in zip(m, e)), c) for e, c in h.terms]
        if all(p in elems for p, _ in prods):
            relations.add({col[p]: c for p, c in prods if p in col})

    layers = subsets_by_size(range(r))
    spaces = {}
    for layer in layers:
        for I in layer:
            lower = _shift(v, I)
            ech = Echelon()
            if lower != top:
                for m in free:
                    if all(x >= a for x, a in zip(values[m], lower)):
                        ech.add(relations.reduce({col[m]: 1}))
            spaces[I] = ech
    bases = {I: list(range(len(e))) for I, e in spaces.items()}
    vectors = {I: e.basis() for I, e in spaces.items()}

    def include(I, J, n):
        coords = spaces[J].coordinates(vectors[I][n])
        return {k: x for k, x in enumerate(coords) if x}

    c = assemble(range(r), bases, include, v=v)
    c.meta.update(kind="embedded", degree_bound=degree_bound)
    return c


def homology_profile(c: ChainComplex):
    if not c.boundaries:
        return HomologyProfile.from_h(c.dims)
    return HomologyProfile.from_h(homology_dims(c.boundaries, c.dims))


def stabilized_euler(builder, schedule, return_trace=False):
    """Euler characteristic of ``builder(T)`` once two consecutive bounds of
    the schedule give the same homology profile.

    For monomial ambient complexes any truncation is a direct sum of
    per-monomial pieces, so the result is exact once T exceeds the degrees
    in the value fiber; for embedded complexes it is a heuristic.  With
    ``return_trace`` the computed (bound, h) pairs are returned as well.
    """
    schedule = list(schedule)
    if not schedule:
        raise ValidationError("empty schedule")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValidationError("schedule must be strictly increasing")
    trace = []
    for t in schedule:
        prof = homology_profile(builder(t))
        stable = bool(trace) and trace[-1][1] == prof.h
        trace.append((t, prof.h))
        if stable:
            return (prof.euler, trace) if return_trace else prof.euler
    raise NonStabilizedError("homology profile did not stabilize", trace)
