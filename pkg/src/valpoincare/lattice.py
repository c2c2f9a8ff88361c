"""Lattice points, ambient semigroups, monomial valuations and polynomials.

Lattice points are plain tuples of ints.  A monomial valuation is an integer
weight vector; its value on a monomial is the dot product with the exponent,
and on a polynomial the minimum over the support.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ValidationError

LatticePoint = tuple


def as_point(coords, dim=None):
    try:
        p = tuple(int(c) for c in coords)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"not an integer vector: {coords!r}") from exc
    if any(int(c) != c for c in coords):
        raise ValidationError(f"not an integer vector: {coords!r}")
    if dim is not None and len(p) != dim:
        raise ValidationError(f"expected length {dim}, got {len(p)}: {p}")
    return p


def add(m1, m2):
    return tuple(a + b for a, b in zip(m1, m2))


@dataclass(frozen=True)
class AmbientSpace:
    """Affine space C^d, or the semigroup ring C[S] with S given by generators.

    ``AmbientSpace.affine(d)`` is the semigroup generated by the unit vectors.
    """

    generators: tuple
    is_affine: bool = False

    def __post_init__(self):
        if not self.generators:
            raise ValidationError("semigroup needs at least one generator")
        d = len(self.generators[0])
        if d < 1:
            raise ValidationError("ambient dimension must be >= 1")
        for g in self.generators:
            if len(g) != d:
                raise ValidationError(f"generator {g} has wrong length (expected {d})")
            if not any(g):
                raise ValidationError("zero generator")

    @classmethod
    def affine(cls, d):
        if d < 1:
            raise ValidationError("ambient dimension must be >= 1")
        gens = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
        return cls(gens, is_affine=True)

    @classmethod
    def semigroup(cls, generators):
        gens = []
        for g in generators:
            g = as_point(g)
            if g not in gens:
                gens.append(g)
        return cls(tuple(gens))

    @property
    def dim(self):
        return len(self.generators[0])

    def grading(self):
        """A strictly positive integer functional on the generators."""
        candidates = [(1,) * self.dim]
        candidates.append(tuple(sum(c) for c in zip(*self.generators)))
        for w in candidates:
            if all(pair(w, g) > 0 for g in self.generators):
                return w
        raise ValidationError("no positive grading found; is the semigroup pointed?")

    def contains(self, m):
        m = as_point(m, self.dim)
        if self.is_affine:
            return all(c >= 0 for c in m)
        w = self.grading()
        cap = pair(w, m)
        if cap < 0:
            return False
        seen = {(0,) * self.dim}
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            if x == m:
                return True
            for g in self.generators:
                y = add(x, g)
                if y not in seen and pair(w, y) <= cap:
                    seen.add(y)
                    queue.append(y)
        return False

    def describe(self):
        if self.is_affine:
            return {"kind": "affine", "dim": self.dim}
        return {"kind": "semigroup", "generators": [list(g) for g in self.generators]}


@dataclass(frozen=True)
class Valuation:
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", as_point(self.weights))

    def __len__(self):
        return len(self.weights)

    def __call__(self, m):
        return pair(self, m)


class ValuationSet(tuple):
    """Ordered, nonempty tuple of valuations of a common length."""

    def __new__(cls, valuations):
        vals = tuple(v if isinstance(v, Valuation) else Valuation(tuple(v)) for v in valuations)
        if not vals:
            raise ValidationError("need at least one valuation")
        d = len(vals[0])
        if any(len(v) != d for v in vals):
            raise ValidationError("valuations of different lengths")
        return super().__new__(cls, vals)

    @property
    def dim(self):
        return len(self[0])

    def weights(self):
        return tuple(v.weights for v in self)

    def value(self, m):
        """The value vector (nu_1(m), ..., nu_r(m)) of a monomial."""
        return tuple(pair(nu, m) for nu in self)

    def validate_for(self, amb):
        if self.dim != amb.dim:
            raise ValidationError(f"valuations have length {self.dim}, ambient dimension is {amb.dim}")
        for j, nu in enumerate(self):
            for g in amb.generators:
                if pair(nu, g) < 0:
                    raise ValidationError(
                        f"valuation {j + 1} {nu.weights} is negative on generator {g}"
                    )


def pair(nu, m):
    w = nu.weights if isinstance(nu, Valuation) else nu
    if len(w) != len(m):
        raise ValidationError(f"dimension mismatch: {tuple(w)} vs {tuple(m)}")
    return sum(a * b for a, b in zip(w, m))


@dataclass(frozen=True)
class MonomialPoly:
    """Polynomial with exact rational coefficients, stored as sorted
    ``(exponent, coefficient)`` pairs with no zero coefficients."""

    terms: tuple

    @classmethod
    def from_terms(cls, terms: Iterable):
        """Build from ``(coefficient, exponent)`` pairs, merging repeats."""
        acc = {}
        dim = None
        for coef, exp in terms:
            exp = as_point(exp, dim)
            dim = len(exp)
            acc[exp] = acc.get(exp, Fraction(0)) + Fraction(coef)
        return cls(tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def monomial(cls, exp, coef=1):
        return cls.from_terms([(coef, exp)])

    @property
    def support(self):
        return [e for e, _ in self.terms]

    @property
    def dim(self):
        if not self.terms:
            raise ValidationError("zero polynomial has no dimension")
        return len(self.terms[0][0])

    def is_zero(self):
        return not self.terms

    def degree(self):
        return max(sum(e) for e in self.support)

    def __mul__(self, other):
        if isinstance(other, MonomialPoly):
            return MonomialPoly.from_terms(
                (c1 * c2, add(e1, e2)) for e1, c1 in self.terms for e2, c2 in other.terms
            )
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, MonomialPoly):
            return MonomialPoly.from_terms(
                [(c, e) for e, c in self.terms] + [(c, e) for e, c in other.terms]
            )
        return NotImplemented


def value_of_poly(nu, h: MonomialPoly):
    if h.is_zero():
        raise ValidationError("value of the zero polynomial is undefined")
    return min(pair(nu, e) for e in h.support)


def is_centered_at_maximal_ideal(nu, amb: AmbientSpace):
    """True when nu is strictly positive on every generator of the ambient
    semigroup, i.e. {f : nu(f) > 0} is the maximal ideal."""
    return all(pair(nu, g) > 0 for g in amb.generators)


def unit(r, subset: Sequence[int] = ()):
    """The 0/1 vector e_I of length r."""
    return tuple(int(j in subset) for j in range(r))
