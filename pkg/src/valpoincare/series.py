"""Multivariate Laurent series truncated to a finite box of exponents."""

import warnings
from dataclasses import dataclass, field
from itertools import product

from .errors import PoincareError, ValidationError
from .lattice import as_point


@dataclass(frozen=True)
class Box:
    """Integer box lo <= v <= hi.  A box with lo_j > hi_j for some j is empty;
    such boxes only arise as results of shrinking."""

    lo: tuple
    hi: tuple

    def __post_init__(self):
        object.__setattr__(self, "lo", as_point(self.lo))
        object.__setattr__(self, "hi", as_point(self.hi, len(self.lo)))

    @classmethod
    def cube(cls, lo, hi, r):
        return cls((lo,) * r, (hi,) * r)

    @property
    def r(self):
        return len(self.lo)

    def is_empty(self):
        return any(a > b for a, b in zip(self.lo, self.hi))

    def __contains__(self, v):
        return all(a <= x <= b for a, x, b in zip(self.lo, v, self.hi))

    def points(self):
        if self.is_empty():
            return iter(())
        return product(*(range(a, b + 1) for a, b in zip(self.lo, self.hi)))

    def __len__(self):
        if self.is_empty():
            return 0
        n = 1
        for a, b in zip(self.lo, self.hi):
            n *= b - a + 1
        return n

    def intersect(self, other):
        return Box(
            tuple(max(a, b) for a, b in zip(self.lo, other.lo)),
            tuple(min(a, b) for a, b in zip(self.hi, other.hi)),
        )

    def hull(self, other):
        return Box(
            tuple(min(a, b) for a, b in zip(self.lo, other.lo)),
            tuple(max(a, b) for a, b in zip(self.hi, other.hi)),
        )

    def shifted(self, q):
        return Box(tuple(a + x for a, x in zip(self.lo, q)), tuple(b + x for b, x in zip(self.hi, q)))


@dataclass
class TruncatedSeries:
    """Coefficients on a box; missing keys inside the box are zero."""

    box: Box
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        for v in self.coeffs:
            if v not in self.box:
                raise ValidationError(f"coefficient at {v} outside {self.box}")
        self.coeffs = {v: c for v, c in self.coeffs.items() if c}

    def __getitem__(self, v):
        v = tuple(v)
        if v not in self.box:
            raise KeyError(v)
        return self.coeffs.get(v, 0)

    def get(self, v, default=0):
        v = tuple(v)
        return self.coeffs.get(v, 0) if v in self.box else default

    def support(self):
        return sorted(self.coeffs)

    def restrict(self, box):
        box = self.box.intersect(box)
        return TruncatedSeries(box, {v: c for v, c in self.coeffs.items() if v in box})

    def __add__(self, other):
        box = self.box.intersect(other.box)
        return TruncatedSeries(box, {v: self[v] + other[v] for v in box.points()})

    def __neg__(self):
        return TruncatedSeries(self.box, {v: -c for v, c in self.coeffs.items()})

    def to_records(self):
        """[{"v": [...], "c": int}] over every box point, lexicographic."""
        return [{"v": list(v), "c": self.coeffs.get(v, 0)} for v in self.box.points()]


def series_on_box(coeff_fn, box: Box):
    coeffs = {}
    for v in box.points():
        try:
            coeffs[v] = coeff_fn(v)
        except PoincareError as exc:
            if getattr(exc, "v", None) is None:
                exc.v = v
            raise
    return TruncatedSeries(box, coeffs)


def mul_one_minus_monomial(s: TruncatedSeries, q):
    """(1 - t^q) * s, kept only where both v and v - q lie in the box of s."""
    q = as_point(q, s.box.r)
    box = s.box.intersect(s.box.shifted(q))
    if box.is_empty():
        warnings.warn(f"multiplying by 1 - t^{q} leaves no exact coefficient in {s.box}")
    out = {}
    for v in box.points():
        w = tuple(a - b for a, b in zip(v, q))
        out[v] = s.coeffs.get(v, 0) - s.coeffs.get(w, 0)
    return TruncatedSeries(box, out)


def equal_on_box(a: TruncatedSeries, b: TruncatedSeries):
    """Multi-indices of the common box where the coefficients differ."""
    box = a.box.intersect(b.box)
    if box.is_empty():
        raise ValidationError("series boxes are disjoint")
    return [v for v in box.points() if a[v] != b[v]]
