"""Newton polyhedron at the origin, the monomial valuations its facets
induce, and the checks used when comparing the embedded series with the
polyhedron.

The polyhedron is conv(support) + the nonnegative orthant.  Facets are found
by brute force: every hyperplane spanned by support points and coordinate
directions is kept when it supports the polyhedron.  That is exact and fast
for the small dimensions handled here (d <= 4).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm

from .errors import UnsupportedDimensionError, ValidationError
from .lattice import MonomialPoly, ValuationSet, pair, value_of_poly

MAX_DIM = 4


@dataclass(frozen=True)
class Facet:
    normal: tuple
    offset: object
    compact: bool

    def to_dict(self):
        return {"normal": list(self.normal), "offset": _num(self.offset), "compact": self.compact}


@dataclass(frozen=True)
class NewtonPolyhedron:
    dim: int
    support: tuple
    facets: tuple

    def facet_set(self):
        return {(f.normal, Fraction(f.offset)) for f in self.facets}

    def contains(self, x):
        return all(c >= 0 for c in x) and all(pair(f.normal, x) >= f.offset for f in self.facets)


@dataclass
class Check:
    ok: bool
    messages: list

    def __bool__(self):
        return self.ok

    def to_dict(self):
        return {"ok": self.ok, "messages": self.messages}


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)


def _det(rows):
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def _normal(vectors, d):
    # generalized cross product of d-1 vectors in Q^d
    n = []
    for i in range(d):
        minor = [[row[j] for j in range(d) if j != i] for row in vectors]
        n.append((-1) ** i * _det(minor))
    return n


def primitive(vec):
    vec = [Fraction(x) for x in vec]
    den = lcm(*(x.denominator for x in vec))
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def _sort_facets(facets, d):
    def key(f):
        coord = sum(1 for x in f.normal if x) == 1
        return (0, f.normal.index(max(f.normal)), ()) if coord else (1, 0, f.normal)

    return tuple(sorted(facets, key=key))


def facets_of_orthant_hull(points, d):
    """Facets of conv(points) + R^d_{>=0} with primitive inner normals."""
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if not pts:
        raise ValidationError("need at least one point")
    found = {}
    units = [tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)]
    for k in range(1, min(d, len(pts)) + 1):
        for A in combinations(pts, k):
            base = A[0]
            diffs = [tuple(a - b for a, b in zip(p, base)) for p in A[1:]]
            for D in combinations(range(d), d - k):
                n = primitive(_normal(diffs + [units[j] for j in D], d))
                if not any(n):
                    continue
                if all(x <= 0 for x in n):
                    n = tuple(-x for x in n)
                if any(x < 0 for x in n) or n in found:
                    continue
                offset = min(pair(n, p) for p in pts)
                if all(pair(n, p) == offset for p in A):
                    found[n] = offset
    facets = [Facet(n, _int_if_possible(N), all(x > 0 for x in n)) for n, N in found.items()]
    return _sort_facets(facets, d)


def _int_if_possible(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _check_poly(h):
    if not isinstance(h, MonomialPoly) or h.is_zero():
        raise ValidationError("need a nonzero polynomial")
    d = h.dim
    if d > MAX_DIM:
        raise UnsupportedDimensionError(f"dimension {d} > {MAX_DIM} is not supported")
    if any(c < 0 for e in h.support for c in e):
        raise ValidationError("negative exponents are not allowed in a polynomial")
    return d


def newton_polyhedron(h):
    d = _check_poly(h)
    return NewtonPolyhedron(d, tuple(h.support), facets_of_orthant_hull(h.support, d))


def induced_valuations(np):
    """Primitive facet normals: coordinate normals by index, then the rest
    lexicographically."""
    return ValuationSet([f.normal for f in np.facets])


def q_vector(h, nus):
    return tuple(value_of_poly(nu, h) for nu in nus)


def hypothesis_check(h):
    """Fails when some variable x_i is itself a term of h and divides h."""
    d = _check_poly(h)
    support = h.support
    bad = []
    for i in range(d):
        ei = tuple(int(i == j) for j in range(d))
        if ei in support and all(e[i] >= 1 for e in support):
            bad.append(f"x{i + 1} is in the support and divides h")
    return Check(not bad, bad)


def cancellation_check(nus, q):
    """No cancellation iff q differs from (nu_1(x_i), ..., nu_r(x_i)) for every variable x_i."""
    q = tuple(q)
    if len(q) != len(nus):
        raise ValidationError("q and the valuation set differ in length")
    bad = []
    for i in range(nus.dim):
        column = tuple(nu.weights[i] for nu in nus)
        if column == q:
            bad.append(f"q equals the value column of x{i + 1}")
    return Check(not bad, bad)


def _solve(rows, rhs):
    n = len(rows)
    m = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return None
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return tuple(row[n] for row in m)


def roundtrip_reconstruct(nus, q, d):
    """The polyhedron {x >= 0 : <nu_j, x> >= q_j} in facet form."""
    nus = ValuationSet(nus)
    if nus.dim != d or len(q) != len(nus):
        raise ValidationError("inconsistent dimensions")
    ineqs = [(nu.weights, qj) for nu, qj in zip(nus, q)]
    ineqs += [(tuple(int(i == j) for j in range(d)), 0) for i in range(d)]
    vertices = set()
    for chosen in combinations(ineqs, d):
        x = _solve([a for a, _ in chosen], [b for _, b in chosen])
        if x is not None and all(pair(a, x) >= b for a, b in ineqs):
            vertices.add(x)
    if not vertices:
        raise ValidationError("reconstructed polyhedron has no vertex")
    verts = tuple(sorted(tuple(_int_if_possible(c) for c in x) for x in vertices))
    return NewtonPolyhedron(d, verts, facets_of_orthant_hull(verts, d))


def same_polyhedron(a, b):
    return a.dim == b.dim and a.facet_set() == b.facet_set()


def newton_report(h):
    np = newton_polyhedron(h)
    nus = induced_valuations(np)
    q = q_vector(h, nus)
    rec = roundtrip_reconstruct(nus, q, np.dim)
    return {
        "dimension": np.dim,
        "facets": [f.to_dict() for f in np.facets],
        "valuations": [list(nu.weights) for nu in nus],
        "q": list(q),
        "hypothesis_check": hypothesis_check(h).to_dict(),
        "cancellation_check": cancellation_check(nus, q).to_dict(),
        "roundtrip_equal": same_polyhedron(np, rec),
        "notes": ["nondegeneracy of h with respect to its Newton polyhedron is assumed, not checked"],
    }
