"""Enumeration of semigroup elements: value fibers and monomial bases of the
quotients M(a)/M(b), where M(v) is spanned by the monomials m with
nu(m) >= v componentwise.

All searches are breadth-first over generator sums, deduplicated by lattice
point, and pruned by a functional that strictly increases along every
generator used, so they terminate.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import InfiniteBasisError, InfiniteDimensionError, ValidationError
from .lattice import add, as_point, pair


@dataclass(frozen=True)
class FilterPredicate:
    """Monomials m with nu(m) >= lower and not nu(m) >= upper."""

    lower: tuple
    upper: tuple

    def __post_init__(self):
        if len(self.lower) != len(self.upper):
            raise ValidationError("lower and upper bounds differ in length")
        if any(a > b for a, b in zip(self.lower, self.upper)):
            raise ValidationError(f"lower {self.lower} is not <= upper {self.upper}")
        if self.lower == self.upper:
            raise ValidationError("lower == upper describes the zero quotient")

    def __call__(self, value):
        return all(x >= a for x, a in zip(value, self.lower)) and not all(
            x >= b for x, b in zip(value, self.upper)
        )


def _search(gens, dim, keep):
    """Breadth-first closure of the origin under the generators, expanding
    only points accepted by ``keep``.  Returns {point: generator length}."""
    origin = (0,) * dim
    if not keep(origin):
        return {}
    depth = {origin: 0}
    queue = deque([origin])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = add(x, g)
            if y not in depth and keep(y):
                depth[y] = depth[x] + 1
                queue.append(y)
    return depth


@lru_cache(maxsize=4096)
def _below(gens, weight_rows, caps):
    # points generated by ``gens`` with <w_k, m> <= caps[k] for every row k;
    # each generator must be positive on some row for termination
    dim = len(gens[0])

    def keep(m):
        return all(pair(w, m) <= c for w, c in zip(weight_rows, caps))

    return tuple(sorted(_search(gens, dim, keep).items()))


@lru_cache(maxsize=256)
def _up_to_length(gens, length):
    dim = len(gens[0])
    depth = {(0,) * dim: 0}
    frontier = [(0,) * dim]
    for k in range(1, length + 1):
        nxt = []
        for x in frontier:
            for g in gens:
                y = add(x, g)
                if y not in depth:
                    depth[y] = k
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(depth.items()))


def elements_up_to_degree(amb, bound):
    """Semigroup elements of generator length <= bound, as {point: length}.

    On affine space the generator length is the total degree.
    """
    if bound < 0:
        return {}
    return dict(_up_to_length(amb.generators, bound))


def lowest_length(amb, nus, v):
    """Smallest generator length of a monomial in M(v), or 0 if M(v) has none.

    A witness, when one exists, has length at most the sum of the positive
    entries of v, since each generator adds at least 1 to any valuation it
    does not kill.
    """
    v = as_point(v, len(nus))
    found = [k for m, k in elements_up_to_degree(amb, sum(max(c, 0) for c in v)).items()
             if all(a >= b for a, b in zip(nus.value(m), v))]
    return min(found, default=0)


def finiteness_check(amb, nus):
    """True iff every generator has positive value under some valuation; then
    every value fiber is finite."""
    return all(any(pair(nu, g) > 0 for nu in nus) for g in amb.generators)


def _split(amb, weight_rows):
    zero = tuple(g for g in amb.generators if all(pair(w, g) == 0 for w in weight_rows))
    rest = tuple(g for g in amb.generators if g not in zero)
    return zero, rest


def _fiber_candidates(amb, nus, v):
    gens = tuple(g for g in amb.generators if any(pair(nu, g) > 0 for nu in nus))
    if any(c < 0 for c in v) or not gens:
        return {(0,) * amb.dim: 0} if all(c == 0 for c in v) else {}
    rows = tuple(nu.weights for nu in nus)
    found = _below(gens, rows, tuple(v))
    return {m: d for m, d in found if nus.value(m) == tuple(v)}


def fiber_with_lengths(amb, nus, v):
    """{m: generator length} over the value fiber {m in S : nu(m) = v}."""
    v = as_point(v, len(nus))
    if not finiteness_check(amb, nus):
        raise InfiniteDimensionError(
            "some generator has value zero under every valuation; fibers are infinite",
            witness=_split(amb, nus.weights())[0][0], v=v,
        )
    return _fiber_candidates(amb, nus, v)


def enumerate_fiber(amb, nus, v):
    """Lexicographically sorted list of monomials with value vector exactly v."""
    return sorted(fiber_with_lengths(amb, nus, v))


def fiber_size(amb, nus, v):
    """|{m in S : nu(m) = v}|, deciding finiteness for this v alone.

    Unlike :func:`enumerate_fiber` this does not require the global
    finiteness check: with generators invisible to every valuation the fiber
    is either empty or infinite.
    """
    v = as_point(v, len(nus))
    if finiteness_check(amb, nus):
        return len(_fiber_candidates(amb, nus, v))
    zero, _ = _split(amb, nus.weights())
    if _fiber_candidates(amb, nus, v):
        raise InfiniteDimensionError(
            f"value fiber over {v} is infinite", witness=zero[0], v=v
        )
    return 0


def _piece(amb, nus, lower, j, cap):
    """Elements with nu(m) >= lower and nu_j(m) <= cap, or an
    InfiniteBasisError when that set is infinite."""
    if cap < 0:
        return []
    wj = nus[j].weights
    zero, rest = _split(amb, (wj,))
    if not zero:
        found = _below(rest, (wj,), (cap,))
        return [m for m, _ in found if all(x >= a for x, a in zip(nus.value(m), lower))]
    # Generators in ``zero`` can be added freely without leaving nu_j <= cap.
    # Coordinates they raise can always be pushed above the lower bound; the
    # others are fixed by the finitely many combinations of ``rest``.
    pumped = {k for k, nu in enumerate(nus) if any(pair(nu, z) > 0 for z in zero)}
    base = _below(rest, (wj,), (cap,)) if rest else (((0,) * amb.dim, 0),)
    for m, _ in base:
        val = nus.value(m)
        if all(val[k] >= lower[k] for k in range(len(nus)) if k not in pumped):
            raise InfiniteBasisError(
                f"quotient basis is unbounded along generator {zero[0]}",
                witness=zero[0], subset=(j,),
            )
    return []


def enumerate_quotient_basis(amb, nus, p: FilterPredicate, degree_bound=None):
    """Monomial basis of M(p.lower)/M(p.upper), sorted lexicographically.

    With ``degree_bound`` the basis is truncated to generator length
    <= degree_bound.  Without it, an infinite basis raises InfiniteBasisError.
    """
    r = len(nus)
    if len(p.lower) != r:
        raise ValidationError(f"bounds have length {len(p.lower)}, expected {r}")
    if degree_bound is not None:
        elems = elements_up_to_degree(amb, degree_bound)
        return sorted(m for m in elems if p(nus.value(m)))
    out = set()
    for j in range(r):
        if p.upper[j] > p.lower[j]:
            out.update(_piece(amb, nus, p.lower, j, p.upper[j] - 1))
    return sorted(out)


def dim_filtration_quotient(amb, nus, a, b):
    """dim M(a)/M(b) for a <= b, a != b."""
    return len(enumerate_quotient_basis(amb, nus, FilterPredicate(tuple(a), tuple(b))))
