"""Exact linear algebra over the rationals: rank of sparse matrices by
fraction-free elimination, homology dimensions of complexes, and an
incremental reduced echelon basis used for subspace computations.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from .errors import MalformedComplexError, ValidationError


@dataclass
class SparseMatrix:
    """rows x cols matrix with exact entries (int or Fraction) keyed by (i, j).

    Zero entries are never stored.
    """

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValidationError("negative matrix shape")
        clean = {}
        for (i, j), x in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ValidationError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            if x:
                clean[(i, j)] = x
        self.entries = clean

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, {(i, j): x for i, r in enumerate(rows) for j, x in enumerate(r) if x})

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, {})

    def to_dense(self):
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), x in self.entries.items():
            out[i][j] = x
        return out

    def transpose(self):
        return SparseMatrix(self.cols, self.rows, {(j, i): x for (i, j), x in self.entries.items()})

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValidationError(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        by_row = {}
        for (k, j), x in other.entries.items():
            by_row.setdefault(k, []).append((j, x))
        out = {}
        for (i, k), x in self.entries.items():
            for j, y in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + x * y
        return SparseMatrix(self.rows, other.cols, out)

    def is_zero(self):
        return not self.entries


def block_diagonal(a, b):
    ent = dict(a.entries)
    ent.update({(i + a.rows, j + a.cols): x for (i, j), x in b.entries.items()})
    return SparseMatrix(a.rows + b.rows, a.cols + b.cols, ent)


def _integer_rows(m):
    rows = {}
    for (i, j), x in m.entries.items():
        rows.setdefault(i, {})[j] = x
    out = []
    for r in rows.values():
        den = lcm(*(Fraction(x).denominator for x in r.values()))
        out.append({j: int(x * den) for j, x in r.items()})
    return out


def rank(m: SparseMatrix):
    """Rank over Q by Bareiss fraction-free elimination on integer rows.

    Rows with rational entries are first scaled to integers, which leaves the
    rank unchanged.  Pivots are taken column by column, preferring the row of
    smallest absolute pivot and then fewest nonzeros.
    """
    rows = _integer_rows(m)
    if not rows:
        return 0
    r = 0
    prev = 1
    for c in range(m.cols):
        best = None
        for i in range(r, len(rows)):
            x = rows[i].get(c)
            if x:
                key = (abs(x), len(rows[i]))
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            continue
        i = best[1]
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        p = prow[c]
        for i in range(r + 1, len(rows)):
            row = rows[i]
            x = row.pop(c, 0)
            new = {}
            for k in set(row) | set(prow):
                if k <= c:
                    continue
                val = p * row.get(k, 0) - x * prow.get(k, 0)
                if val:
                    q, rem = divmod(val, prev)
                    assert rem == 0
                    new[k] = q
            rows[i] = new
        # entries of the pivot row past this column are never divided again;
        # keep them as they are
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def homology_dims(boundaries, dims=None):
    """Dimensions h_0..h_n of a complex C_n -> ... -> C_0.

    ``boundaries[i-1]`` is the matrix of d_i : C_i -> C_{i-1} (shape
    dim C_{i-1} x dim C_i).  ``dims`` gives dim C_0..dim C_n and is only
    needed when there are no boundaries.  Raises MalformedComplexError when
    a composite d_i d_{i+1} is nonzero.
    """
    boundaries = list(boundaries)
    if dims is None:
        if not boundaries:
            raise ValidationError("need dims when no boundaries are given")
        dims = [boundaries[0].rows] + [b.cols for b in boundaries]
    dims = list(dims)
    if len(dims) != len(boundaries) + 1:
        raise ValidationError("need one more space than boundary maps")
    for i, b in enumerate(boundaries, start=1):
        if (b.rows, b.cols) != (dims[i - 1], dims[i]):
            raise ValidationError(
                f"d_{i} has shape {b.rows}x{b.cols}, expected {dims[i - 1]}x{dims[i]}"
            )
    for i in range(1, len(boundaries)):
        if not (boundaries[i - 1] @ boundaries[i]).is_zero():
            raise MalformedComplexError(f"d_{i} o d_{i + 1} is not zero")
    ranks = [0] + [rank(b) for b in boundaries] + [0]
    return [dims[i] - ranks[i] - ranks[i + 1] for i in range(len(dims))]


class Echelon:
    """Incrementally built reduced row echelon basis of a subspace of Q^n.

    Vectors are sparse dicts {column: Fraction}.  Every stored row has a 1 in
    its pivot column and zeros in all other pivot columns, so reducing a
    vector needs one pass and the coordinates of a vector of the span are
    its entries at the pivot columns.
    """

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        vec = {k: Fraction(x) for k, x in vec.items() if x}
        for c in [c for c in vec if c in self.rows]:
            x = vec.get(c)
            if not x:
                continue
            for k, y in self.rows[c].items():
                val = vec.get(k, 0) - x * y
                if val:
                    vec[k] = val
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec):
        """Insert vec; return True if it enlarged the span."""
        vec = self.reduce(vec)
        if not vec:
            return False
        c = min(vec)
        inv = 1 / vec[c]
        vec = {k: x * inv for k, x in vec.items()}
        for row in self.rows.values():
            x = row.get(c)
            if x:
                for k, y in vec.items():
                    val = row.get(k, 0) - x * y
                    if val:
                        row[k] = val
                    else:
                        row.pop(k, None)
        self.rows[c] = vec
        return True

    def pivots(self):
        return sorted(self.rows)

    def basis(self):
        return [self.rows[c] for c in self.pivots()]

    def coordinates(self, vec):
        """Coordinates of ``vec`` (assumed in the span) along basis()."""
        return [vec.get(c, 0) for c in self.pivots()]
