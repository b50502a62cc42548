"""Exact rational linear algebra on small dense matrices.

Scalars are ``fractions.Fraction`` throughout: arbitrary-precision
numerators, positive denominators, always in lowest terms, never any
rounding.  Every algebraic identity checked by the rest of the package is
a polynomial identity in structure constants, so equality tests here are
meaningful in a way they would not be over floats.

Determinants and the forward pass of solve/invert use fraction-free
(Bareiss) elimination over integers after clearing denominators row by
row; intermediate entries stay integral, which keeps coefficient growth
polynomial instead of exponential.
"""

from fractions import Fraction
from math import lcm
from typing import NamedTuple

from .errors import BadRational, DimensionMismatch, SingularMatrix

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# Accepted minus signs in rational literals: ASCII hyphen and U+2212.
_MINUS = ("-", "−")


def rational(value) -> Fraction:
    """Coerce an int, Fraction or literal string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError("not an exact rational: %r" % (value,))


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (optionally signed); reject zero denominators."""
    s = text.strip()
    negative = False
    while s[:1] in _MINUS:
        negative = not negative
        s = s[1:].strip()
    num, slash, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if slash else 1
    except ValueError:
        raise BadRational("not a rational literal: %r" % (text,)) from None
    if q == 0:
        raise BadRational("zero denominator in %r" % (text,))
    value = Fraction(p, q)
    return -value if negative else value


def format_rational(value: Fraction) -> str:
    """Inverse of parse_rational; omits the denominator when it is 1."""
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


# ---------------------------------------------------------------------------
# vectors: plain tuples of Fractions
# ---------------------------------------------------------------------------

def vector(values):
    return tuple(rational(v) for v in values)


def zero_vector(n):
    return (ZERO,) * n


def basis_vector(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_is_zero(u):
    return all(a == 0 for a in u)


# ---------------------------------------------------------------------------
# skew-index canonicalization
# ---------------------------------------------------------------------------

class SkewSlot(NamedTuple):
    indices: tuple
    sign: int


def skew_canon(indices, dim=None) -> SkewSlot:
    """Sort indices, returning the permutation sign; sign 0 on any repeat.

    With ``dim`` given, indices outside range(dim) raise IndexError.
    """
    idx = tuple(indices)
    if dim is not None:
        for i in idx:
            if not 0 <= i < dim:
                raise IndexError("basis index %d out of range [0, %d)" % (i, dim))
    if len(set(idx)) != len(idx):
        return SkewSlot(idx, 0)
    # count inversions; fine at these arities
    sign = 1
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            if idx[a] > idx[b]:
                sign = -sign
    return SkewSlot(tuple(sorted(idx)), sign)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Matrix:
    """Immutable dense matrix of Fractions, row-major storage."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(rational(e) for e in entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                "need %d entries for %dx%d, got %d"
                % (rows * cols, rows, cols, len(entries)))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(n, m, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [ONE if i == j else ZERO
                          for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def from_columns(cls, columns):
        return cls.from_rows(list(zip(*columns))) if columns else cls(0, 0, [])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                "shape %dx%d vs %dx%d"
                % (self.rows, self.cols, other.rows, other.cols))

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c):
        c = rational(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise DimensionMismatch(
                "cannot multiply %dx%d by %dx%d"
                % (self.rows, self.cols, other.rows, other.cols))
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum((ri[k] * other.entries[k * other.cols + j]
                                for k in range(self.cols)), ZERO))
        return Matrix(self.rows, other.cols, out)

    def apply(self, vec):
        if len(vec) != self.cols:
            raise DimensionMismatch(
                "matrix is %dx%d, vector has length %d"
                % (self.rows, self.cols, len(vec)))
        return tuple(sum((a * b for a, b in zip(self.row(i), vec)), ZERO)
                     for i in range(self.rows))

    def transpose(self):
        return Matrix(self.cols, self.rows,
                      [self[i, j] for j in range(self.cols)
                       for i in range(self.rows)])

    def is_zero(self):
        return all(e == 0 for e in self.entries)

    def is_square(self):
        return self.rows == self.cols

    def __repr__(self):
        body = "; ".join(
            " ".join(format_rational(e) for e in self.row(i))
            for i in range(self.rows))
        return "Matrix(%dx%d: %s)" % (self.rows, self.cols, body)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


# ---------------------------------------------------------------------------
# fraction-free elimination
# ---------------------------------------------------------------------------

def _integer_rows(matrix, extra=None):
    """Clear denominators row by row; returns (int rows, row scale factors).

    ``extra`` appends additional columns (e.g. the right-hand side) that
    get scaled together with their row, so solution sets are unchanged.
    """
    out, scales = [], []
    for i in range(matrix.rows):
        row = list(matrix.row(i))
        if extra is not None:
            row.extend(extra[i])
        s = lcm(*(f.denominator for f in row)) if row else 1
        out.append([int(f * s) for f in row])
        scales.append(s)
    return out, scales


def _bareiss(rows, pivot_cols_limit):
    """Fraction-free forward elimination in place.

    Returns (pivot column list, permutation sign).  Entries stay integral:
    each 2x2-determinant step divides exactly by the previous pivot.
    """
    n = len(rows)
    width = len(rows[0]) if n else 0
    prev = 1
    sign = 1
    r = 0
    pivots = []
    for c in range(min(pivot_cols_limit, width)):
        p = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            sign = -sign
        pc = rows[r][c]
        for i in range(r + 1, n):
            ric = rows[i][c]
            for j in range(c + 1, width):
                rows[i][j] = (pc * rows[i][j] - ric * rows[r][j]) // prev
            rows[i][c] = 0
        prev = pc
        pivots.append(c)
        r += 1
        if r == n:
            break
    return pivots, sign


def det(matrix: Matrix) -> Fraction:
    """Exact determinant by fraction-free elimination."""
    if not matrix.is_square():
        raise DimensionMismatch("determinant needs a square matrix")
    n = matrix.rows
    if n == 0:
        return ONE
    rows, scales = _integer_rows(matrix)
    pivots, sign = _bareiss(rows, n)
    if len(pivots) < n:
        return ZERO
    scale = 1
    for s in scales:
        scale *= s
    return Fraction(sign * rows[n - 1][pivots[-1]], scale)


def _back_substitute(rows, pivots, rhs_col, n):
    """Solve the echelon system for one appended right-hand-side column."""
    x = [ZERO] * n
    for k in range(n - 1, -1, -1):
        c = pivots[k]
        acc = Fraction(rows[k][rhs_col])
        for j in range(c + 1, n):
            acc -= rows[k][j] * x[j]
        x[c] = acc / rows[k][c]
    return tuple(x)


def solve_linear(matrix: Matrix, b) -> tuple:
    """Unique exact solution of Mx = b; SingularMatrix when det = 0."""
    if not matrix.is_square():
        raise DimensionMismatch("solve_linear needs a square matrix")
    n = matrix.rows
    b = vector(b)
    if len(b) != n:
        raise DimensionMismatch("rhs length %d != %d" % (len(b), n))
    if n == 0:
        return ()
    rows, _ = _integer_rows(matrix, extra=[[bi] for bi in b])
    pivots, _ = _bareiss(rows, n)
    if len(pivots) < n:
        raise SingularMatrix("coefficient matrix is singular")
    return _back_substitute(rows, pivots, n, n)


def invert(matrix: Matrix) -> Matrix:
    """Exact inverse; M @ invert(M) is the identity on the nose."""
    if not matrix.is_square():
        raise DimensionMismatch("invert needs a square matrix")
    n = matrix.rows
    if n == 0:
        return Matrix(0, 0, [])
    eye = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    rows, _ = _integer_rows(matrix, extra=eye)
    pivots, _ = _bareiss(rows, n)
    if len(pivots) < n:
        raise SingularMatrix("matrix is singular")
    cols = [_back_substitute(rows, pivots, n + j, n) for j in range(n)]
    return Matrix.from_columns(cols)


def kernel_basis(matrix: Matrix):
    """Basis of the exact nullspace {x : Mx = 0}."""
    n = matrix.cols
    if matrix.rows == 0:
        return [basis_vector(n, j) for j in range(n)]
    rows, _ = _integer_rows(matrix)
    pivots, _ = _bareiss(rows, n)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = []
    for fc in free:
        x = [ZERO] * n
        x[fc] = ONE
        for k in range(len(pivots) - 1, -1, -1):
            c = pivots[k]
            acc = ZERO
            for j in range(c + 1, n):
                acc += rows[k][j] * x[j]
            x[c] = -acc / rows[k][c]
        basis.append(tuple(x))
    return basis
