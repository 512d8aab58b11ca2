"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always in lowest terms, positive
denominator).  Vectors are tuples of Fractions; matrices are immutable
row-major :class:`Matrix` values.  Hot loops elsewhere in the package work on
*sparse* vectors, plain ``dict[int, Fraction]`` with zero entries omitted;
the helpers here convert between the two.

Every reduction goes through one incremental RREF routine so that bases are
canonical: pivots normalised to 1, free variables in ascending order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import DimMismatch, NotASubspace, ParseError

Q = Fraction
Vector = tuple  # tuple[Fraction, ...]
Sparse = dict  # dict[int, Fraction], zeros omitted

_RATIONAL_RE = re.compile(r"^([+-]?)(\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]integer[/positive integer]``; anything else is a ParseError."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    sign, num, den = m.groups()
    den = int(den) if den is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    value = Fraction(int(num), den)
    return -value if sign == "-" else value


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, str or Fraction")
    return Fraction(x)


# ---------------------------------------------------------------------------
# vectors


def vector(values: Iterable) -> Vector:
    return tuple(as_q(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Q(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Q(0)] * n
    v[i] = Q(1)
    return tuple(v)


def to_sparse(v: Sequence) -> Sparse:
    return {i: x for i, x in enumerate(v) if x}


def from_sparse(s: Sparse, n: int) -> Vector:
    v = [Q(0)] * n
    for i, x in s.items():
        v[i] = x
    return tuple(v)


def sparse_axpy(acc: Sparse, coeff, s: Sparse) -> None:
    """acc += coeff * s, in place, dropping cancelled entries."""
    if not coeff:
        return
    for i, x in s.items():
        y = acc.get(i, 0) + coeff * x
        if y:
            acc[i] = y
        else:
            acc.pop(i, None)


def sparse_sub(a: Sparse, b: Sparse) -> Sparse:
    out = dict(a)
    sparse_axpy(out, -1, b)
    return out


def is_zero_vector(v) -> bool:
    return not any(v)


# ---------------------------------------------------------------------------
# multi-indices (row-major, first factor most significant)


def linearize(digits: Sequence[int], dim: int) -> int:
    idx = 0
    for t in digits:
        idx = idx * dim + t
    return idx


def delinearize(index: int, dim: int, arity: int) -> tuple:
    digits = [0] * arity
    for pos in range(arity - 1, -1, -1):
        index, digits[pos] = divmod(index, dim)
    return tuple(digits)


def multi_indices(dims, arity: int | None = None):
    """All index tuples in ascending linearization order.

    ``dims`` is either a single dimension (then ``arity`` is required) or a
    sequence of per-slot dimensions.
    """
    if arity is not None:
        dims = (dims,) * arity
    return product(*(range(d) for d in dims))


@dataclass(frozen=True)
class MultiIndex:
    arity: int
    dim: int
    digits: tuple

    def __post_init__(self):
        if len(self.digits) != self.arity:
            raise DimMismatch("digits length must equal arity")
        if any(not 0 <= t < self.dim for t in self.digits):
            raise DimMismatch("digit out of range")

    @property
    def index(self) -> int:
        return linearize(self.digits, self.dim)

    @classmethod
    def from_index(cls, index: int, dim: int, arity: int) -> "MultiIndex":
        return cls(arity, dim, delinearize(index, dim, arity))


def tensor_sparse(factors: Sequence[Sparse], dim: int) -> Sparse:
    """Coordinates of f_1 ⊗ … ⊗ f_r in the row-major basis of (K^dim)^⊗r."""
    out: Sparse = {0: Q(1)}
    for f in factors:
        nxt: Sparse = {}
        for i, a in out.items():
            base = i * dim
            for j, b in f.items():
                nxt[base + j] = a * b
        out = nxt
        if not out:
            break
    return out


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # constructors -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimMismatch("ragged rows")
        return cls(len(rows), cols, tuple(as_q(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = len(columns)
        data = [Q(0)] * (rows * cols)
        for c, col in enumerate(columns):
            if len(col) != rows:
                raise DimMismatch("column length mismatch")
            for r, x in enumerate(col):
                data[r * cols + c] = as_q(x)
        return cls(rows, cols, tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Q(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        data = [Q(0)] * (n * n)
        for i, x in enumerate(values):
            data[i * n + i] = as_q(x)
        return cls(n, n, tuple(data))

    @classmethod
    def from_flat(cls, v: Sequence, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(as_q(x) for x in v))

    # access -----------------------------------------------------------
    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vector:
        return self.entries[r * self.cols:(r + 1) * self.cols]

    def column(self, c: int) -> Vector:
        return self.entries[c::self.cols]

    def to_rows(self) -> list:
        return [list(self.row(r)) for r in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_identity(self) -> bool:
        return self.is_square and self == Matrix.identity(self.rows)

    @cached_property
    def sparse_columns(self) -> tuple:
        cols = [dict() for _ in range(self.cols)]
        for k, x in enumerate(self.entries):
            if x:
                r, c = divmod(k, self.cols)
                cols[c][r] = x
        return tuple(cols)

    # arithmetic -------------------------------------------------------
    def apply_sparse(self, s: Sparse) -> Sparse:
        out: Sparse = {}
        cols = self.sparse_columns
        for j, x in s.items():
            sparse_axpy(out, x, cols[j])
        return out

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimMismatch(f"vector of length {len(v)} for {self.cols} columns")
        return from_sparse(self.apply_sparse(to_sparse(v)), self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimMismatch(f"cannot multiply {self.shape} by {other.shape}")
            out = [Q(0)] * (self.rows * other.cols)
            for i in range(self.rows):
                row = self.row(i)
                for k, a in enumerate(row):
                    if not a:
                        continue
                    brow = other.row(k)
                    base = i * other.cols
                    for j, b in enumerate(brow):
                        if b:
                            out[base + j] += a * b
            return Matrix(self.rows, other.cols, tuple(out))
        return self.apply(other)

    def _check_same(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix(self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __rmul__(self, scalar) -> "Matrix":
        s = as_q(scalar)
        return Matrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    def transpose(self) -> "Matrix":
        return Matrix.from_columns([self.row(r) for r in range(self.rows)], self.cols)

    def power(self, k: int) -> "Matrix":
        if not self.is_square:
            raise DimMismatch("power of a non-square matrix")
        out = Matrix.identity(self.rows)
        for _ in range(k):
            out = out @ self
        return out

    def kron(self, other: "Matrix") -> "Matrix":
        rows, cols = self.rows * other.rows, self.cols * other.cols
        out = [Q(0)] * (rows * cols)
        for (i, j) in product(range(self.rows), range(self.cols)):
            a = self[i, j]
            if not a:
                continue
            for (p, q) in product(range(other.rows), range(other.cols)):
                out[(i * other.rows + p) * cols + j * other.cols + q] = a * other[p, q]
        return Matrix(rows, cols, tuple(out))

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def flat(self) -> Vector:
        return self.entries

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in self.row(r))
                         for r in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}: {body})"


def kron_power(m: Matrix, n: int) -> Matrix:
    out = Matrix.identity(1)
    for _ in range(n):
        out = out.kron(m)
    return out


# ---------------------------------------------------------------------------
# reduction


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Rows are sparse dicts.  After every :meth:`add`, ``pivots`` maps each
    pivot column to a row whose pivot entry is 1 and which is zero in every
    other pivot column.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict = {}

    def reduce(self, row: Sparse) -> Sparse:
        row = {k: v for k, v in row.items() if v}
        for col in sorted(set(row) & set(self.pivots)):
            c = row.get(col)
            if c:
                sparse_axpy(row, -c, self.pivots[col])
        return row

    def add(self, row: Sparse) -> bool:
        """Insert a row; return True iff it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        inv = 1 / row[lead]
        row = {k: v * inv for k, v in row.items()}
        for other in self.pivots.values():
            c = other.get(lead)
            if c:
                sparse_axpy(other, -c, row)
        self.pivots[lead] = row
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def contains(self, row: Sparse) -> bool:
        return not self.reduce(row)

    def rows(self) -> list:
        return [self.pivots[c] for c in sorted(self.pivots)]


def _echelon_of(rows: Iterable, ncols: int) -> Echelon:
    ech = Echelon(ncols)
    for r in rows:
        ech.add(to_sparse(r) if not isinstance(r, dict) else r)
    return ech


def matrix_rows_sparse(m: Matrix):
    for r in range(m.rows):
        yield to_sparse(m.row(r))


def rref(m: Matrix) -> tuple:
    """Return (pivot columns, reduced nonzero rows as vectors)."""
    ech = _echelon_of(matrix_rows_sparse(m), m.cols)
    piv = sorted(ech.pivots)
    return piv, [from_sparse(ech.pivots[c], m.cols) for c in piv]


def nullspace_of_rows(rows: Iterable, ncols: int) -> list:
    """Kernel basis of the matrix whose (sparse or dense) rows are given."""
    ech = _echelon_of(rows, ncols)
    pivots = ech.pivots
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Q(0)] * ncols
        v[free] = Q(1)
        for pc, prow in pivots.items():
            c = prow.get(free)
            if c:
                v[pc] = -c
        basis.append(tuple(v))
    return basis


def nullspace(m: Matrix) -> list:
    """Basis of {v : m v = 0}, one vector per free column in ascending order."""
    return nullspace_of_rows(matrix_rows_sparse(m), m.cols)


def rank(m: Matrix) -> int:
    return _echelon_of(matrix_rows_sparse(m), m.cols).rank


def rank_and_image(m: Matrix) -> tuple:
    """(rank, pivot columns of ``m`` in original order)."""
    piv, _ = rref(m)
    return len(piv), [m.column(c) for c in piv]


def span_rank(vectors: Sequence) -> int:
    if not vectors:
        return 0
    return _echelon_of(vectors, len(vectors[0])).rank


def independent_subset(vectors: Sequence) -> list:
    """Indices of the vectors that extend the span, scanning in order."""
    if not vectors:
        return []
    ech = Echelon(len(vectors[0]))
    return [i for i, v in enumerate(vectors) if ech.add(to_sparse(v))]


def subspace_membership(v: Sequence, basis: Sequence) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    if any(len(b) != len(v) for b in basis):
        raise DimMismatch("vectors of different lengths")
    return _echelon_of(basis, len(v)).contains(to_sparse(v))


def quotient_dimension(z_basis: Sequence, b_basis: Sequence) -> int:
    """dim span(Z) - dim span(B); B must lie inside span(Z)."""
    if b_basis:
        ncols = len(b_basis[0])
        ech = _echelon_of(z_basis, ncols)
        for i, v in enumerate(b_basis):
            if not ech.contains(to_sparse(v)):
                raise NotASubspace(f"B vector #{i} is outside span(Z)")
        return ech.rank - span_rank(b_basis)
    return span_rank(z_basis)


def coordinates_in(v: Sequence, basis: Sequence):
    """Coefficients c with sum c_i basis_i = v, or None when v is outside the span.

    ``basis`` must be linearly independent.
    """
    if not basis:
        return () if not any(v) else None
    cols = Matrix.from_columns(basis, len(v))
    return solve(cols, v)


def solve(m: Matrix, b: Sequence):
    """Least-index solution of m x = b (free variables set to 0), or None."""
    if len(b) != m.rows:
        raise DimMismatch("right-hand side length mismatch")
    n = m.cols
    ech = Echelon(n + 1)
    for r in range(m.rows):
        row = to_sparse(m.row(r))
        if b[r]:
            row[n] = as_q(b[r])
        ech.add(row)
    if n in ech.pivots:
        return None
    x = [Q(0)] * n
    for pc, prow in ech.pivots.items():
        x[pc] = prow.get(n, Q(0))
    return tuple(x)


def matrix_of_linear_map(fn, n_in: int, n_out: int) -> Matrix:
    """Matrix whose j-th column is fn(e_j); fn returns a sparse vector."""
    cols = []
    for j in range(n_in):
        cols.append(from_sparse(fn(j), n_out))
    return Matrix.from_columns(cols, n_out)
