"""Dense linear algebra over the rationals.

Entries are :class:`fractions.Fraction`, so every operation is exact.
Elimination always pivots on the first nonzero entry of a column, which
makes kernels, images and homology bases reproducible run to run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


def vector(values: Iterable) -> Vector:
    return tuple(_frac(x) for x in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def is_zero(v: Sequence) -> bool:
    return not any(v)


class Matrix:
    """Immutable rows x cols matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(_frac(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows: expected %d columns, got %d" % (ncols, len(r)))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _trusted(cls, rows: tuple, nrows: int, ncols: int) -> "Matrix":
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "nrows", nrows)
        object.__setattr__(m, "ncols", ncols)
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls._trusted(tuple((ZERO,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        rows = tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
        return cls._trusted(rows, n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        columns = [vector(c) for c in columns]
        for c in columns:
            if len(c) != nrows:
                raise ValueError("column of length %d, expected %d" % (len(c), nrows))
        rows = tuple(tuple(c[i] for c in columns) for i in range(nrows))
        return cls._trusted(rows, nrows, len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "Matrix":
        rows = tuple(tuple(self.rows[i][j] for i in range(self.nrows)) for j in range(self.ncols))
        return Matrix._trusted(rows, self.ncols, self.nrows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square %dx%d matrix" % self.shape)
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise ValueError("vector of length %d, matrix has %d columns" % (len(v), self.ncols))
        nz = [(j, x) for j, x in enumerate(v) if x]
        out = []
        for r in self.rows:
            acc = ZERO
            for j, x in nz:
                a = r[j]
                if a:
                    acc += a * x
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        n = other.ncols
        out = []
        for r in self.rows:
            acc = [ZERO] * n
            for k, a in enumerate(r):
                if a:
                    brow = other.rows[k]
                    for j in range(n):
                        b = brow[j]
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._trusted(tuple(out), self.nrows, n)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s + %s" % (self.shape, other.shape))
        rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return Matrix._trusted(rows, self.nrows, self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix._trusted(tuple(tuple(-a for a in r) for r in self.rows), self.nrows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix._trusted(tuple(tuple(c * a for a in r) for r in self.rows), self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.nrows, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return "Matrix(%dx%d: [%s])" % (self.nrows, self.ncols, body)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.rows]


def _eliminate(rows: list[list[Fraction]], pivot_cols: int) -> list[int]:
    """Reduce ``rows`` in place to RREF, pivoting only in columns < pivot_cols.

    Row operations are applied across the full width, so trailing columns
    behave as right-hand sides. Returns the pivot columns in row order.
    """
    pivots: list[int] = []
    nrows = len(rows)
    r = 0
    for c in range(pivot_cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = rows[r] = [x * inv for x in prow]
        nz = [j for j, x in enumerate(prow) if x]
        for i in range(nrows):
            if i != r:
                a = rows[i][c]
                if a:
                    row = rows[i]
                    for j in nz:
                        row[j] -= a * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    rows = [list(r) for r in M.rows]
    pivots = _eliminate(rows, M.ncols)
    return Matrix._trusted(tuple(tuple(r) for r in rows), M.nrows, M.ncols), pivots


@dataclass(frozen=True)
class Decomposition:
    rank: int
    pivot_cols: tuple[int, ...]
    kernel_basis: tuple[Vector, ...]
    image_basis: tuple[Vector, ...]


def rref_decompose(M: Matrix) -> Decomposition:
    """Rank, pivot columns, a null-space basis and a column-space basis of M.

    The kernel basis has one vector per free column (that coordinate set to 1);
    the image basis is the pivot columns of M itself.
    """
    R, pivots = rref(M)
    pivot_set = set(pivots)
    kernel = []
    for j in range(M.ncols):
        if j in pivot_set:
            continue
        x = [ZERO] * M.ncols
        x[j] = ONE
        for i, p in enumerate(pivots):
            x[p] = -R.rows[i][j]
        kernel.append(tuple(x))
    image = tuple(M.column(p) for p in pivots)
    return Decomposition(len(pivots), tuple(pivots), tuple(kernel), image)


def rank(M: Matrix) -> int:
    rows = [list(r) for r in M.rows]
    return len(_eliminate(rows, M.ncols))


def rank_of_vectors(vectors: Sequence[Sequence], dim: int) -> int:
    if not vectors:
        return 0
    return rank(Matrix.from_columns(vectors, dim))


def solve_modulo_many(
    targets: Sequence[Sequence], B: Sequence[Sequence], Q: Sequence[Sequence], dim: int | None = None
) -> list[Vector | None]:
    """Solve v = sum c_i B_i (mod span Q) for each v in ``targets``.

    One elimination serves all right-hand sides. Entries are coefficient
    tuples on B, or None where v is not in span(B) + span(Q). Free
    coordinates are set to zero, so the answer is the unique one whenever
    B is independent modulo span(Q).
    """
    if dim is None:
        for group in (targets, B, Q):
            if group:
                dim = len(group[0])
                break
        else:
            return []
    for v in list(targets) + list(B) + list(Q):
        if len(v) != dim:
            raise ValueError("vector of length %d in a system of dimension %d" % (len(v), dim))
    basis = [vector(b) for b in B] + [vector(q) for q in Q]
    nb = len(B)
    m = len(basis)
    tv = [vector(t) for t in targets]
    rows = [[b[i] for b in basis] + [t[i] for t in tv] for i in range(dim)]
    pivots = _eliminate(rows, m)
    r = len(pivots)
    out: list[Vector | None] = []
    for k in range(len(tv)):
        col = m + k
        if any(rows[i][col] for i in range(r, dim)):
            out.append(None)
            continue
        x = [ZERO] * m
        for i, p in enumerate(pivots):
            x[p] = rows[i][col]
        out.append(tuple(x[:nb]))
    return out


class ModuloSolver:
    """solve_modulo against a fixed (B, Q), factored once.

    Eliminating [B | Q | I] records the row operations E, so each new
    right-hand side costs one matrix-vector product.
    """

    def __init__(self, B: Sequence[Sequence], Q: Sequence[Sequence], dim: int):
        basis = [vector(b) for b in B] + [vector(q) for q in Q]
        for v in basis:
            if len(v) != dim:
                raise ValueError("vector of length %d in a system of dimension %d" % (len(v), dim))
        m = len(basis)
        rows = [[b[i] for b in basis] + [ONE if j == i else ZERO for j in range(dim)] for i in range(dim)]
        self.pivots = _eliminate(rows, m)
        self.nb = len(B)
        self.m = m
        self.dim = dim
        self.E = [tuple(r[m:]) for r in rows]

    def solve(self, v: Sequence) -> Vector | None:
        if len(v) != self.dim:
            raise ValueError("vector of length %d in a system of dimension %d" % (len(v), self.dim))
        nz = [(j, x) for j, x in enumerate(v) if x]

        def row(i):
            acc = ZERO
            for j, x in nz:
                a = self.E[i][j]
                if a:
                    acc += a * x
            return acc

        r = len(self.pivots)
        if any(row(i) for i in range(r, self.dim)):
            return None
        x = [ZERO] * self.m
        for i, p in enumerate(self.pivots):
            x[p] = row(i)
        return tuple(x[: self.nb])


def solve_modulo(v: Sequence, B: Sequence[Sequence], Q: Sequence[Sequence]) -> Vector | None:
    """Coefficients c with v - sum c_i B_i in span(Q), or None if unsolvable."""
    return solve_modulo_many([v], B, Q, dim=len(v))[0]


def in_span(v: Sequence, Q: Sequence[Sequence]) -> bool:
    if is_zero(v):
        return True
    return solve_modulo(v, Q, []) is not None


def det(M: Matrix) -> Fraction:
    if not M.is_square():
        raise ValueError("determinant of a non-square %dx%d matrix" % M.shape)
    n = M.nrows
    rows = [list(r) for r in M.rows]
    d = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        piv = rows[c][c]
        d *= piv
        for i in range(c + 1, n):
            a = rows[i][c]
            if a:
                f = a / piv
                ri, rc = rows[i], rows[c]
                for j in range(c, n):
                    ri[j] -= f * rc[j]
    return d


def column_basis(vectors: Sequence[Sequence], dim: int) -> list[Vector]:
    """The subset of ``vectors`` picked by first-pivot elimination."""
    if not vectors:
        return []
    M = Matrix.from_columns(vectors, dim)
    return [M.column(p) for p in rref_decompose(M).pivot_cols]


def restricted_trace(T: Matrix, spanning: Sequence[Sequence]) -> Fraction | None:
    """Trace of T on the T-invariant subspace spanned by ``spanning``.

    Returns None if the subspace is not invariant.
    """
    basis = column_basis(spanning, T.ncols)
    if not basis:
        return ZERO
    coords = solve_modulo_many([T.apply(b) for b in basis], basis, [], dim=T.ncols)
    if any(c is None for c in coords):
        return None
    return sum((coords[i][i] for i in range(len(basis))), ZERO)
