"""Exact dense linear algebra over Q(sqrt(d)).

Everything here is plain Gaussian elimination over an exact field plus a
division-free characteristic polynomial (Berkowitz).  Matrices act on
column vectors; the matrix of a linear map has the images of the basis
vectors as its columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

from .polynomials import Polynomial
from .scalars import ONE, ZERO, Scalar

__all__ = [
    "Vector",
    "Matrix",
    "LinearSolution",
    "solve_linear",
    "kernel",
    "rank",
    "charpoly",
    "eval_poly_at_matrix",
    "express_in_span",
    "RowSpan",
]

Entry = Union[Scalar, int, str]


class Vector:
    """Immutable coordinate vector."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Entry]):
        object.__setattr__(self, "entries", tuple(Scalar.of(e) for e in entries))

    def __setattr__(self, *_):
        raise AttributeError("Vector is immutable")

    @staticmethod
    def zero(n: int) -> Vector:
        return Vector([ZERO] * n)

    @staticmethod
    def unit(n: int, i: int) -> Vector:
        return Vector([ONE if j == i else ZERO for j in range(n)])

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i: int) -> Scalar:
        return self.entries[i]

    def __add__(self, other: Vector) -> Vector:
        return Vector([a + b for a, b in zip(self.entries, other.entries, strict=True)])

    def __sub__(self, other: Vector) -> Vector:
        return Vector([a - b for a, b in zip(self.entries, other.entries, strict=True)])

    def __neg__(self) -> Vector:
        return Vector([-a for a in self.entries])

    def __mul__(self, s) -> Vector:
        s = Scalar.of(s)
        return Vector([a * s for a in self.entries])

    __rmul__ = __mul__

    def dot(self, other: Vector) -> Scalar:
        acc = ZERO
        for a, b in zip(self.entries, other.entries, strict=True):
            acc = acc + a * b
        return acc

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self) -> str:
        return "Vector[" + ", ".join(str(e) for e in self.entries) + "]"


class Matrix:
    """Immutable rectangular matrix of Scalars."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[Entry]]):
        grid = tuple(tuple(Scalar.of(e) for e in row) for row in entries)
        if grid and any(len(r) != len(grid[0]) for r in grid):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "entries", grid)
        object.__setattr__(self, "rows", len(grid))
        object.__setattr__(self, "cols", len(grid[0]) if grid else 0)

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def identity(n: int) -> Matrix:
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(r: int, c: int) -> Matrix:
        return Matrix([[ZERO] * c for _ in range(r)])

    @staticmethod
    def from_columns(cols: Sequence[Vector]) -> Matrix:
        if not cols:
            return Matrix([])
        n = len(cols[0])
        return Matrix([[col[i] for col in cols] for i in range(n)])

    @staticmethod
    def from_rows(rows: Sequence[Vector]) -> Matrix:
        return Matrix([list(r) for r in rows])

    @staticmethod
    def unit(n: int, i: int, j: int, value: Entry = 1) -> Matrix:
        """n x n matrix with a single entry at (i, j), zero-indexed."""
        e = [[ZERO] * n for _ in range(n)]
        e[i][j] = Scalar.of(value)
        return Matrix(e)

    @staticmethod
    def diagonal(values: Sequence[Entry]) -> Matrix:
        n = len(values)
        e = [[ZERO] * n for _ in range(n)]
        for i, v in enumerate(values):
            e[i][i] = Scalar.of(v)
        return Matrix(e)

    # -- access -------------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        return self.entries[ij[0]][ij[1]]

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i])

    def column(self, j: int) -> Vector:
        return Vector([self.entries[i][j] for i in range(self.rows)])

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def flatten(self) -> Vector:
        return Vector([e for row in self.entries for e in row])

    @staticmethod
    def unflatten(v: Vector, rows: int, cols: int) -> Matrix:
        if len(v) != rows * cols:
            raise ValueError("length mismatch in unflatten")
        return Matrix([[v[i * cols + j] for j in range(cols)] for i in range(rows)])

    # -- arithmetic ------------------------------------------------------------------

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> Matrix:
        return Matrix([[-a for a in row] for row in self.entries])

    def _same_shape(self, other: Matrix) -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    def scale(self, s: Entry) -> Matrix:
        s = Scalar.of(s)
        return Matrix([[a * s for a in row] for row in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def matmul(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        bt = [[other.entries[k][j] for k in range(other.rows)] for j in range(other.cols)]
        out = []
        for row in self.entries:
            out_row = []
            for col in bt:
                acc = ZERO
                for a, b in zip(row, col):
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def __matmul__(self, other: Matrix) -> Matrix:
        return self.matmul(other)

    def apply(self, v: Vector) -> Vector:
        if self.cols != len(v):
            raise ValueError(f"cannot apply {self.rows}x{self.cols} to length-{len(v)} vector")
        out = []
        for row in self.entries:
            acc = ZERO
            for a, b in zip(row, v):
                if not (a.is_zero() or b.is_zero()):
                    acc = acc + a * b
            out.append(acc)
        return Vector(out)

    def transpose(self) -> Matrix:
        return Matrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def trace(self) -> Scalar:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def commutator(self, other: Matrix) -> Matrix:
        return self @ other - other @ self

    def power(self, n: int) -> Matrix:
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix([[self.entries[i][j] for j in cols] for i in rows])

    def inverse(self) -> Matrix:
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.entries[i]) + [ONE if j == i else ZERO for j in range(n)] for i in range(n)]
        rows, pivots = _echelon(aug)
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix([r[n:] for r in rows])

    def map(self, fn: Callable[[Scalar], Scalar]) -> Matrix:
        return Matrix([[fn(e) for e in row] for row in self.entries])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(e) for e in row) for row in self.entries) + "]"

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})[{self}]"


# -- elimination -------------------------------------------------------------------


def _echelon(rows: list[list[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form (in place on a copy); returns (rows, pivot cols)."""
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if not rows[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


@dataclass
class LinearSolution:
    """One solution of A x = b together with a basis of the null space."""

    x: Vector
    kernel: list[Vector]


def solve_linear(a: Matrix, b: Vector) -> Optional[LinearSolution]:
    """Exact solution of A x = b, or None when the system is inconsistent.

    For underdetermined systems the kernel basis spans all other solutions.
    """
    if a.rows != len(b):
        raise ValueError("right-hand side length does not match row count")
    aug = [list(a.entries[i]) + [b[i]] for i in range(a.rows)]
    if not aug:
        return LinearSolution(Vector.zero(a.cols), kernel(a))
    rows, pivots = _echelon(aug)
    if a.cols in pivots:
        return None  # pivot in the augmented column: inconsistent
    x = [ZERO] * a.cols
    for r, c in enumerate(pivots):
        x[c] = rows[r][a.cols]
    return LinearSolution(Vector(x), kernel(a))


def kernel(a: Matrix) -> list[Vector]:
    """Exact basis of the null space of A; empty iff A is injective."""
    if a.rows == 0:
        return [Vector.unit(a.cols, j) for j in range(a.cols)]
    rows, pivots = _echelon([list(r) for r in a.entries])
    basis: list[Vector] = []
    pivot_set = set(pivots)
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [ZERO] * a.cols
        v[free] = ONE
        for r, c in enumerate(pivots):
            v[c] = -rows[r][free]
        basis.append(Vector(v))
    return basis


def rank(a: Matrix) -> int:
    if a.rows == 0 or a.cols == 0:
        return 0
    _, pivots = _echelon([list(r) for r in a.entries])
    return len(pivots)


def express_in_span(basis: Sequence[Vector], v: Vector) -> Optional[Vector]:
    """Coefficients c with sum(c_i * basis_i) = v, or None if v is outside."""
    if not basis:
        return Vector([]) if v.is_zero() else None
    sol = solve_linear(Matrix.from_columns(list(basis)), v)
    return sol.x if sol is not None else None


class RowSpan:
    """Incrementally echelonized span of vectors, for closure computations."""

    def __init__(self, length: int, vectors: Iterable[Vector] = ()):
        self.length = length
        self._rows: list[list[Scalar]] = []  # reduced, pivot-normalized
        self._pivots: list[int] = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v: Vector) -> list[Scalar]:
        if len(v) != self.length:
            raise ValueError("vector length mismatch")
        work = list(v)
        for row, p in zip(self._rows, self._pivots):
            f = work[p]
            if not f.is_zero():
                work = [x - f * y for x, y in zip(work, row)]
        return work

    def contains(self, v: Vector) -> bool:
        return all(x.is_zero() for x in self.reduce(v))

    def add(self, v: Vector) -> bool:
        """Add v to the span; True if the dimension grew."""
        work = self.reduce(v)
        pivot = next((i for i, x in enumerate(work) if not x.is_zero()), None)
        if pivot is None:
            return False
        inv = work[pivot].inverse()
        work = [x * inv for x in work]
        for row in self._rows:
            f = row[pivot]
            if not f.is_zero():
                row[:] = [x - f * y for x, y in zip(row, work)]
        at = next((k for k, p in enumerate(self._pivots) if p > pivot), len(self._pivots))
        self._rows.insert(at, work)
        self._pivots.insert(at, pivot)
        return True

    def echelon_basis(self) -> list[Vector]:
        return [Vector(r) for r in self._rows]

    def same_span(self, other: RowSpan) -> bool:
        return self.dim == other.dim and all(other.contains(v) for v in self.echelon_basis())


# -- characteristic polynomial ------------------------------------------------------


def charpoly(a: Matrix) -> Polynomial:
    """Monic characteristic polynomial det(t*I - A) by the division-free
    Berkowitz algorithm; coefficients come out in the base field."""
    if not a.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = a.rows
    if n == 0:
        return Polynomial([1])
    # vector of coefficients, leading first
    vec = [ONE, -a.entries[0][0]]
    for r in range(2, n + 1):
        m = [row[: r - 1] for row in a.entries[: r - 1]]
        row_r = a.entries[r - 1][: r - 1]
        col_r = [a.entries[i][r - 1] for i in range(r - 1)]
        diag = a.entries[r - 1][r - 1]
        # first column of the Toeplitz matrix: 1, -a_rr, -R C, -R M C, ...
        first = [ONE, -diag]
        w = col_r
        for _ in range(r - 1):
            s = ZERO
            for x, y in zip(row_r, w):
                if not (x.is_zero() or y.is_zero()):
                    s = s + x * y
            first.append(-s)
            w = [
                _dot(m_row, w)
                for m_row in m
            ]
        new_vec = [ZERO] * (r + 1)
        for i in range(r + 1):
            acc = ZERO
            for j in range(min(i + 1, r)):
                t = first[i - j]
                v = vec[j]
                if not (t.is_zero() or v.is_zero()):
                    acc = acc + t * v
            new_vec[i] = acc
        vec = new_vec
    return Polynomial(list(reversed(vec)))


def _dot(xs: Sequence[Scalar], ys: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for x, y in zip(xs, ys):
        if not (x.is_zero() or y.is_zero()):
            acc = acc + x * y
    return acc


def eval_poly_at_matrix(p: Polynomial, a: Matrix) -> Matrix:
    """p(A) by Horner's scheme."""
    if not a.is_square():
        raise ValueError("polynomial of a non-square matrix")
    n = a.rows
    acc = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc @ a + ident.scale(c)
    return acc
