"""Dense matrices over a semiring and the triangular/LDM solve kit.

The algorithms here are written as straight loops over the semiring
operations, with no zero-skipping or other shortcuts: their operation
counts are part of the contract and every run returns an exact tally of
the (+), (*) and closure calls it made. For an n x n system:

    forward / back substitution   (n^2 - n)/2 adds, (n^2 - n)/2 muls
    diagonal solve                n muls, n closures
    ldm_solve (three stages)      n^2 - n adds, n^2 muls, n closures
    ldm_factorize                 (2n^3 - 3n^2 + n)/6 adds,
                                  (2n^3 + 3n^2 - 5n)/6 muls,
                                  n(n + 1)/2 closures
    ldm_factorize_symmetric       (n^3 - n)/6 adds,
                                  (n^3 + 3n^2 - 4n)/6 muls,
                                  n(n - 1)/2 closures

Matrices are immutable values; algorithms work on private copies and
each run owns its tally, so concurrent runs over shared inputs are
safe. Positions in error messages are 1-based, matching the file
format.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ClosureUndefined,
    DimensionMismatch,
    DomainMismatch,
    NotCommutative,
    NotDiagonal,
    NotLowerTriangular,
    NotSquare,
    NotSymmetric,
    NotUpperTriangular,
)
from .semirings import Semiring


class Matrix:
    """A rows x cols array of semiring elements, stored row-major."""

    __slots__ = ("semiring", "rows", "cols", "_data")

    def __init__(self, semiring: Semiring, rows: int, cols: int, data):
        if rows < 1 or cols < 1:
            raise DimensionMismatch("matrix dimensions must be positive")
        data = tuple(semiring.coerce(v) for v in data)
        if len(data) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        self.semiring = semiring
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def from_rows(cls, semiring: Semiring, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionMismatch("matrix dimensions must be positive")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(semiring, len(rows), width, [v for r in rows for v in r])

    @classmethod
    def zeros(cls, semiring: Semiring, rows: int, cols: int) -> "Matrix":
        return cls(semiring, rows, cols, [semiring.zero] * (rows * cols))

    @classmethod
    def identity(cls, semiring: Semiring, n: int) -> "Matrix":
        data = [semiring.one if i == j else semiring.zero for i in range(n) for j in range(n)]
        return cls(semiring, n, n, data)

    @classmethod
    def column_vector(cls, semiring: Semiring, entries) -> "Matrix":
        entries = list(entries)
        return cls(semiring, len(entries), 1, entries)

    @property
    def entries(self) -> tuple:
        """All entries, row-major."""
        return self._data

    def at(self, i: int, j: int):
        return self._data[i * self.cols + j]

    def __getitem__(self, ij):
        i, j = ij
        return self.at(i, j)

    def row(self, i: int) -> tuple:
        return self._data[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self._data[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        data = [self.at(i, j) for j in range(self.cols) for i in range(self.rows)]
        return Matrix(self.semiring, self.cols, self.rows, data)

    def __add__(self, other: "Matrix") -> "Matrix":
        return mat_add(self, other)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.semiring == other.semiring
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self) -> int:
        return hash((self.semiring, self.rows, self.cols, self._data))

    def __repr__(self) -> str:
        return f"<Matrix {self.rows}x{self.cols} over {self.semiring.token()}>"


def _require_same_semiring(a: Matrix, b: Matrix) -> Semiring:
    if a.semiring != b.semiring:
        raise DomainMismatch("operands use different semirings")
    return a.semiring


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    """Entrywise (+)."""
    sr = _require_same_semiring(a, b)
    if a.rows != b.rows or a.cols != b.cols:
        raise DimensionMismatch(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    data = [sr.add(x, y) for x, y in zip(a._data, b._data)]
    return Matrix(sr, a.rows, a.cols, data)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Row-by-column product: C[i][j] = (+)_k a[i][k] (*) b[k][j]."""
    sr = _require_same_semiring(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    data = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = sr.zero
            for k in range(a.cols):
                acc = sr.add(acc, sr.mul(a.at(i, k), b.at(k, j)))
            data.append(acc)
    return Matrix(sr, a.rows, b.cols, data)


def mat_vec(a: Matrix, vec) -> tuple:
    """Apply a matrix to a vector of elements."""
    sr = a.semiring
    vec = coerce_vector(sr, vec, a.cols)
    out = []
    for i in range(a.rows):
        acc = sr.zero
        for j in range(a.cols):
            acc = sr.add(acc, sr.mul(a.at(i, j), vec[j]))
        out.append(acc)
    return tuple(out)


def coerce_vector(sr: Semiring, vec, n: int) -> tuple:
    vec = tuple(sr.coerce(v) for v in vec)
    if len(vec) != n:
        raise DimensionMismatch(f"expected a vector of length {n}, got {len(vec)}")
    return vec


@dataclass
class OpCountReport:
    """Exact tallies of the semiring calls made by one algorithm run."""

    adds: int = 0
    muls: int = 0
    closures: int = 0


class _Ops:
    """Counting proxy for one run; structural comparisons are not counted."""

    __slots__ = ("sr", "report")

    def __init__(self, sr: Semiring):
        self.sr = sr
        self.report = OpCountReport()

    def add(self, x, y):
        self.report.adds += 1
        return self.sr.add(x, y)

    def mul(self, x, y):
        self.report.muls += 1
        return self.sr.mul(x, y)

    def closure(self, x, where: str | None = None):
        self.report.closures += 1
        try:
            return self.sr.closure(x)
        except ClosureUndefined as exc:
            if where is None:
                raise
            raise ClosureUndefined(f"{where}: {exc}", index=exc.index) from None


def _require_square(m: Matrix) -> int:
    if m.rows != m.cols:
        raise NotSquare(f"expected a square matrix, got {m.rows}x{m.cols}")
    return m.rows


def _require_strictly_lower(m: Matrix) -> None:
    zero = m.semiring.zero
    for i in range(m.rows):
        for j in range(i, m.cols):
            if m.at(i, j) != zero:
                raise NotLowerTriangular(
                    f"entry ({i + 1},{j + 1}) must be the zero element"
                )


def _require_strictly_upper(m: Matrix) -> None:
    zero = m.semiring.zero
    for i in range(m.rows):
        for j in range(min(i + 1, m.cols)):
            if m.at(i, j) != zero:
                raise NotUpperTriangular(
                    f"entry ({i + 1},{j + 1}) must be the zero element"
                )


def require_diagonal(m: Matrix) -> tuple:
    """Check off-diagonal entries are zero; return the diagonal."""
    n = _require_square(m)
    zero = m.semiring.zero
    for i in range(n):
        for j in range(n):
            if i != j and m.at(i, j) != zero:
                raise NotDiagonal(f"entry ({i + 1},{j + 1}) must be the zero element")
    return tuple(m.at(i, i) for i in range(n))


@dataclass(frozen=True)
class LdmFactors:
    """Strictly lower L, diagonal D and strictly upper M over one semiring.

    Solving X = A X (+) B splits into three fixed-point stages
    Z = L Z (+) B, Y = D Y (+) Z, X = M X (+) Y, so the matrix closure
    factors as the product of the three stage closures.
    """

    lower: Matrix
    diagonal: tuple
    upper: Matrix

    def __post_init__(self):
        sr = _require_same_semiring(self.lower, self.upper)
        n = _require_square(self.lower)
        if _require_square(self.upper) != n:
            raise DimensionMismatch("factor sizes differ")
        _require_strictly_lower(self.lower)
        _require_strictly_upper(self.upper)
        diag = tuple(sr.coerce(d) for d in self.diagonal)
        if len(diag) != n:
            raise DimensionMismatch(f"expected {n} diagonal entries, got {len(diag)}")
        object.__setattr__(self, "diagonal", diag)

    @property
    def semiring(self) -> Semiring:
        return self.lower.semiring

    @property
    def size(self) -> int:
        return self.lower.rows

    def packed(self) -> Matrix:
        """Single matrix holding L below, D on, and M above the diagonal."""
        n = self.size
        data = []
        for i in range(n):
            for j in range(n):
                if i > j:
                    data.append(self.lower.at(i, j))
                elif i == j:
                    data.append(self.diagonal[i])
                else:
                    data.append(self.upper.at(i, j))
        return Matrix(self.semiring, n, n, data)

    @classmethod
    def from_packed(cls, packed: Matrix) -> "LdmFactors":
        n = _require_square(packed)
        sr = packed.semiring
        zero = sr.zero
        lower = [[packed.at(i, j) if i > j else zero for j in range(n)] for i in range(n)]
        upper = [[packed.at(i, j) if i < j else zero for j in range(n)] for i in range(n)]
        diag = tuple(packed.at(i, i) for i in range(n))
        return cls(Matrix.from_rows(sr, lower), diag, Matrix.from_rows(sr, upper))


def forward_substitution(lower: Matrix, rhs):
    """Solve X = L X (+) B for strictly lower triangular L.

    Returns (x, report) where x is an exact fixed point of the
    equation. Every (l[i][j], x[j]) pair with j < i is combined, zero
    entries included, so the tally is always (n^2 - n)/2 of each binary
    operation.
    """
    n = _require_square(lower)
    _require_strictly_lower(lower)
    sr = lower.semiring
    b = coerce_vector(sr, rhs, n)
    ops = _Ops(sr)
    x: list = [None] * n
    for i in range(n):
        xi = b[i]
        for j in range(i):
            xi = ops.add(xi, ops.mul(lower.at(i, j), x[j]))
        x[i] = xi
    return tuple(x), ops.report


def back_substitution(upper: Matrix, rhs):
    """Solve X = M X (+) B for strictly upper triangular M.

    The update combines m[i][j] with x[j] (the already-computed later
    entries); combining with x[i] instead could not satisfy
    X = M X (+) B.
    """
    n = _require_square(upper)
    _require_strictly_upper(upper)
    sr = upper.semiring
    b = coerce_vector(sr, rhs, n)
    ops = _Ops(sr)
    x: list = [None] * n
    for i in range(n - 1, -1, -1):
        xi = b[i]
        for j in range(n - 1, i, -1):
            xi = ops.add(xi, ops.mul(upper.at(i, j), x[j]))
        x[i] = xi
    return tuple(x), ops.report


def diagonal_solve(sr: Semiring, diag, rhs):
    """Solve X = D X (+) B for a diagonal D given as a vector.

    x[i] = (d[i])* (*) b[i]; raises ClosureUndefined with the failing
    1-based index when some diagonal closure does not exist.
    """
    diag = tuple(sr.coerce(d) for d in diag)
    n = len(diag)
    if n == 0:
        raise DimensionMismatch("diagonal must be nonempty")
    b = coerce_vector(sr, rhs, n)
    ops = _Ops(sr)
    x = []
    for i in range(n):
        try:
            star = ops.closure(diag[i])
        except ClosureUndefined as exc:
            raise ClosureUndefined(f"diagonal index {i + 1}: {exc}", index=i + 1) from None
        x.append(ops.mul(star, b[i]))
    return tuple(x), ops.report


def ldm_solve(factors: LdmFactors, rhs):
    """Solve X = A X (+) B from the LDM factors of A, in place.

    Three stages run over one working vector: forward substitution
    through L, closure of the diagonal, then back substitution through
    M without re-initializing the entries. The diagonal stage scales
    the forward-substitution result; rescanning the original b there
    would discard stage one.
    """
    n = factors.size
    sr = factors.semiring
    lower, diag, upper = factors.lower, factors.diagonal, factors.upper
    b = coerce_vector(sr, rhs, n)
    ops = _Ops(sr)
    x: list = [None] * n
    for i in range(n):
        xi = b[i]
        for j in range(i):
            xi = ops.add(xi, ops.mul(lower.at(i, j), x[j]))
        x[i] = xi
    for i in range(n):
        try:
            star = ops.closure(diag[i])
        except ClosureUndefined as exc:
            raise ClosureUndefined(f"diagonal index {i + 1}: {exc}", index=i + 1) from None
        x[i] = ops.mul(star, x[i])
    for i in range(n - 1, -1, -1):
        for j in range(n - 1, i, -1):
            x[i] = ops.add(x[i], ops.mul(upper.at(i, j), x[j]))
    return tuple(x), ops.report


def ldm_factorize(a: Matrix):
    """Factor a square matrix into strictly-lower L, diagonal D, strictly-upper M.

    Works in place on a single working copy: after column j is
    processed, its strict lower part holds L, its diagonal entry holds
    D and its strict upper part holds M. The column updates read
    entries of already-processed columns in their transformed form;
    that aliasing is part of the algorithm. Aborts with
    ClosureUndefined (and no partial factors) if any diagonal closure
    encountered along the way is undefined.
    """
    n = _require_square(a)
    sr = a.semiring
    ops = _Ops(sr)
    c = a.to_rows()
    for j in range(n):
        v: list = [None] * (j + 1)
        for i in range(j + 1):
            v[i] = c[i][j]
        for k in range(j):
            for i in range(k + 1, j + 1):
                v[i] = ops.add(v[i], ops.mul(c[i][k], v[k]))
        for i in range(j):
            star = ops.closure(
                c[i][i], where=f"diagonal entry {i + 1} while processing column {j + 1}"
            )
            c[i][j] = ops.mul(star, v[i])
        c[j][j] = v[j]
        for k in range(j):
            for i in range(j + 1, n):
                c[i][j] = ops.add(c[i][j], ops.mul(c[i][k], v[k]))
        d = ops.closure(v[j], where=f"pivot of column {j + 1}")
        for i in range(j + 1, n):
            c[i][j] = ops.mul(c[i][j], d)
    return _unpack(sr, c), ops.report


def ldm_factorize_symmetric(a: Matrix):
    """LDM factors of a symmetric matrix over a commutative semiring.

    Exploits that L and M are transposes of each other: only the upper
    entries of each column are computed, and each is mirrored into the
    matching row of the lower triangle as soon as it is known, so the
    below-diagonal column updates and the per-column pivot closure of
    the general routine are skipped entirely. Produces exactly the same
    factors with roughly half the multiplications.
    """
    n = _require_square(a)
    sr = a.semiring
    if not sr.commutative:
        raise NotCommutative(f"the {sr.kind} semiring is not commutative")
    if a != a.transpose():
        raise NotSymmetric("matrix is not symmetric")
    ops = _Ops(sr)
    c = a.to_rows()
    for j in range(n):
        v = [c[i][j] for i in range(j + 1)]
        for k in range(j):
            for i in range(k + 1, j):
                v[i] = ops.add(v[i], ops.mul(c[i][k], v[k]))
            star = ops.closure(
                c[k][k], where=f"diagonal entry {k + 1} while processing column {j + 1}"
            )
            m = ops.mul(star, v[k])
            c[k][j] = m
            c[j][k] = m
            v[j] = ops.add(v[j], ops.mul(m, v[k]))
        c[j][j] = v[j]
    return _unpack(sr, c), ops.report


def _unpack(sr: Semiring, c: list) -> LdmFactors:
    n = len(c)
    zero = sr.zero
    lower = [[c[i][j] if i > j else zero for j in range(n)] for i in range(n)]
    upper = [[c[i][j] if i < j else zero for j in range(n)] for i in range(n)]
    diag = tuple(c[i][i] for i in range(n))
    return LdmFactors(Matrix.from_rows(sr, lower), diag, Matrix.from_rows(sr, upper))
