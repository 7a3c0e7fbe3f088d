"""Iterative and closed-form solvers for X = A X (+) B.

All stopping rules use exact fixed-point equality, which is sound
because every element representation here is exact. Over idempotent
semirings the iterates ascend in the canonical order and, for
path-style instances without order-exceeding cycles, stabilize within
the matrix dimension, which is the default cap.

`field_matrix_star` inverts I - A over the rationals by exact
Gauss-Jordan elimination; besides being a solver in its own right it
serves as an independent check on the factorization route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatch, NonStabilized, NotSquare, SingularMatrix
from .matrices import Matrix, coerce_vector, mat_add, mat_mul, mat_vec
from .semirings import RationalField


@dataclass(frozen=True)
class IterationOutcome:
    """Result of an iterative solve; stabilized means an exact fixed point."""

    solution: tuple
    sweeps: int
    stabilized: bool


def _default_limit(n: int, limit: int | None) -> int:
    if limit is None:
        return n
    if limit < 1:
        raise ValueError("limit must be at least 1")
    return limit


def closure_series(a: Matrix, limit: int | None = None) -> Matrix:
    """Matrix closure A* as the first stabilized partial sum I (+) A (+) ... (+) A^k.

    Uses S_{k+1} = I (+) A S_k and returns the first S_k with
    S_{k+1} = S_k, which then satisfies S = I (+) A S. Raises
    NonStabilized if no fixed point appears within `limit` steps
    (default: the matrix dimension).
    """
    if a.rows != a.cols:
        raise NotSquare(f"closure needs a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    limit = _default_limit(n, limit)
    identity = Matrix.identity(a.semiring, n)
    s = identity
    for _ in range(limit):
        s_next = mat_add(identity, mat_mul(a, s))
        if s_next == s:
            return s
        s = s_next
    raise NonStabilized(limit)


def jacobi_solve(a: Matrix, rhs, limit: int | None = None) -> IterationOutcome:
    """Successive approximation X_{k+1} = A X_k (+) B starting from X_0 = B.

    The k-th iterate equals (I (+) A (+) ... (+) A^k) B, so on
    stabilization the solution is A* B. `sweeps` counts iterate
    applications including the confirming one.
    """
    if a.rows != a.cols:
        raise NotSquare(f"expected a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    limit = _default_limit(n, limit)
    sr = a.semiring
    b = coerce_vector(sr, rhs, n)
    x = b
    for sweep in range(1, limit + 1):
        ax = mat_vec(a, x)
        x_next = tuple(sr.add(ax[i], b[i]) for i in range(n))
        if x_next == x:
            return IterationOutcome(x, sweep, True)
        x = x_next
    raise NonStabilized(limit)


def gauss_seidel_solve(a: Matrix, rhs, limit: int | None = None) -> IterationOutcome:
    """In-place sweeps x[i] := ((+)_j a[i][j] (*) x[j]) (+) b[i], ascending i.

    Entries updated earlier in a sweep feed later updates, so sweeps
    stabilize no later than the plain successive approximation, and the
    fixed point reached is the same. Sweep order is fixed ascending for
    deterministic sweep counts.
    """
    if a.rows != a.cols:
        raise NotSquare(f"expected a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    limit = _default_limit(n, limit)
    sr = a.semiring
    b = coerce_vector(sr, rhs, n)
    x = list(b)
    for sweep in range(1, limit + 1):
        changed = False
        for i in range(n):
            acc = sr.zero
            for j in range(n):
                acc = sr.add(acc, sr.mul(a.at(i, j), x[j]))
            new = sr.add(acc, b[i])
            if new != x[i]:
                changed = True
                x[i] = new
        if not changed:
            return IterationOutcome(tuple(x), sweep, True)
    raise NonStabilized(limit)


def field_matrix_star(a: Matrix) -> Matrix:
    """Exact (I - A)^-1 over the rational field.

    Gauss-Jordan elimination with pivoting by first-nonzero search,
    entirely in exact rational arithmetic (never subject to a rounding
    policy), so (I - A) (*) result = I holds exactly.
    """
    sr = a.semiring
    if not isinstance(sr, RationalField):
        raise DomainMismatch("field closure requires the rational field")
    if a.rows != a.cols:
        raise NotSquare(f"expected a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    one = Fraction(1)
    zero = Fraction(0)
    m = [[(one if i == j else zero) - a.at(i, j) for j in range(n)] for i in range(n)]
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrix("I - A is singular")
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
        pivot = m[col][col]
        if pivot != 1:
            m[col] = [v / pivot for v in m[col]]
            inv[col] = [v / pivot for v in inv[col]]
        for r in range(n):
            if r == col:
                continue
            factor = m[r][col]
            if factor == 0:
                continue
            m[r] = [rv - factor * cv for rv, cv in zip(m[r], m[col])]
            inv[r] = [rv - factor * cv for rv, cv in zip(inv[r], inv[col])]
    return Matrix(sr, n, n, [v for row in inv for v in row])
