"""Transport-free implementations of the service operations.

Each handler takes a request model and returns a response model,
raising PathAlgebraError subclasses on failure; the FastAPI layer and
the CLI translate those uniformly (domain errors vs input errors).
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DimensionMismatch, DomainMismatch, ParseError
from ..graphs import PathProblem, PathProblemKind, graph_to_bellman
from ..intervals import IntervalSemiring
from ..matrices import (
    LdmFactors,
    Matrix,
    OpCountReport,
    back_substitution,
    diagonal_solve,
    forward_substitution,
    ldm_factorize,
    ldm_factorize_symmetric,
    ldm_solve,
    mat_vec,
    require_diagonal,
)
from ..precision import PrecisionPolicy, RoundingMode
from ..semirings import RationalField, Semiring
from ..solvers import closure_series, field_matrix_star, gauss_seidel_solve, jacobi_solve
from ..textio import format_matrix, format_vector, parse_graph_file, parse_matrix_file
from .models import (
    ClosureRequest,
    ClosureResponse,
    CountsRequest,
    CountsResponse,
    FactorRequest,
    FactorResponse,
    OpCounts,
    PathRequest,
    PathResponse,
    SolveRequest,
    SolveResponse,
)


def _counts(report: OpCountReport) -> OpCounts:
    return OpCounts(adds=report.adds, muls=report.muls, closures=report.closures)


def _promote_to_interval(matrix: Matrix, interval_sr: IntervalSemiring) -> Matrix:
    return Matrix(interval_sr, matrix.rows, matrix.cols, matrix.entries)


def _unify_pair(a: Matrix, b: Matrix):
    """Allow a scalar operand alongside an interval one over the same base."""
    sa, sb = a.semiring, b.semiring
    if sa == sb:
        return a, b
    if isinstance(sa, IntervalSemiring) and sa.base == sb:
        return a, _promote_to_interval(b, sa)
    if isinstance(sb, IntervalSemiring) and sb.base == sa:
        return _promote_to_interval(a, sb), b
    raise DomainMismatch("the two inputs use different semirings")


def _apply_epsilon(matrix: Matrix, epsilon: str | None) -> Matrix:
    """Attach a round-each-op policy; ignored on semirings that never round."""
    if epsilon is None:
        return matrix
    try:
        eps = Fraction(epsilon)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid epsilon {epsilon!r}") from None
    if eps < 0:
        raise ParseError("epsilon must be nonnegative")
    if not isinstance(matrix.semiring, RationalField):
        return matrix
    sr = RationalField(PrecisionPolicy(eps, RoundingMode.ROUND_EACH_OP))
    return Matrix(sr, matrix.rows, matrix.cols, matrix.entries)


def _load_system(matrix_text: str, rhs_text: str, epsilon: str | None):
    _, a = parse_matrix_file(matrix_text)
    _, bmat = parse_matrix_file(rhs_text)
    a, bmat = _unify_pair(a, bmat)
    a = _apply_epsilon(a, epsilon)
    bmat = _apply_epsilon(bmat, epsilon)
    if a.rows != a.cols:
        raise DimensionMismatch(f"system matrix must be square, got {a.rows}x{a.cols}")
    if bmat.cols != 1:
        raise DimensionMismatch("right-hand side must be a single column")
    if bmat.rows != a.rows:
        raise DimensionMismatch(
            f"right-hand side has {bmat.rows} rows but the matrix is {a.rows}x{a.cols}"
        )
    return a, bmat.column(0)


def _dispatch_solve(a: Matrix, b: tuple, method: str, limit: int | None):
    """Run one solve method; returns (solution, counts, sweeps)."""
    if method == "ldm":
        factors, _ = ldm_factorize(a)
        x, report = ldm_solve(factors, b)
        return x, _counts(report), None
    if method == "jacobi":
        outcome = jacobi_solve(a, b, limit)
        return outcome.solution, None, outcome.sweeps
    if method == "gauss-seidel":
        outcome = gauss_seidel_solve(a, b, limit)
        return outcome.solution, None, outcome.sweeps
    if method == "series":
        star = closure_series(a, limit)
        return mat_vec(star, b), None, None
    if method == "field-star":
        star = field_matrix_star(a)
        return mat_vec(star, b), None, None
    raise ParseError(f"unknown method {method!r}")


def handle_solve(req: SolveRequest) -> SolveResponse:
    a, b = _load_system(req.matrix, req.rhs, req.epsilon)
    x, counts, sweeps = _dispatch_solve(a, b, req.method, req.limit)
    return SolveResponse(
        output=format_vector(a.semiring, x),
        method=req.method,
        counts=counts,
        sweeps=sweeps,
    )


def _closure_by_probes(a: Matrix) -> Matrix:
    """Reconstruct A* column by column via unit right-hand sides."""
    sr = a.semiring
    n = a.rows
    factors, _ = ldm_factorize(a)
    columns = []
    for j in range(n):
        unit = [sr.zero] * n
        unit[j] = sr.one
        x, _ = ldm_solve(factors, unit)
        columns.append(x)
    data = [columns[j][i] for i in range(n) for j in range(n)]
    return Matrix(sr, n, n, data)


def handle_closure(req: ClosureRequest) -> ClosureResponse:
    _, a = parse_matrix_file(req.matrix)
    if a.rows != a.cols:
        raise DimensionMismatch(f"closure needs a square matrix, got {a.rows}x{a.cols}")
    if req.method == "series":
        star = closure_series(a, req.limit)
    elif req.method == "ldm":
        star = _closure_by_probes(a)
    else:
        star = field_matrix_star(a)
    return ClosureResponse(output=format_matrix(star), method=req.method)


def handle_factor(req: FactorRequest) -> FactorResponse:
    _, a = parse_matrix_file(req.matrix)
    factors, report = ldm_factorize_symmetric(a) if req.symmetric else ldm_factorize(a)
    return FactorResponse(output=format_matrix(factors.packed()), counts=_counts(report))


_PROBLEM_KINDS = {
    "shortest": PathProblemKind.SHORTEST,
    "widest": PathProblemKind.WIDEST,
    "reliable": PathProblemKind.RELIABLE,
    "reach": PathProblemKind.REACH,
}


def handle_path(req: PathRequest) -> PathResponse:
    graph = parse_graph_file(req.graph)
    problem = PathProblem(_PROBLEM_KINDS[req.problem], req.target)
    sr, a, b = graph_to_bellman(graph, problem)
    x, counts, sweeps = _dispatch_solve(a, b, req.method, req.limit)
    return PathResponse(
        output=format_vector(sr, x),
        problem=req.problem,
        counts=counts,
        sweeps=sweeps,
    )


def _require_rhs(req: CountsRequest) -> str:
    if req.rhs is None:
        raise ParseError(f"operation {req.op!r} requires a right-hand side")
    return req.rhs


def handle_counts(req: CountsRequest) -> CountsResponse:
    _, a = parse_matrix_file(req.matrix)
    if req.op in ("forward", "back", "diagonal", "solve"):
        _, bmat = parse_matrix_file(_require_rhs(req))
        a, bmat = _unify_pair(a, bmat)
        if bmat.cols != 1:
            raise DimensionMismatch("right-hand side must be a single column")
        b = bmat.column(0)
        if req.op == "forward":
            _, report = forward_substitution(a, b)
        elif req.op == "back":
            _, report = back_substitution(a, b)
        elif req.op == "diagonal":
            diag = require_diagonal(a)
            _, report = diagonal_solve(a.semiring, diag, b)
        else:
            factors, _ = ldm_factorize(a)
            _, report = ldm_solve(factors, b)
    elif req.op == "factor":
        _, report = ldm_factorize(a)
    else:
        _, report = ldm_factorize_symmetric(a)
    counts = _counts(report)
    return CountsResponse(op=req.op, counts=counts, line=counts.as_line())
