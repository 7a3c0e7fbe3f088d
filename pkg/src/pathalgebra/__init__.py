"""Linear algebra over exchangeable semirings.

One set of algorithms (triangular substitution, LDM factorization,
matrix closure, successive-approximation solvers) runs unchanged over
exact rationals, min-plus / max-plus, max-min, boolean, max-times and
interval domains, because everything is written against the semiring
operations alone. Graph path problems map onto X = A·X (+) B and are
exposed through an HTTP service and a CLI.
"""

__version__ = "0.1.0"

from .errors import (
    ClosureUndefined,
    DimensionMismatch,
    DomainMismatch,
    ElementOutOfDomain,
    IndexOutOfRange,
    InvalidWeight,
    NonStabilized,
    NotCommutative,
    NotDiagonal,
    NotIdempotent,
    NotLowerTriangular,
    NotSquare,
    NotSymmetric,
    NotUpperTriangular,
    ParseError,
    PathAlgebraError,
    SingularMatrix,
    UnknownSemiring,
    error_category,
)
from .graphs import GraphSpec, PathProblem, PathProblemKind, graph_to_bellman, problem_semiring
from .intervals import Interval, IntervalSemiring
from .matrices import (
    LdmFactors,
    Matrix,
    OpCountReport,
    back_substitution,
    diagonal_solve,
    forward_substitution,
    ldm_factorize,
    ldm_factorize_symmetric,
    ldm_solve,
    mat_add,
    mat_mul,
    mat_vec,
)
from .precision import PrecisionPolicy, RoundingMode, round_rational, simplest_between
from .semirings import (
    NEG_INF,
    POS_INF,
    Boolean,
    MaxMin,
    MaxPlus,
    MaxTimes,
    MinPlus,
    RationalField,
    Semiring,
    semiring_from_token,
)
from .solvers import (
    IterationOutcome,
    closure_series,
    field_matrix_star,
    gauss_seidel_solve,
    jacobi_solve,
)
from .textio import format_matrix, format_vector, parse_graph_file, parse_matrix_file

__all__ = [
    "__version__",
    "POS_INF",
    "NEG_INF",
    "Semiring",
    "RationalField",
    "MinPlus",
    "MaxPlus",
    "MaxMin",
    "Boolean",
    "MaxTimes",
    "semiring_from_token",
    "Interval",
    "IntervalSemiring",
    "PrecisionPolicy",
    "RoundingMode",
    "round_rational",
    "simplest_between",
    "Matrix",
    "OpCountReport",
    "LdmFactors",
    "mat_add",
    "mat_mul",
    "mat_vec",
    "forward_substitution",
    "back_substitution",
    "diagonal_solve",
    "ldm_solve",
    "ldm_factorize",
    "ldm_factorize_symmetric",
    "IterationOutcome",
    "closure_series",
    "jacobi_solve",
    "gauss_seidel_solve",
    "field_matrix_star",
    "GraphSpec",
    "PathProblem",
    "PathProblemKind",
    "problem_semiring",
    "graph_to_bellman",
    "parse_matrix_file",
    "parse_graph_file",
    "format_matrix",
    "format_vector",
    "PathAlgebraError",
    "DomainMismatch",
    "NotIdempotent",
    "ClosureUndefined",
    "NonStabilized",
    "SingularMatrix",
    "DimensionMismatch",
    "NotSquare",
    "NotLowerTriangular",
    "NotUpperTriangular",
    "NotDiagonal",
    "NotSymmetric",
    "NotCommutative",
    "InvalidWeight",
    "ParseError",
    "UnknownSemiring",
    "ElementOutOfDomain",
    "IndexOutOfRange",
    "error_category",
]
