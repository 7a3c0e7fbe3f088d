"""Request and response schemas for the solver service.

Matrices, vectors and graphs travel as their text-format payloads, so
the CLI stays a thin client: it reads files, wraps the text in a
request, and prints the response text verbatim.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

SolveMethod = Literal["ldm", "jacobi", "gauss-seidel", "series", "field-star"]
ClosureMethod = Literal["series", "ldm", "field-star"]
ProblemName = Literal["shortest", "widest", "reliable", "reach"]
CountedOp = Literal["forward", "back", "diagonal", "solve", "factor", "factor-symmetric"]


class OpCounts(BaseModel):
    adds: int
    muls: int
    closures: int

    def as_line(self) -> str:
        return f"adds={self.adds} muls={self.muls} closures={self.closures}"


class SolveRequest(BaseModel):
    matrix: str = Field(description="square system matrix, text format")
    rhs: str = Field(description="right-hand side as a 1-column matrix, text format")
    method: SolveMethod = "ldm"
    limit: Optional[int] = Field(default=None, ge=1)
    epsilon: Optional[str] = Field(
        default=None, description="round rational add/mul results to within p/q"
    )


class SolveResponse(BaseModel):
    output: str
    method: SolveMethod
    counts: Optional[OpCounts] = None
    sweeps: Optional[int] = None


class ClosureRequest(BaseModel):
    matrix: str
    method: ClosureMethod = "series"
    limit: Optional[int] = Field(default=None, ge=1)


class ClosureResponse(BaseModel):
    output: str
    method: ClosureMethod


class FactorRequest(BaseModel):
    matrix: str
    symmetric: bool = False


class FactorResponse(BaseModel):
    output: str = Field(description="packed factors: L below, D on, M above the diagonal")
    counts: OpCounts


class PathRequest(BaseModel):
    graph: str
    problem: ProblemName
    target: int = Field(ge=1)
    method: SolveMethod = "jacobi"
    limit: Optional[int] = Field(default=None, ge=1)


class PathResponse(BaseModel):
    output: str
    problem: ProblemName
    counts: Optional[OpCounts] = None
    sweeps: Optional[int] = None


class CountsRequest(BaseModel):
    op: CountedOp
    matrix: str
    rhs: Optional[str] = None


class CountsResponse(BaseModel):
    op: CountedOp
    counts: OpCounts
    line: str


class HealthResponse(BaseModel):
    status: str
    version: str
