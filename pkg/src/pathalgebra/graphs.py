"""Mapping graph path problems onto X = A X (+) B.

The arc u -> v with weight w lands in A[u][v], and B marks the target
node with the semiring one. Solving the system then gives, at index u,
the best path value from u TO the target (the target row of the
solution is always one combined with any cycle terms through it).
Single-source answers are obtained by transposing the input arcs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import IndexOutOfRange, DomainMismatch, InvalidWeight
from .matrices import Matrix
from .semirings import (
    NEG_INF,
    POS_INF,
    Boolean,
    MaxMin,
    MaxTimes,
    MinPlus,
    Semiring,
)


@dataclass(frozen=True)
class GraphSpec:
    """A directed graph: node count plus (u, v, weight) arcs, 1-based.

    Parallel arcs are kept as-is and combined by (+) when the adjacency
    matrix is built.
    """

    n: int
    edges: tuple

    def __post_init__(self):
        if self.n < 1:
            raise IndexOutOfRange("node count must be positive")
        edges = tuple((u, v, w) for u, v, w in self.edges)
        for u, v, _ in edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise IndexOutOfRange(f"arc ({u},{v}) outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)


class PathProblemKind(enum.Enum):
    SHORTEST = "shortest"
    WIDEST = "widest"
    RELIABLE = "reliable"
    REACH = "reach"


@dataclass(frozen=True)
class PathProblem:
    """Which optimum is sought and toward which target node.

    `maxmin_bounds` overrides the widest-path carrier, which defaults
    to the full extended line [-inf, inf].
    """

    kind: PathProblemKind
    target: int
    maxmin_bounds: tuple | None = None


def problem_semiring(problem: PathProblem) -> Semiring:
    if problem.kind is PathProblemKind.SHORTEST:
        return MinPlus()
    if problem.kind is PathProblemKind.WIDEST:
        bounds = problem.maxmin_bounds or (NEG_INF, POS_INF)
        return MaxMin(*bounds)
    if problem.kind is PathProblemKind.RELIABLE:
        return MaxTimes()
    if problem.kind is PathProblemKind.REACH:
        return Boolean()
    raise ValueError(f"unhandled problem kind {problem.kind!r}")


def graph_to_bellman(graph: GraphSpec, problem: PathProblem):
    """Build (semiring, A, B) so that solving X = A X (+) B answers the problem.

    Weights are validated against the problem's semiring
    (reliabilities must lie in [0, 1], and so on); reachability ignores
    the weight values entirely.
    """
    sr = problem_semiring(problem)
    n = graph.n
    if not 1 <= problem.target <= n:
        raise IndexOutOfRange(f"target {problem.target} outside 1..{n}")
    rows = [[sr.zero] * n for _ in range(n)]
    for u, v, w in graph.edges:
        if problem.kind is PathProblemKind.REACH:
            element = True
        else:
            try:
                element = sr.coerce(w)
            except DomainMismatch as exc:
                raise InvalidWeight(f"arc ({u},{v}): {exc}") from None
        rows[u - 1][v - 1] = sr.add(rows[u - 1][v - 1], element)
    b = [sr.zero] * n
    b[problem.target - 1] = sr.one
    return sr, Matrix.from_rows(sr, rows), tuple(b)
