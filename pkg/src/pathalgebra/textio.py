"""Text formats for matrices and graphs.

Matrix format, bit-exact on round trips after canonicalization:

    semiring: <token>
    <rows> <cols>
    <row of whitespace-separated element literals>
    ...

Element literals are `p/q`, integers, exact decimals, `inf`, `-inf`, or
intervals `[lo,hi]` (no internal whitespace). Any interval literal
promotes the whole matrix to the interval semiring over the declared
base; scalar entries in such a file become degenerate intervals.
Vectors are 1-column matrices.

Graph format: first line `n m`, then m lines `u v w` with 1-based node
indices. Duplicate arcs are retained and combined by (+) when the
adjacency matrix is built.
"""

from __future__ import annotations

import re

from .errors import IndexOutOfRange, ElementOutOfDomain, ParseError, UnknownSemiring
from .graphs import GraphSpec
from .intervals import IntervalSemiring
from .matrices import Matrix
from .semirings import Semiring, parse_scalar_token, semiring_from_token

_HEADER = re.compile(r"\s*semiring:\s*(\S+)\s*")


def _split_lines(text: str) -> list:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    return lines


def parse_matrix_file(text: str):
    """Parse matrix text; returns (semiring, matrix).

    Raises ParseError / UnknownSemiring / ElementOutOfDomain with
    1-based line (and token column) positions.
    """
    lines = _split_lines(text)
    if not lines:
        raise ParseError("empty matrix text", line=1)
    header = _HEADER.fullmatch(lines[0])
    if not header:
        raise ParseError("expected 'semiring: <token>' header", line=1)
    try:
        base = semiring_from_token(header.group(1))
    except UnknownSemiring as exc:
        raise UnknownSemiring(str(exc.args[0]), line=1) from None
    if len(lines) < 2:
        raise ParseError("missing dimension line", line=2)
    dims = lines[1].split()
    if len(dims) != 2 or not all(p.lstrip("-").isdigit() for p in dims):
        raise ParseError("expected '<rows> <cols>'", line=2)
    rows, cols = int(dims[0]), int(dims[1])
    if rows < 1 or cols < 1:
        raise ParseError("dimensions must be positive", line=2)
    if len(lines) != 2 + rows:
        raise ParseError(f"expected {rows} data lines, got {len(lines) - 2}", line=len(lines))

    interval_sr = None
    tokens_by_row = []
    for r in range(rows):
        line_no = 3 + r
        tokens = lines[2 + r].split()
        if len(tokens) != cols:
            raise ParseError(f"expected {cols} entries, got {len(tokens)}", line=line_no)
        tokens_by_row.append(tokens)
        if interval_sr is None and any(t.startswith("[") for t in tokens):
            if not base.idempotent:
                col = next(c for c, t in enumerate(tokens) if t.startswith("["))
                raise ElementOutOfDomain(
                    "interval elements need an idempotent base semiring",
                    line=line_no,
                    column=col + 1,
                )
            interval_sr = IntervalSemiring(base)

    sr: Semiring = interval_sr if interval_sr is not None else base
    data = []
    for r, tokens in enumerate(tokens_by_row):
        for c, token in enumerate(tokens):
            try:
                data.append(sr.parse_element(token))
            except ParseError as exc:
                raise type(exc)(str(exc.args[0]), line=3 + r, column=c + 1) from None
    return sr, Matrix(sr, rows, cols, data)


def format_matrix(matrix: Matrix) -> str:
    """Canonical matrix text; parse(format(m)) reproduces m exactly."""
    sr = matrix.semiring
    out = [f"semiring: {sr.token()}", f"{matrix.rows} {matrix.cols}"]
    for i in range(matrix.rows):
        out.append(" ".join(sr.format_element(v) for v in matrix.row(i)))
    return "\n".join(out) + "\n"


def format_vector(sr: Semiring, entries) -> str:
    return format_matrix(Matrix.column_vector(sr, entries))


def parse_graph_file(text: str) -> GraphSpec:
    """Parse graph text; node indices are validated against 1..n."""
    lines = _split_lines(text)
    if not lines:
        raise ParseError("empty graph text", line=1)
    head = lines[0].split()
    if len(head) != 2 or not all(p.isdigit() for p in head):
        raise ParseError("expected '<nodes> <arcs>'", line=1)
    n, m = int(head[0]), int(head[1])
    if n < 1:
        raise ParseError("node count must be positive", line=1)
    if len(lines) != 1 + m:
        raise ParseError(f"expected {m} arc lines, got {len(lines) - 1}", line=len(lines))
    edges = []
    for r in range(m):
        line_no = 2 + r
        parts = lines[1 + r].split()
        if len(parts) != 3:
            raise ParseError("expected 'u v w'", line=line_no)
        su, sv, sw = parts
        if not (su.isdigit() and sv.isdigit()):
            raise ParseError("node indices must be positive integers", line=line_no)
        u, v = int(su), int(sv)
        if not (1 <= u <= n and 1 <= v <= n):
            raise IndexOutOfRange(f"arc ({u},{v}) outside 1..{n}", line=line_no)
        try:
            w = parse_scalar_token(sw)
        except ParseError as exc:
            raise ParseError(str(exc.args[0]), line=line_no, column=3) from None
        edges.append((u, v, w))
    return GraphSpec(n, tuple(edges))
