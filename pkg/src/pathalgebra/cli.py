"""Command-line client for the solver service.

The CLI is a thin wrapper around the service request/response models:
it reads local files into a request, executes it (in-process by
default, or against a running server with --server), and prints the
response text verbatim on standard output. Diagnostics go to standard
error. Exit codes: 0 success, 1 domain errors (undefined closure,
non-stabilizing iteration, singular system), 2 usage or parse errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click
import httpx

from .errors import PathAlgebraError, RemoteServiceError, error_category
from .service import handlers
from .service.models import (
    ClosureRequest,
    ClosureResponse,
    CountsRequest,
    CountsResponse,
    FactorRequest,
    FactorResponse,
    PathRequest,
    PathResponse,
    SolveRequest,
    SolveResponse,
)

SOLVE_METHODS = ["ldm", "jacobi", "gauss-seidel", "series", "field-star"]
CLOSURE_METHODS = ["series", "ldm", "field-star"]
PROBLEMS = ["shortest", "widest", "reliable", "reach"]
COUNTED_OPS = ["forward", "back", "diagonal", "solve", "factor", "factor-symmetric"]

_ROUTES = {
    SolveRequest: ("/v1/solve", SolveResponse, handlers.handle_solve),
    ClosureRequest: ("/v1/closure", ClosureResponse, handlers.handle_closure),
    FactorRequest: ("/v1/factor", FactorResponse, handlers.handle_factor),
    PathRequest: ("/v1/path", PathResponse, handlers.handle_path),
    CountsRequest: ("/v1/counts", CountsResponse, handlers.handle_counts),
}


class ServiceClient:
    """Executes requests in-process, or over HTTP when a server URL is set."""

    def __init__(self, base_url: str | None = None):
        self.base_url = base_url.rstrip("/") if base_url else None

    def call(self, request):
        path, response_model, local = _ROUTES[type(request)]
        if self.base_url is None:
            return local(request)
        resp = httpx.post(self.base_url + path, json=request.model_dump(), timeout=60.0)
        if resp.status_code == 200:
            return response_model.model_validate(resp.json())
        try:
            info = resp.json()["error"]
            category, message = info["category"], info["message"]
        except Exception:
            category = "domain" if resp.status_code == 422 else "input"
            message = resp.text
        raise RemoteServiceError(message, category)


def _fail(exc: PathAlgebraError, prefix: str = "error") -> None:
    click.echo(f"{prefix}: {exc}", err=True)
    sys.exit(1 if error_category(exc) == "domain" else 2)


def _run(client: ServiceClient, request, domain_prefix: str = "error"):
    try:
        return client.call(request)
    except PathAlgebraError as exc:
        if error_category(exc) == "domain":
            _fail(exc, domain_prefix)
        _fail(exc)


def _emit_diagnostics(resp) -> None:
    counts = getattr(resp, "counts", None)
    if counts is not None:
        click.echo(counts.as_line(), err=True)
    sweeps = getattr(resp, "sweeps", None)
    if sweeps is not None:
        click.echo(f"sweeps={sweeps}", err=True)


_file_arg = click.Path(exists=True, dir_okay=False, path_type=Path)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option(
    "--server",
    metavar="URL",
    default=None,
    envvar="PATHALGEBRA_SERVER",
    help="Send requests to a running service instead of computing in-process.",
)
@click.pass_context
def main(ctx: click.Context, server: str | None) -> None:
    """Solve Bellman equations X = A·X (+) B over exchangeable semirings.

    Matrices and vectors are text files ('semiring: <token>' header,
    then dimensions, then rows); vectors are 1-column matrices. A[u][v]
    holds the arc u->v, and the right-hand side marks the target, so
    solutions read 'best value from row index to the target'; transpose
    the arcs for single-source variants.
    """
    ctx.obj = ServiceClient(server)


@main.command()
@click.argument("matrix_file", type=_file_arg)
@click.argument("rhs_file", type=_file_arg)
@click.option("--method", type=click.Choice(SOLVE_METHODS), default="ldm", show_default=True)
@click.option("--limit", type=click.IntRange(min=1), default=None,
              help="Iteration/series cap; defaults to the matrix dimension.")
@click.option("--epsilon", metavar="P/Q", default=None,
              help="Round rational add/mul results to within this error.")
@click.option("--counts", "show_counts", is_flag=True,
              help="Append the op-count report to standard error.")
@click.pass_obj
def solve(client, matrix_file, rhs_file, method, limit, epsilon, show_counts):
    """Solve X = A·X (+) B for the vector X."""
    req = SolveRequest(
        matrix=matrix_file.read_text(),
        rhs=rhs_file.read_text(),
        method=method,
        limit=limit,
        epsilon=epsilon,
    )
    resp = _run(client, req)
    click.echo(resp.output, nl=False)
    if show_counts:
        _emit_diagnostics(resp)


@main.command()
@click.argument("matrix_file", type=_file_arg)
@click.option("--method", type=click.Choice(CLOSURE_METHODS), default="series", show_default=True)
@click.option("--limit", type=click.IntRange(min=1), default=None,
              help="Series cap; defaults to the matrix dimension.")
@click.pass_obj
def closure(client, matrix_file, method, limit):
    """Compute the matrix closure A* = I (+) A (+) A² (+) ..."""
    req = ClosureRequest(matrix=matrix_file.read_text(), method=method, limit=limit)
    resp = _run(client, req)
    click.echo(resp.output, nl=False)


@main.command()
@click.argument("matrix_file", type=_file_arg)
@click.option("--symmetric", is_flag=True, help="Use the symmetric variant (M = L transposed).")
@click.option("--counts", "show_counts", is_flag=True,
              help="Append the op-count report to standard error.")
@click.pass_obj
def factor(client, matrix_file, symmetric, show_counts):
    """Factor A into L, D, M; prints them packed into one matrix."""
    req = FactorRequest(matrix=matrix_file.read_text(), symmetric=symmetric)
    resp = _run(client, req)
    click.echo(resp.output, nl=False)
    if show_counts:
        _emit_diagnostics(resp)


@main.command()
@click.argument("graph_file", type=_file_arg)
@click.option("--problem", type=click.Choice(PROBLEMS), required=True)
@click.option("--target", type=click.IntRange(min=1), required=True)
@click.option("--method", type=click.Choice(SOLVE_METHODS), default="jacobi", show_default=True)
@click.option("--limit", type=click.IntRange(min=1), default=None)
@click.option("--counts", "show_counts", is_flag=True)
@click.pass_obj
def path(client, graph_file, problem, target, method, limit, show_counts):
    """Best path values from every node to the target.

    Problems: shortest (min-plus), widest (max-min), reliable
    (max-times, weights in [0,1]), reach (boolean). A negative cycle
    under 'shortest' has no stable solution and exits with code 1.
    """
    req = PathRequest(
        graph=graph_file.read_text(),
        problem=problem,
        target=target,
        method=method,
        limit=limit,
    )
    resp = _run(client, req, domain_prefix="error: no stable solution")
    click.echo(resp.output, nl=False)
    if show_counts:
        _emit_diagnostics(resp)


@main.command()
@click.argument("matrix_file", type=_file_arg)
@click.argument("rhs_file", type=_file_arg, required=False)
@click.option("--op", type=click.Choice(COUNTED_OPS), required=True)
@click.pass_obj
def counts(client, matrix_file, rhs_file, op):
    """Print the op-count report of one algorithm run."""
    if op in ("forward", "back", "diagonal", "solve") and rhs_file is None:
        raise click.UsageError(f"--op {op} requires a right-hand-side file")
    req = CountsRequest(
        op=op,
        matrix=matrix_file.read_text(),
        rhs=rhs_file.read_text() if rhs_file is not None else None,
    )
    resp = _run(client, req)
    click.echo(resp.line)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("pathalgebra.service.app:app", host=host, port=port)


if __name__ == "__main__":
    main()
