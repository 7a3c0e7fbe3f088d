"""HTTP service wrapping the solver library.

`models` defines the request/response schemas, `handlers` implements
them transport-free (the CLI calls these directly), and `app` exposes
the FastAPI application.
"""

from .app import app, create_app

__all__ = ["app", "create_app"]
