"""Interval elements over an idempotent base semiring.

Endpoints are stored in the base carrier's natural (numeric) total
order, `lo` below `hi`, which is how interval literals `[lo,hi]` are
written. Addition, multiplication and closure are all monotone in every
idempotent instance, so applying them endpoint-wise produces an
interval containing every pointwise combination, and the set of
intervals is itself a semiring with zero [0,0] and one [1,1]
(degenerate intervals at the base constants).

Intervals over the non-idempotent rational field are rejected:
endpoint-wise rules are not containment-safe there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ClosureUndefined, DomainMismatch, ElementOutOfDomain, ParseError
from .semirings import Semiring


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object

    def __repr__(self) -> str:
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True, repr=False)
class IntervalSemiring(Semiring):
    """Intervals over one idempotent base, operated on endpoint-wise."""

    base: Semiring

    kind = "interval"
    idempotent = True

    def __post_init__(self):
        if isinstance(self.base, IntervalSemiring):
            raise ValueError("intervals of intervals are not supported")
        if not self.base.idempotent:
            raise ValueError("interval elements need an idempotent base semiring")

    @property
    def zero(self):
        return Interval(self.base.zero, self.base.zero)

    @property
    def one(self):
        return Interval(self.base.one, self.base.one)

    def interval(self, lo, hi) -> Interval:
        lo = self.base.coerce(lo)
        hi = self.base.coerce(hi)
        if not self.base.natural_le(lo, hi):
            raise DomainMismatch(
                f"interval endpoints out of order: "
                f"[{self.base.format_element(lo)},{self.base.format_element(hi)}]"
            )
        return Interval(lo, hi)

    def coerce(self, value):
        if isinstance(value, Interval):
            return self.interval(value.lo, value.hi)
        # scalars embed as degenerate intervals
        scalar = self.base.coerce(value)
        return Interval(scalar, scalar)

    def add(self, x, y):
        x = self.coerce(x)
        y = self.coerce(y)
        return Interval(self.base.add(x.lo, y.lo), self.base.add(x.hi, y.hi))

    def mul(self, x, y):
        x = self.coerce(x)
        y = self.coerce(y)
        return Interval(self.base.mul(x.lo, y.lo), self.base.mul(x.hi, y.hi))

    def closure(self, x):
        x = self.coerce(x)
        return Interval(self.base.closure(x.lo), self.base.closure(x.hi))

    def natural_le(self, x, y) -> bool:
        raise NotImplementedError("intervals carry no total order")

    def token(self) -> str:
        return self.base.token()

    def format_element(self, x) -> str:
        x = self.coerce(x)
        return f"[{self.base.format_element(x.lo)},{self.base.format_element(x.hi)}]"

    def parse_element(self, token: str):
        if token.startswith("["):
            if not token.endswith("]"):
                raise ParseError(f"unterminated interval literal {token!r}")
            body = token[1:-1]
            parts = body.split(",")
            if len(parts) != 2 or not parts[0] or not parts[1]:
                raise ParseError(f"interval literals are written [lo,hi], got {token!r}")
            lo = self.base.parse_element(parts[0])
            hi = self.base.parse_element(parts[1])
            try:
                return self.interval(lo, hi)
            except DomainMismatch as exc:
                raise ElementOutOfDomain(str(exc)) from None
        # scalar literal: degenerate interval
        scalar = self.base.parse_element(token)
        return Interval(scalar, scalar)

    def contains(self, x: Interval, value) -> bool:
        """Whether a base element lies between the endpoints."""
        x = self.coerce(x)
        value = self.base.coerce(value)
        return self.base.natural_le(x.lo, value) and self.base.natural_le(value, x.hi)
