"""Semiring descriptors and their scalar operations.

A semiring bundles a carrier set with two associative operations: a
commutative addition and a multiplication that distributes over it,
plus neutral elements ``zero`` (absorbing under multiplication) and
``one``, with zero != one. Idempotent instances (x + x = x) carry the
canonical partial order x <= y iff x (+) y = y, under which addition is
the supremum. The partial unary closure obeys x* = 1 (+) x (*) x* when
it exists; in a field it is (1 - x)^-1.

Scalar elements are exact: finite numbers are `fractions.Fraction`,
unbounded endpoints are the `POS_INF`/`NEG_INF` markers, and the
two-element instance uses plain `bool`. No floating point is ever
involved, so element equality is structural and exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ClosureUndefined,
    DomainMismatch,
    ElementOutOfDomain,
    NotIdempotent,
    ParseError,
    UnknownSemiring,
)
from .precision import PrecisionPolicy, round_rational


class _InfinityMarker:
    """Singleton +/- infinity endpoints for the extended numeric carriers."""

    __slots__ = ("_label",)

    def __init__(self, label: str):
        self._label = label

    def __repr__(self) -> str:
        return self._label

    def __neg__(self) -> "_InfinityMarker":
        return NEG_INF if self is POS_INF else POS_INF


POS_INF = _InfinityMarker("inf")
NEG_INF = _InfinityMarker("-inf")


def extended_le(x, y) -> bool:
    """Numeric <= on Fraction values extended with the infinity markers."""
    if x is NEG_INF or y is POS_INF:
        return True
    if x is POS_INF:
        return y is POS_INF
    if y is NEG_INF:
        return x is NEG_INF
    return x <= y


def extended_min(x, y):
    return x if extended_le(x, y) else y


def extended_max(x, y):
    return y if extended_le(x, y) else x


def parse_scalar_token(token: str):
    """Parse one scalar literal: `p/q`, integer, exact decimal, `inf`, `-inf`.

    Decimals are read exactly (0.4 becomes 2/5, never a float).
    """
    if token == "inf":
        return POS_INF
    if token == "-inf":
        return NEG_INF
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"invalid element literal {token!r}") from None


def format_scalar(value) -> str:
    if value is POS_INF:
        return "inf"
    if value is NEG_INF:
        return "-inf"
    if isinstance(value, bool):
        return "1" if value else "0"
    return str(value)


def _as_extended_rational(value, what: str):
    """Canonicalize to Fraction or an infinity marker; reject everything else."""
    if value is POS_INF or value is NEG_INF:
        return value
    if isinstance(value, bool):
        raise DomainMismatch(f"{value!r} is not {what}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise DomainMismatch(f"{value!r} is not {what}")


class Semiring:
    """Descriptor plus operation table for one semiring instance.

    Instances are immutable values: all operations are pure, elements
    are never mutated, and descriptors can be shared freely between
    threads. `coerce` returns the canonical form of an element (reduced
    fraction, marker singleton, bool) or raises DomainMismatch.
    """

    kind = "abstract"
    idempotent = False
    commutative = True

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def coerce(self, value):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def closure(self, x):
        raise NotImplementedError

    def leq(self, x, y) -> bool:
        """Canonical order: x <= y iff x (+) y = y. Idempotent instances only."""
        if not self.idempotent:
            raise NotIdempotent(f"the {self.kind} semiring has no canonical order")
        x = self.coerce(x)
        y = self.coerce(y)
        return self.add(x, y) == y

    def natural_le(self, x, y) -> bool:
        """Total order on the carrier, used to orient interval endpoints."""
        raise NotImplementedError

    def token(self) -> str:
        """The name accepted in file headers and CLI flags."""
        raise NotImplementedError

    def format_element(self, x) -> str:
        return format_scalar(self.coerce(x))

    def parse_element(self, token: str):
        value = parse_scalar_token(token)
        try:
            return self.coerce(value)
        except DomainMismatch as exc:
            raise ElementOutOfDomain(str(exc)) from None

    def __repr__(self) -> str:
        return f"<semiring {self.token()}>"


@dataclass(frozen=True, repr=False)
class RationalField(Semiring):
    """Exact rational numbers under ordinary + and *.

    With a rounding policy, every addition and multiplication result is
    replaced by its minimal-denominator approximation within epsilon;
    the closure stays exact. Not idempotent, so it has no canonical
    order.
    """

    precision: PrecisionPolicy = PrecisionPolicy()

    kind = "rational"
    idempotent = False

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, bool) or value is POS_INF or value is NEG_INF:
            raise DomainMismatch(f"{value!r} is not a rational-field element")
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, Fraction):
            return value
        raise DomainMismatch(f"{value!r} is not a rational-field element")

    def _finish(self, q: Fraction) -> Fraction:
        return round_rational(q, self.precision) if self.precision.rounds else q

    def add(self, x, y):
        return self._finish(self.coerce(x) + self.coerce(y))

    def mul(self, x, y):
        return self._finish(self.coerce(x) * self.coerce(y))

    def closure(self, x):
        x = self.coerce(x)
        if x == 1:
            raise ClosureUndefined("1 has no closure in the rational field")
        return Fraction(1) / (Fraction(1) - x)

    def natural_le(self, x, y) -> bool:
        return self.coerce(x) <= self.coerce(y)

    def token(self) -> str:
        return "rational"


@dataclass(frozen=True, repr=False)
class MinPlus(Semiring):
    """Rationals with +inf; addition is min, multiplication is numeric +.

    zero = +inf, one = 0. The canonical order is the reverse of the
    numeric order. Closure is 0 for x >= 0 and undefined below 0
    (negative values make the power series diverge).
    """

    kind = "minplus"
    idempotent = True

    @property
    def zero(self):
        return POS_INF

    @property
    def one(self):
        return Fraction(0)

    def coerce(self, value):
        if value is NEG_INF:
            raise DomainMismatch("-inf is not a min-plus element")
        return _as_extended_rational(value, "a min-plus element")

    def add(self, x, y):
        return extended_min(self.coerce(x), self.coerce(y))

    def mul(self, x, y):
        x = self.coerce(x)
        y = self.coerce(y)
        if x is POS_INF or y is POS_INF:
            return POS_INF
        return x + y

    def closure(self, x):
        x = self.coerce(x)
        if extended_le(Fraction(0), x):
            return Fraction(0)
        raise ClosureUndefined(f"min-plus closure undefined for negative value {x}")

    def natural_le(self, x, y) -> bool:
        return extended_le(self.coerce(x), self.coerce(y))

    def token(self) -> str:
        return "minplus"


@dataclass(frozen=True, repr=False)
class MaxPlus(Semiring):
    """Rationals with -inf; addition is max, multiplication is numeric +.

    zero = -inf, one = 0. Closure is 0 for x <= 0 and undefined above 0.
    """

    kind = "maxplus"
    idempotent = True

    @property
    def zero(self):
        return NEG_INF

    @property
    def one(self):
        return Fraction(0)

    def coerce(self, value):
        if value is POS_INF:
            raise DomainMismatch("inf is not a max-plus element")
        return _as_extended_rational(value, "a max-plus element")

    def add(self, x, y):
        return extended_max(self.coerce(x), self.coerce(y))

    def mul(self, x, y):
        x = self.coerce(x)
        y = self.coerce(y)
        if x is NEG_INF or y is NEG_INF:
            return NEG_INF
        return x + y

    def closure(self, x):
        x = self.coerce(x)
        if extended_le(x, Fraction(0)):
            return Fraction(0)
        raise ClosureUndefined(f"max-plus closure undefined for positive value {x}")

    def natural_le(self, x, y) -> bool:
        return extended_le(self.coerce(x), self.coerce(y))

    def token(self) -> str:
        return "maxplus"


@dataclass(frozen=True, repr=False)
class MaxMin(Semiring):
    """Elements of [lower, upper]; addition is max, multiplication is min.

    zero = lower, one = upper; closure is always one. The bounds may be
    -inf / +inf, in which case the matching marker is a legal element.
    """

    lower: object = NEG_INF
    upper: object = POS_INF

    kind = "maxmin"
    idempotent = True

    def __post_init__(self):
        try:
            lo = _as_extended_rational(self.lower, "a bound")
            hi = _as_extended_rational(self.upper, "a bound")
        except DomainMismatch as exc:
            raise ValueError(str(exc)) from None
        if lo == hi or not extended_le(lo, hi):
            raise ValueError("bounds must satisfy lower < upper")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def zero(self):
        return self.lower

    @property
    def one(self):
        return self.upper

    def coerce(self, value):
        value = _as_extended_rational(value, f"a {self.token()} element")
        if not (extended_le(self.lower, value) and extended_le(value, self.upper)):
            raise DomainMismatch(
                f"{format_scalar(value)} lies outside "
                f"[{format_scalar(self.lower)}, {format_scalar(self.upper)}]"
            )
        return value

    def add(self, x, y):
        return extended_max(self.coerce(x), self.coerce(y))

    def mul(self, x, y):
        return extended_min(self.coerce(x), self.coerce(y))

    def closure(self, x):
        self.coerce(x)
        return self.upper

    def natural_le(self, x, y) -> bool:
        return extended_le(self.coerce(x), self.coerce(y))

    def token(self) -> str:
        return f"maxmin:{format_scalar(self.lower)}:{format_scalar(self.upper)}"


@dataclass(frozen=True, repr=False)
class Boolean(Semiring):
    """{False, True} under or/and; closure is always True."""

    kind = "boolean"
    idempotent = True

    @property
    def zero(self):
        return False

    @property
    def one(self):
        return True

    def coerce(self, value):
        if isinstance(value, bool):
            return value
        raise DomainMismatch(f"{value!r} is not a boolean element")

    def add(self, x, y):
        return self.coerce(x) or self.coerce(y)

    def mul(self, x, y):
        return self.coerce(x) and self.coerce(y)

    def closure(self, x):
        self.coerce(x)
        return True

    def natural_le(self, x, y) -> bool:
        return self.coerce(x) <= self.coerce(y)

    def token(self) -> str:
        return "boolean"

    def parse_element(self, token: str):
        if token == "1":
            return True
        if token == "0":
            return False
        raise ElementOutOfDomain(f"boolean elements are written 0 or 1, got {token!r}")


@dataclass(frozen=True, repr=False)
class MaxTimes(Semiring):
    """Rationals in [0, 1]; addition is max, multiplication is the product.

    zero = 0, one = 1; closure is always 1 because powers never exceed 1.
    """

    kind = "maxtimes"
    idempotent = True

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, bool) or value is POS_INF or value is NEG_INF:
            raise DomainMismatch(f"{value!r} is not a max-times element")
        if isinstance(value, int):
            value = Fraction(value)
        if not isinstance(value, Fraction):
            raise DomainMismatch(f"{value!r} is not a max-times element")
        if not Fraction(0) <= value <= Fraction(1):
            raise DomainMismatch(f"{value} lies outside [0, 1]")
        return value

    def add(self, x, y):
        return max(self.coerce(x), self.coerce(y))

    def mul(self, x, y):
        return self.coerce(x) * self.coerce(y)

    def closure(self, x):
        self.coerce(x)
        return Fraction(1)

    def natural_le(self, x, y) -> bool:
        return self.coerce(x) <= self.coerce(y)

    def token(self) -> str:
        return "maxtimes"


def semiring_from_token(token: str) -> Semiring:
    """Build a semiring descriptor from its file-header / CLI token.

    Accepted tokens: rational, minplus, maxplus, maxmin:a:b, boolean,
    maxtimes.
    """
    if token == "rational":
        return RationalField()
    if token == "minplus":
        return MinPlus()
    if token == "maxplus":
        return MaxPlus()
    if token == "boolean":
        return Boolean()
    if token == "maxtimes":
        return MaxTimes()
    if token.startswith("maxmin:"):
        parts = token.split(":")
        if len(parts) != 3:
            raise UnknownSemiring(f"maxmin needs two bounds, got {token!r}")
        try:
            lower = parse_scalar_token(parts[1])
            upper = parse_scalar_token(parts[2])
            return MaxMin(lower, upper)
        except (ParseError, ValueError) as exc:
            raise UnknownSemiring(f"invalid maxmin bounds in {token!r}: {exc}") from None
    raise UnknownSemiring(f"unknown semiring token {token!r}")
