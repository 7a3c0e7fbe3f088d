"""Controlled-precision rational arithmetic.

Rounding replaces a rational q by the minimal-denominator rational
within a user-chosen distance epsilon, found by continued-fraction
(Stern-Brocot) descent. The result is deterministic and never has a
larger denominator than q itself, so repeated rounding cannot blow up
representations.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction


class RoundingMode(enum.Enum):
    EXACT = "exact"
    ROUND_EACH_OP = "round-each-op"


@dataclass(frozen=True)
class PrecisionPolicy:
    """How much error the user tolerates and when rounding is applied.

    epsilon = 0 forces exact mode regardless of the requested mode.
    """

    epsilon: Fraction = Fraction(0)
    mode: RoundingMode = RoundingMode.EXACT

    def __post_init__(self):
        eps = Fraction(self.epsilon)
        if eps < 0:
            raise ValueError("epsilon must be nonnegative")
        object.__setattr__(self, "epsilon", eps)
        if eps == 0:
            object.__setattr__(self, "mode", RoundingMode.EXACT)

    @property
    def rounds(self) -> bool:
        return self.mode is RoundingMode.ROUND_EACH_OP and self.epsilon > 0


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Rational with the smallest denominator in [lo, hi].

    Among integers (denominator 1) the one closest to zero is returned;
    for denominators >= 2 the minimal-denominator rational in an
    interval is unique.
    """
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    ceil_lo = math.ceil(lo)
    if ceil_lo <= hi:
        return Fraction(ceil_lo)
    whole = math.floor(lo)
    return whole + Fraction(1) / simplest_between(1 / (hi - whole), 1 / (lo - whole))


def round_rational(q, policy: PrecisionPolicy) -> Fraction:
    """Best rational within policy.epsilon of q, minimal denominator."""
    q = Fraction(q)
    if policy.epsilon == 0:
        return q
    return simplest_between(q - policy.epsilon, q + policy.epsilon)
