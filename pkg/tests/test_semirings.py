"""Scalar semiring operations, closures, and the axiom battery."""

import random
from fractions import Fraction as F

import pytest

import pathalgebra as pa
from helpers import (
    assert_closure_identity,
    assert_semiring_axioms,
    assert_star_series,
    sample_closure_defined,
    sample_element,
)

MP = pa.MinPlus()
XP = pa.MaxPlus()
RF = pa.RationalField()
MM01 = pa.MaxMin(0, 1)
MMFULL = pa.MaxMin(pa.NEG_INF, pa.POS_INF)
BOOL = pa.Boolean()
MT = pa.MaxTimes()

ALL_SCALAR = [RF, MP, XP, MM01, MMFULL, BOOL, MT]


class TestAdd:
    def test_minplus_is_min(self):
        assert MP.add(5, 3) == F(3)

    def test_maxplus_zero_is_identity(self):
        assert XP.add(pa.NEG_INF, 7) == F(7)

    def test_rational_exact_sum(self):
        assert RF.add(F(1, 2), F(1, 3)) == F(5, 6)

    def test_maxmin_is_max(self):
        assert MM01.add(F(2, 5), F(9, 10)) == F(9, 10)

    def test_boolean_is_or(self):
        assert BOOL.add(False, True) is True
        assert BOOL.add(False, False) is False

    def test_maxtimes_is_max(self):
        assert MT.add(F(1, 4), F(3, 4)) == F(3, 4)

    def test_domain_mismatch(self):
        with pytest.raises(pa.DomainMismatch):
            MP.add(pa.NEG_INF, 3)
        with pytest.raises(pa.DomainMismatch):
            RF.add(pa.POS_INF, 1)
        with pytest.raises(pa.DomainMismatch):
            BOOL.add(1, True)
        with pytest.raises(pa.DomainMismatch):
            MT.add(F(3, 2), F(1, 2))


class TestMul:
    def test_minplus_is_plus(self):
        assert MP.mul(5, 3) == F(8)

    def test_maxmin_is_min(self):
        assert MM01.mul(F(2, 5), F(9, 10)) == F(2, 5)

    def test_zero_annihilates_everywhere(self):
        for sr in ALL_SCALAR:
            rng = random.Random(7)
            for _ in range(20):
                x = sample_element(sr, rng)
                assert sr.mul(sr.zero, x) == sr.zero
                assert sr.mul(x, sr.zero) == sr.zero

    def test_rational_exact_product(self):
        assert RF.mul(F(2, 3), F(9, 4)) == F(3, 2)

    def test_boolean_is_and(self):
        assert BOOL.mul(True, False) is False
        assert BOOL.mul(True, True) is True


class TestClosure:
    def test_maxplus_nonpositive(self):
        assert XP.closure(-3) == F(0)
        assert XP.closure(pa.NEG_INF) == F(0)

    def test_maxplus_positive_undefined(self):
        with pytest.raises(pa.ClosureUndefined):
            XP.closure(2)

    def test_minplus_mirror_convention(self):
        assert MP.closure(3) == F(0)
        assert MP.closure(pa.POS_INF) == F(0)
        with pytest.raises(pa.ClosureUndefined):
            MP.closure(-1)

    def test_rational_geometric(self):
        assert RF.closure(F(1, 2)) == F(2)
        assert RF.closure(F(3)) == F(-1, 2)
        with pytest.raises(pa.ClosureUndefined):
            RF.closure(F(1))

    def test_maxmin_always_one(self):
        assert MM01.closure(F(7, 10)) == F(1)
        assert MMFULL.closure(F(-5)) is pa.POS_INF

    def test_boolean_and_maxtimes(self):
        assert BOOL.closure(False) is True
        assert BOOL.closure(True) is True
        assert MT.closure(F(9, 10)) == F(1)

    def test_closure_identity_sampled(self):
        rng = random.Random(41)
        for sr in ALL_SCALAR:
            for _ in range(100):
                assert_closure_identity(sr, sample_closure_defined(sr, rng))

    def test_star_series_reaches_closure(self):
        rng = random.Random(42)
        for sr in [MP, XP, MM01, MMFULL, BOOL, MT]:
            for _ in range(50):
                assert_star_series(sr, sample_closure_defined(sr, rng))


class TestCanonicalOrder:
    def test_minplus_is_reverse_numeric(self):
        assert MP.leq(5, 3) is True
        assert MP.leq(3, 5) is False
        assert MP.leq(pa.POS_INF, -100) is True

    def test_maxplus_bottom(self):
        assert XP.leq(pa.NEG_INF, 123) is True

    def test_maxmin_matches_numeric(self):
        assert MM01.leq(F(1, 4), F(1, 2)) is True
        assert MM01.leq(F(1, 2), F(1, 4)) is False

    def test_field_has_no_order(self):
        with pytest.raises(pa.NotIdempotent):
            RF.leq(1, 2)


class TestAxiomBattery:
    @pytest.mark.parametrize("sr", ALL_SCALAR, ids=lambda s: s.token())
    def test_axioms(self, sr):
        assert_semiring_axioms(sr, random.Random(hash(sr.token()) & 0xFFFF), triples=300)


class TestDescriptors:
    def test_zero_differs_from_one(self):
        for sr in ALL_SCALAR:
            assert sr.zero != sr.one

    def test_idempotency_flags(self):
        assert not RF.idempotent
        for sr in [MP, XP, MM01, MMFULL, BOOL, MT]:
            assert sr.idempotent

    def test_maxmin_bounds_validation(self):
        with pytest.raises(ValueError):
            pa.MaxMin(1, 1)
        with pytest.raises(ValueError):
            pa.MaxMin(2, 1)

    def test_tokens_round_trip(self):
        for sr in ALL_SCALAR:
            assert pa.semiring_from_token(sr.token()) == sr

    def test_unknown_token(self):
        with pytest.raises(pa.UnknownSemiring):
            pa.semiring_from_token("tropical")
        with pytest.raises(pa.UnknownSemiring):
            pa.semiring_from_token("maxmin:1")
        with pytest.raises(pa.UnknownSemiring):
            pa.semiring_from_token("maxmin:2:1")

    def test_scalar_literals(self):
        assert MP.parse_element("inf") is pa.POS_INF
        assert MP.parse_element("0.4") == F(2, 5)
        assert RF.parse_element("-8/23") == F(-8, 23)
        assert BOOL.parse_element("1") is True
        with pytest.raises(pa.ElementOutOfDomain):
            XP.parse_element("inf")
        with pytest.raises(pa.ElementOutOfDomain):
            BOOL.parse_element("true")
        with pytest.raises(pa.ParseError):
            MP.parse_element("three")

    def test_format_is_canonical(self):
        assert RF.format_element(F(6, 4)) == "3/2"
        assert MP.format_element(pa.POS_INF) == "inf"
        assert BOOL.format_element(True) == "1"
        assert MMFULL.token() == "maxmin:-inf:inf"
