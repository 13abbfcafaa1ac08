"""Tests for the congruence decision service and the modulus"""
from fractions import Fraction

import pytest

from qcong.core.exceptions import (
    BadOraclePrime,
    DenominatorDivisibleByP,
    DenominatorNotCoprime,
    InvalidPrime,
)
from qcong.models.modulus import QModulus
from qcong.models.polynomial import IntPoly, monic_divrem
from qcong.models.ratfunc import RatFunc
from qcong.models.verdict import Failure, Verdict
from qcong.services.congruence_service import CongruenceService
from qcong.services.qkit_service import QKitService
from qcong.services.theorem_service import TheoremService


class TestModulus:
    def test_rejects_bad_primes(self):
        with pytest.raises(InvalidPrime):
            QModulus(2, 1)
        with pytest.raises(InvalidPrime):
            QModulus(9, 1)
        with pytest.raises(ValueError):
            QModulus(5, 0)

    def test_degree(self):
        assert QModulus(7, 3).degree == 18

    @pytest.mark.parametrize("p,k", [(3, 1), (5, 2), (7, 3)])
    def test_fast_divrem_matches_long_division(self, rng, p, k):
        modulus = QModulus(p, k)
        for _ in range(10):
            a = IntPoly(rng.randint(-(10**9), 10**9) for _ in range(rng.randint(0, 60)))
            assert modulus.divrem(a) == monic_divrem(a, modulus.poly)

    def test_phi_valuation(self):
        modulus = QModulus(5, 1)
        cofactor = IntPoly([1, 0, 1])
        v, reduced = modulus.phi_valuation(modulus.poly ** 3 * cofactor)
        assert v == 3
        assert reduced == cofactor


class TestCheckCongruence:
    def test_holds_with_witness(self):
        modulus = QModulus(3, 1)
        # (2 + q)/(1 + q) - (1 - q) = [3]_q / (1 + q)
        verdict = CongruenceService.check_congruence(
            RatFunc(IntPoly([2, 1]), IntPoly([1, 1])), RatFunc(IntPoly([1, -1])), modulus
        )
        assert verdict.holds
        assert verdict.witness == RatFunc(IntPoly.one(), IntPoly([1, 1]))

    def test_violation_reports_remainder(self):
        modulus = QModulus(5, 2)
        verdict = CongruenceService.check_congruence(RatFunc(IntPoly([1, 1])), RatFunc(0), modulus)
        assert not verdict
        assert verdict.failure.stage == "divisibility"
        assert verdict.failure.remainder == IntPoly([1, 1])

    def test_common_phi_factor_is_cancelled(self):
        modulus = QModulus(5, 1)
        big_p = modulus.poly
        # ([5] (1 + q)) / ([5] (2 + q)) is Φ-integral once reduced
        lhs = RatFunc(big_p * IntPoly([1, 1]), big_p * IntPoly([2, 1]))
        rhs = RatFunc(IntPoly([1, 1]), IntPoly([2, 1]))
        assert CongruenceService.check_congruence(lhs, rhs, modulus).holds

    def test_denominator_not_coprime(self):
        modulus = QModulus(5, 1)
        with pytest.raises(DenominatorNotCoprime):
            CongruenceService.check_congruence(RatFunc(IntPoly.one(), modulus.poly), RatFunc(0), modulus)

    def test_verdict_requires_exactly_one_payload(self):
        with pytest.raises(ValueError):
            Verdict(holds=True)
        with pytest.raises(ValueError):
            Verdict(holds=False, witness=RatFunc(0), failure=Failure(None, "identity"))



@pytest.mark.parametrize("p", [3, 5, 7])
def test_holding_at_k_implies_holding_below(rng, p):
    for _ in range(10):
        k = rng.randint(1, 4)
        # nonzero, degree below p - 1: coprime to [p]_q
        den = IntPoly(rng.randint(1, 9) for _ in range(p - 1))
        extra = IntPoly(rng.randint(1, 9) for _ in range(p - 1))
        rhs = RatFunc(IntPoly(rng.randint(-9, 9) for _ in range(6)), den)
        lhs = rhs + RatFunc(QModulus(p, k).poly * extra, den)
        verdicts = [CongruenceService.check_congruence(lhs, rhs, QModulus(p, j)).holds for j in range(1, 6)]
        assert verdicts == [j <= k for j in range(1, 6)], (k, verdicts)


def test_million_sized_field_agrees_with_exact_holds():
    built = TheoremService.build_statement("WOLSTQ", 7)
    assert CongruenceService.modular_oracle(built.lhs, built.rhs, built.modulus, 1_000_003)

class TestClassical:
    def test_lehmer_p5(self):
        assert CongruenceService.classical_check(Fraction(3, 2), Fraction(39), 5, 2)

    def test_morley_p5(self):
        assert CongruenceService.classical_check(Fraction(6), Fraction(256), 5, 3)
        assert not CongruenceService.classical_check(Fraction(6), Fraction(257), 5, 3)

    def test_granville_p5_m2(self):
        assert CongruenceService.classical_check(Fraction(6), Fraction(31), 5, 2)

    def test_lerch_p5_m2(self):
        assert CongruenceService.classical_check(Fraction(6), Fraction(7, 12), 5, 1)

    def test_p_in_denominator(self):
        with pytest.raises(DenominatorDivisibleByP):
            CongruenceService.classical_check(Fraction(1, 5), Fraction(0), 5, 1)


def test_limit_check():
    lhs = RatFunc(IntPoly([1, 0, -1]), IntPoly([1, -1]))  # 1 + q in disguise
    rhs = RatFunc(QKitService.q_int(3))
    assert CongruenceService.q_limit_check(lhs, rhs, Fraction(2), Fraction(3))
    assert not CongruenceService.q_limit_check(lhs, rhs, Fraction(2), Fraction(4))


class TestOracle:
    def wolstenholme_sides(self, p, mutate=False):
        built = TheoremService.build_statement("WOLSTQ", p)
        if mutate:
            built = TheoremService.mutate(built)
        return built

    @pytest.mark.parametrize("p", [5, 7, 11])
    def test_agrees_with_exact_verdict(self, p):
        for mutate in (False, True):
            built = self.wolstenholme_sides(p, mutate)
            exact = CongruenceService.check_congruence(built.lhs, built.rhs, built.modulus).holds
            assert exact is not mutate
            for ell in CongruenceService.oracle_primes(7, "WOLSTQ", p, None, 3):
                assert CongruenceService.modular_oracle(built.lhs, built.rhs, built.modulus, ell) == exact

    def test_oracle_primes_are_deterministic(self):
        first = CongruenceService.oracle_primes(1, "LEHMERQ", 13, None, 3)
        assert first == CongruenceService.oracle_primes(1, "LEHMERQ", 13, None, 3)
        assert first != CongruenceService.oracle_primes(2, "LEHMERQ", 13, None, 3)
        assert all(2**16 <= ell < 2**21 for ell in first)

    def test_inadmissible_prime_is_retried(self):
        modulus = QModulus(5, 1)
        # leading coefficient 65537 of the denominator vanishes mod 65537
        lhs = RatFunc(modulus.poly, IntPoly([1, 65537]))
        assert CongruenceService.modular_oracle(lhs, RatFunc(0), modulus, 65537)

    def test_gives_up_after_retries(self):
        modulus = QModulus(5, 1)
        lhs = RatFunc(modulus.poly, IntPoly([1, 65537]))
        with pytest.raises(BadOraclePrime):
            CongruenceService.modular_oracle(lhs, RatFunc(0), modulus, 65537, retries=0)

    def test_denominator_meeting_phi_image_is_retried(self):
        modulus = QModulus(3, 1)
        # 1 + 65538 q + q^2 reduces to [3]_q mod 65537 but is coprime to it over Z
        lhs = RatFunc(modulus.poly, IntPoly([1, 65538, 1]))
        assert CongruenceService.check_congruence(lhs, RatFunc(0), modulus).holds
        assert CongruenceService.modular_oracle(lhs, RatFunc(0), modulus, 65537)
        with pytest.raises(BadOraclePrime):
            CongruenceService.modular_oracle(lhs, RatFunc(0), modulus, 65537, retries=0)

    def test_common_phi_factor_reaches_the_oracle_cleared(self):
        modulus = QModulus(5, 1)
        big_p = modulus.poly
        lhs = RatFunc(big_p * IntPoly([1, 1]), big_p * IntPoly([2, 1]))
        rhs = RatFunc(IntPoly([1, 1]), IntPoly([2, 1]))
        for ell in CongruenceService.oracle_primes(3, "X", 5, None, 3):
            assert CongruenceService.modular_oracle(lhs, rhs, modulus, ell)
