"""Congruence decision service.

A ≡ B (mod [p]_q^k) means: write A - B with a denominator coprime to the
cyclotomic polynomial Φ_p = [p]_q; then Φ_p^k divides the numerator. [p]_q is
monic and irreducible, so the test is a single exact monic division over the
integers.
"""
import logging
import random
from fractions import Fraction
from typing import List, Optional

from sympy import isprime, nextprime

from qcong.core.config import settings
from qcong.core.exceptions import (
    BadOraclePrime,
    DenominatorDivisibleByP,
    DenominatorNotCoprime,
    InternalInconsistency,
)
from qcong.models.finite_field import FpPoly, mod_prime_image
from qcong.models.modulus import QModulus
from qcong.models.ratfunc import RatFunc
from qcong.models.verdict import Failure, Verdict

logger = logging.getLogger(__name__)


class _InadmissiblePrime(Exception):
    pass


class CongruenceService:
    """Exact, classical and modular congruence checks"""

    @staticmethod
    def clear_phi(value: RatFunc, modulus: QModulus) -> RatFunc:
        """
        Cancel the powers of Φ_p shared by numerator and denominator.

        Raises DenominatorNotCoprime when the lowest-terms denominator is still
        divisible by Φ_p.
        """
        v_den, den = modulus.phi_valuation(value.den)
        if v_den == 0:
            return value
        num = value.num
        if not num.is_zero:
            v_num, _ = modulus.phi_valuation(num)
            if v_num < v_den:
                raise DenominatorNotCoprime(
                    f"[{modulus.p}]_q divides the denominator (valuation {v_den - v_num})"
                )
            for _ in range(v_den):
                num = num.div_qint(modulus.p)
        return RatFunc(num, den)

    @staticmethod
    def check_congruence(lhs: RatFunc, rhs: RatFunc, modulus: QModulus) -> Verdict:
        """Decide lhs ≡ rhs (mod [p]_q^k); the witness is (lhs - rhs) / [p]_q^k."""
        lhs = CongruenceService.clear_phi(lhs, modulus)
        rhs = CongruenceService.clear_phi(rhs, modulus)
        if lhs.den == rhs.den:
            numerator, denominator = lhs.num - rhs.num, lhs.den
        else:
            numerator = lhs.num * rhs.den - rhs.num * lhs.den
            denominator = lhs.den * rhs.den

        quotient, remainder = modulus.divrem(numerator)
        if remainder:
            logger.debug(f"🔍 [CONGRUENCE] {modulus!r}: nonzero remainder of degree {remainder.degree}")
            return Verdict(holds=False, failure=Failure(remainder=remainder, stage="divisibility"))

        if quotient * modulus.poly != numerator:
            logger.error(f"❌ [CONGRUENCE] witness does not reconstruct the difference for {modulus!r}")
            raise InternalInconsistency("congruence witness failed re-verification")
        return Verdict(holds=True, witness=RatFunc(quotient, denominator))

    @staticmethod
    def check_identity(lhs: RatFunc, rhs: RatFunc) -> bool:
        """Exact equality of rational functions"""
        if lhs.den == rhs.den:
            return lhs.num == rhs.num
        return lhs.num * rhs.den == rhs.num * lhs.den

    @staticmethod
    def classical_check(lhs: Fraction, rhs: Fraction, p: int, k: int) -> bool:
        """lhs ≡ rhs (mod p^k) for p-integral rationals"""
        lhs, rhs = Fraction(lhs), Fraction(rhs)
        if lhs.denominator % p == 0 or rhs.denominator % p == 0:
            raise DenominatorDivisibleByP(f"{p} divides a denominator of {lhs} or {rhs}")
        diff = lhs - rhs
        modulus = p**k
        return diff.numerator * pow(diff.denominator, -1, modulus) % modulus == 0

    @staticmethod
    def q_limit_check(
        statement_lhs: RatFunc,
        statement_rhs: RatFunc,
        classical_lhs: Fraction,
        classical_rhs: Fraction,
    ) -> bool:
        """Both q-sides reproduce the classical sides at q = 1."""
        return (
            statement_lhs.limit_at_one() == Fraction(classical_lhs)
            and statement_rhs.limit_at_one() == Fraction(classical_rhs)
        )

    # ------------------------------------------------------------------
    # Finite-field oracle
    # ------------------------------------------------------------------

    @staticmethod
    def _oracle_once(lhs: RatFunc, rhs: RatFunc, modulus: QModulus, ell: int) -> bool:
        lhs = CongruenceService.clear_phi(lhs, modulus)
        rhs = CongruenceService.clear_phi(rhs, modulus)
        for den in (lhs.den, rhs.den):
            if den.leading % ell == 0:
                raise _InadmissiblePrime(f"{ell} divides a leading coefficient")
        nl, dl = mod_prime_image(lhs.num, ell), mod_prime_image(lhs.den, ell)
        nr, dr = mod_prime_image(rhs.num, ell), mod_prime_image(rhs.den, ell)
        phi = FpPoly([1] * modulus.p, ell)
        if phi.gcd(dl * dr).degree > 0:
            raise _InadmissiblePrime(f"image of [{modulus.p}]_q meets the denominator mod {ell}")
        return mod_prime_image(modulus.poly, ell).divides(nl * dr - nr * dl)

    @staticmethod
    def modular_oracle(
        lhs: RatFunc,
        rhs: RatFunc,
        modulus: QModulus,
        ell: int,
        retries: Optional[int] = None,
    ) -> bool:
        """The divisibility test redone over F_ell; moves to the next prime when ell is inadmissible."""
        if retries is None:
            retries = settings.ORACLE_RETRIES
        if not isprime(ell):
            ell = nextprime(ell)
        for attempt in range(retries + 1):
            try:
                return CongruenceService._oracle_once(lhs, rhs, modulus, ell)
            except _InadmissiblePrime as exc:
                logger.warning(f"⚠️ [ORACLE] {exc}; retrying with the next prime (attempt {attempt + 1})")
                ell = nextprime(ell)
        raise BadOraclePrime(f"no admissible oracle prime after {retries} retries")

    @staticmethod
    def oracle_primes(seed: int, statement_id: str, p: Optional[int], m: Optional[int], count: int) -> List[int]:
        """Deterministic word-size primes for one instance."""
        rng = random.Random(f"{seed}:{statement_id}:{p}:{m}")
        low, high = settings.ORACLE_PRIME_MIN, settings.ORACLE_PRIME_MAX
        return [int(nextprime(rng.randrange(low, high))) for _ in range(count)]
