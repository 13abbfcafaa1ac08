"""Custom exceptions for the engine"""


class QCongException(Exception):
    """Base exception for qcong"""
    pass


# Polynomial ring

class NonMonicDivisor(QCongException):
    """Divisor of a monic division is not monic"""
    pass


class InexactDivision(QCongException):
    """An exact division left a nonzero remainder"""
    pass


class DivisionByZeroFunction(QCongException):
    """Rational function with zero denominator, or division by zero function"""
    pass


class PoleAtPoint(QCongException):
    """Denominator vanishes at the evaluation point"""
    pass


# q-objects

class InvalidPrime(QCongException):
    """Parameter that must be an odd prime is not"""
    pass


class PrimeDividesBase(QCongException):
    """Prime p divides the base m"""
    pass


class InternalInconsistency(QCongException):
    """Two independent computations of the same object disagree"""
    pass


# Congruences

class DenominatorNotCoprime(QCongException):
    """Denominator is divisible by the cyclotomic polynomial"""
    pass


class DenominatorDivisibleByP(QCongException):
    """Classical congruence with a denominator divisible by p"""
    pass


class BadOraclePrime(QCongException):
    """No admissible word-size prime found for the modular oracle"""
    pass


# Catalog / runner

class NotApplicable(QCongException):
    """Statement does not apply to the requested parameters"""
    pass


class UnknownStatement(QCongException):
    """Statement id is not in the catalog"""
    pass


class ReportFormatError(QCongException):
    """Report file is malformed"""
    pass


class ReportWriteError(QCongException):
    """Report file cannot be written"""
    pass
