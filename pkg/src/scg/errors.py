"""Exception types and the exponent budget shared by every module."""

import os

DEFAULT_BUDGET_BITS = 2**20


class SCGError(Exception):
    """Base class for all errors raised by :mod:`scg`."""


class WordSyntaxError(SCGError, ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class BudgetExceeded(SCGError):
    pass


class SchemaError(SCGError, ValueError):
    pass


class DuplicateRelator(SCGError, ValueError):
    pass


class StepLimitExceeded(SCGError):
    pass


class NotMajorityReduced(SCGError, ValueError):
    def __init__(self, occurrence):
        super().__init__(f"word contains a major subword of relator {occurrence.relator_index}")
        self.occurrence = occurrence


def budget_bits():
    """Maximum bit length of any materialized exponent.

    Read from ``SCG_EXPONENT_BUDGET_BITS`` on every call so tests can
    monkeypatch the environment.
    """
    raw = os.environ.get("SCG_EXPONENT_BUDGET_BITS")
    if raw is None:
        return DEFAULT_BUDGET_BITS
    try:
        value = int(raw)
    except ValueError:
        raise SCGError(f"SCG_EXPONENT_BUDGET_BITS is not an integer: {raw!r}") from None
    if value < 1:
        raise SCGError("SCG_EXPONENT_BUDGET_BITS must be positive")
    return value


def double_exponential(n):
    """Return ``2**(2**n)`` after checking it fits the exponent budget."""
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    # 2**(2**n) has 2**n + 1 bits
    if n > 64 or 2**n + 1 > budget_bits():
        raise BudgetExceeded(f"2^(2^{n}) exceeds the exponent budget of {budget_bits()} bits")
    return 1 << (1 << n)


def double_exponential_exceeds(n, bound):
    """True iff ``2**(2**n) > bound``, decided without materializing the power."""
    if bound < 1:
        return True
    # 2**(2**n) > bound  <=>  2**n >= bound.bit_length() (for bound >= 1)
    return n >= 64 or (1 << n) >= bound.bit_length()
