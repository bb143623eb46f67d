"""Exception hierarchy shared by every module of the package."""


class QPRingError(Exception):
    """Base class for domain errors; the CLI maps these to exit code 1."""


class NotCoprime(QPRingError):
    pass


class NotIntegerValued(QPRingError):
    pass


class PeriodNotMultiple(QPRingError):
    pass


class PeriodNotDivisor(QPRingError):
    pass


class NotNonnegative(QPRingError):
    pass


class DivisionByZeroPoly(QPRingError, ZeroDivisionError):
    pass


class AllZeroAtPoint(QPRingError):
    def __init__(self, n, message=None):
        self.n = n
        super().__init__(message or f"all inputs vanish at n={n}")


class GHasIntegerRoot(QPRingError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"denominator vanishes at n={n}")


class OutOfDomain(QPRingError):
    pass


class BadOrder(QPRingError):
    pass


class DimensionMismatch(QPRingError):
    pass


class InternalDivisibilityFailure(QPRingError):
    pass


class DivByZero(QPRingError, ZeroDivisionError):
    pass


class BadModulus(QPRingError):
    pass
