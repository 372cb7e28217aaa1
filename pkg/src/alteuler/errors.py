"""Exception types raised by the library."""


class InvariantViolation(ArithmeticError):
    """An exact division or structural invariant failed.

    Every such failure indicates a bug (or a false identity), never a
    recoverable condition.
    """


class BruteForceLimitError(ValueError):
    """Requested permutation enumeration exceeds the configured bound."""

    def __init__(self, n: int, limit: int):
        super().__init__(
            f"brute-force enumeration of S_{n} exceeds the limit n <= {limit} "
            f"(raise ALT_EULER_BRUTE_MAX to allow it)"
        )
        self.n = n
        self.limit = limit


class CertificationError(RuntimeError):
    """Numeric root certification could not be completed."""
