"""Exception types raised by the library."""


class InfiniteFamilyError(ValueError):
    """Raised when gcd(s, t) > d, so there are infinitely many d-distinct (s,t)-cores."""

    def __init__(self, s: int, t: int, d: int):
        self.s, self.t, self.d = s, t, d
        super().__init__("infinite family: gcd(s,t) > d")


class DegenerateParametersError(ValueError):
    """Raised for parameter pairs outside both closed forms (s < 2, s == t, ...)."""
