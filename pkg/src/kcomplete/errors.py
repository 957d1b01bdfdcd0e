"""Exception hierarchy shared by every layer of the package."""


class ParameterError(ValueError):
    """Malformed or inadmissible input (bad prime, wrong degree, element out of range...)."""


class CapacityError(ParameterError):
    """Requested field exceeds the exhaustive-analysis size budget."""


class ReducibleModulusError(ParameterError):
    """A supplied modulus is not irreducible over the prime field."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class FieldArithmeticError(ZeroDivisionError):
    """Division or inversion by zero."""
