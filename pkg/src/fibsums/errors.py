class UsageError(ValueError):
    """Bad caller input: spacing or exponent out of range, bad flags."""


class InconsistencyError(ArithmeticError):
    """An exact total that should be an integer is not.

    Never a user error; it means an expansion or composition is wrong.
    """
