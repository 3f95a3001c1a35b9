"""Exception types shared across the package.

Grouped so the CLI can map whole classes of failures to exit codes:
bad input (InputError), analysis method disagreement, exceeded budgets.
"""


class InputError(ValueError):
    """Invalid user-supplied data: field, params, function source."""


class UnsupportedDegree(InputError):
    """Field degree outside the supported range."""


class ReducibleModulus(InputError):
    """Modulus polynomial is not irreducible over GF(2)."""


class DivisionByZero(InputError):
    """Multiplicative inverse (or negative power) of zero requested."""


class NotASubfield(InputError):
    """Requested subfield degree does not divide the field degree."""


class ZeroExponent(InputError):
    """Signed power sum collapsed to 0 mod 2^n - 1 where a nonzero exponent is required."""


class NotAPermutation(InputError):
    """Affine map used where an invertible one is required."""


class FieldMismatch(InputError):
    """Operands belong to different fields or a field of the wrong degree."""


class InvalidParams(InputError):
    """Family parameter tuple violates one or more constraints."""


class InvalidKS(InputError):
    """(k, s) fails the integer side conditions of the family."""


class WrongDegree(InputError):
    """Operation only defined for a specific field degree."""


class UnsupportedOnThisField(InputError):
    """Catalog function not defined for the given field degree."""


class NotQuadratic(InputError):
    """Kernel-based analysis requires algebraic degree at most 2."""


class MethodDisagreement(RuntimeError):
    """Two independent computation routes returned different results."""


class BudgetExceeded(RuntimeError):
    """Requested computation exceeds a configured size budget."""
