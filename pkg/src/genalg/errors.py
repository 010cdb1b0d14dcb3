"""Exception types shared across the library."""


class AlgebraError(ArithmeticError):
    pass


class InvalidParameter(AlgebraError, ValueError):
    pass


class MixedParents(AlgebraError, TypeError):
    """Operands live in different rings with no canonical map between them."""


class NoCoercion(AlgebraError, TypeError):
    pass


class DivisionByZero(AlgebraError, ZeroDivisionError):
    pass


class NotInvertible(AlgebraError):
    """The element is not a unit (e.g. 2 in ZZ)."""


class ImpossibleInverse(NotInvertible):
    """A zero divisor was hit while inverting.

    ``witness`` is a nontrivial factor of the modulus (for Z/nZ the value
    gcd(rep, n), for polynomial residue rings the common factor with the
    defining polynomial).  Callers treat this as a signal to switch to a
    division-free fallback.
    """

    def __init__(self, element, witness):
        super().__init__(f"impossible inverse of {element} (witness {witness})")
        self.element = element
        self.witness = witness


class InexactDivision(AlgebraError):
    pass


class NonSquare(AlgebraError, ValueError):
    pass


class InsufficientPoints(AlgebraError):
    pass


class ZeroPivotUnresolvable(AlgebraError):
    pass


class RandomSearchExhausted(AlgebraError):
    pass


class IndexDivisor(AlgebraError, ValueError):
    pass


class NotSquarefree(AlgebraError, ValueError):
    pass


class ContainsZero(AlgebraError):
    pass


class ContainsNegative(AlgebraError):
    pass


class PrecisionExhausted(AlgebraError):
    pass


class TorsionCertificationFailed(AlgebraError):
    pass
