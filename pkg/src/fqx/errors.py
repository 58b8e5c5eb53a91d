"""Exception hierarchy shared by every module of the package."""


class FqxError(ValueError):
    """Base class for all domain errors raised by fqx."""


class NonPrime(FqxError):
    pass


class EvenCharacteristic(FqxError):
    pass


class ZeroInput(FqxError):
    pass


class NotASquare(FqxError):
    pass


class NotASubfield(FqxError):
    pass


class ZeroPolynomial(FqxError):
    pass


class ConstantInput(FqxError):
    pass


class NonCoprimeModuli(FqxError):
    pass


class NonInvertible(FqxError):
    pass


class NotSquareFree(FqxError):
    pass


class ZeroFunction(FqxError):
    pass


class NonUnitAtPlace(FqxError):
    pass


class InvalidRamSeq(FqxError):
    """A user-supplied ramification sequence has odd support."""


class NotCoprime(FqxError):
    pass


class CapExceeded(FqxError):
    """The degree cap was too small; this says nothing about nonexistence."""


class UnsupportedSupport(FqxError):
    pass


class BadInfinityClass(FqxError):
    pass


class DegreeTooSmall(FqxError):
    pass


class PreconditionViolated(FqxError):
    pass


class ConstantPolynomial(FqxError):
    pass


class NotSeparable(FqxError):
    pass


class BudgetExceeded(FqxError):
    pass


class ParseError(FqxError):
    pass


class ConsistencyError(AssertionError):
    """An outcome that the underlying theory rules out; always an implementation bug."""
