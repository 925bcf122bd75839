"""Exception hierarchy shared by every module."""


class FrobeniusError(Exception):
    """Base class for all errors raised by :mod:`frobdeg`."""


class InvalidInput(FrobeniusError, ValueError):
    """Input that violates a documented precondition."""


class DivisionByZero(FrobeniusError, ZeroDivisionError):
    pass


class FieldMismatch(InvalidInput):
    pass


class UndefinedGcd(InvalidInput):
    pass


class DegreeOverflow(InvalidInput):
    pass


class ShapeError(InvalidInput):
    pass


class TypeMismatch(InvalidInput):
    pass


class NotMonic(InvalidInput):
    pass


class NotCoprime(InvalidInput):
    pass


class NotPairwiseCoprime(InvalidInput):
    pass


class ConstantInput(InvalidInput):
    pass


class DegreeTooSmall(InvalidInput):
    pass


class CharacteristicTooSmall(InvalidInput):
    """The field characteristic p satisfies 0 < p <= n."""


class CharacteristicMismatch(InvalidInput):
    pass


class FieldTooSmall(FrobeniusError):
    """The rank criterion needs more field elements than there are types."""

    def __init__(self, d, types, cardinality):
        super().__init__(
            f"|T_{d}| = {types} is not smaller than the field size {cardinality}"
        )
        self.d = d
        self.types = types
        self.cardinality = cardinality


class RankTooHigh(FrobeniusError):
    pass


class CapacityExceeded(FrobeniusError):
    pass


class VerificationFailed(FrobeniusError, AssertionError):
    """A certificate or witness did not survive re-verification (internal bug)."""


class ParseError(InvalidInput):
    def __init__(self, message, text="", pos=None):
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}: {text!r}" if text else message + where)
        self.text = text
        self.pos = pos
