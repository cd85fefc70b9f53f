"""Exception hierarchy shared by every module of the package."""


class FFRTError(ValueError):
    """Base class for input errors (the CLI maps these to exit code 2)."""


class InvalidDivisor(FFRTError):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))


class LengthMismatch(FFRTError):
    pass


class WeightsMismatch(FFRTError):
    pass


class GraphMismatch(FFRTError):
    pass


class ZeroVector(FFRTError):
    pass


class NotFiniteType(FFRTError):
    pass


class CharacteristicDividesWeight(FFRTError):
    pass


class ZeroRank(FFRTError):
    pass


class InconsistentProfile(FFRTError):
    pass


class WindowTooSmall(FFRTError):
    pass


class NotDeltaZero(FFRTError):
    pass


class BadLambda(FFRTError):
    pass


class FieldTooLarge(FFRTError):
    pass


class NonIntegralOrbitCount(FFRTError):
    pass


class NotPrime(FFRTError):
    pass


class ZeroPolynomial(FFRTError):
    pass


class IndexOutOfRange(FFRTError):
    pass
