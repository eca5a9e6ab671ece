"""Exception hierarchy shared by every module of the package."""


class CrystalError(Exception):
    """Base class for all errors raised by this package."""


class PosetError(CrystalError):
    pass


class CycleError(PosetError):
    """The cover relation does not generate a strict partial order."""


class UnknownElement(PosetError):
    pass


class MissingLabels(PosetError):
    """An operation needs the natural-number labelling but the poset has none."""


class NotAChain(CrystalError):
    """Some row of a would-be P-array contains two incomparable elements."""


class InternalInvariantViolation(CrystalError):
    """A property that the theory guarantees failed to hold at runtime.

    Seeing this means either a bug or an input outside the supported class
    (usually a poset that is not (3+1)-free).
    """


class GuardExceeded(CrystalError):
    pass


class OperatorUndefined(CrystalError):
    pass


class AsymmetricInput(CrystalError):
    """A multiset of exponent vectors is not closed under permuting coordinates."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class AsymmetricCharacter(AsymmetricInput):
    pass


class LengthExceedsVars(CrystalError):
    pass


class NonHomogeneous(CrystalError):
    pass


class UnequalSizes(CrystalError):
    pass


class NoValidPi(CrystalError):
    pass


class AscNotConstant(CrystalError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotTwoRowTableau(CrystalError):
    pass


class DiagramNotInComponent(CrystalError):
    pass


class VerificationFailure(CrystalError):
    """A cross-check between two independent computations disagreed."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
