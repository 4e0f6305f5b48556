"""Exception hierarchy.

Every error raised by the library derives from :class:`HopfError`, so callers
(the command line front end in particular) can catch a single type.
"""


class HopfError(Exception):
    pass


class DomainError(HopfError):
    """A map marked as an automorphism of W sent a point to 0."""


class DegreeOverflow(HopfError):
    pass


class NotInvertibleShape(HopfError):
    pass


class NotWehlerForm(HopfError):
    pass


class NotContraction(HopfError):
    pass


class NotCommuting(HopfError):
    pass


class NotDeckPower(HopfError):
    pass


class NotInvolution(HopfError):
    pass


class NotOddSquare(HopfError):
    pass


class NumericallySingular(HopfError):
    pass


class NoSuchStructure(HopfError):
    pass


class NoAntiholomorphic(HopfError):
    pass


class NotPositiveDiagonal(HopfError):
    pass


class NotRealCoefficients(HopfError):
    pass


class ConvergenceFailure(HopfError):
    pass


class ZeroArgument(HopfError):
    pass


class NotRealZeta(HopfError):
    pass


class NotQuaternionicShape(HopfError):
    pass
