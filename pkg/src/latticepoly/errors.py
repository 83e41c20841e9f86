"""Exception hierarchy shared by every module of the package."""


class LatticePolyError(Exception):
    """Base class for all errors raised by latticepoly."""


class InvalidSizeError(LatticePolyError, ValueError):
    pass


class BudgetError(LatticePolyError):
    """A size cap or enumeration budget would be exceeded."""


class ElementError(LatticePolyError, ValueError):
    """Element id out of range or unknown element name."""


class NotALatticeError(LatticePolyError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotDistributiveError(LatticePolyError):
    def __init__(self, message, triple=None, names=None):
        super().__init__(message)
        self.triple = triple    # element ids
        self.names = names      # the same triple by name


class BoundsError(LatticePolyError):
    pass


class OrderError(LatticePolyError, ValueError):
    pass


class ParseError(LatticePolyError):
    def __init__(self, message, line=None, position=None):
        where = ""
        if line is not None:
            where = f"line {line}: "
        elif position is not None:
            where = f"position {position}: "
        super().__init__(where + message)
        self.line = line
        self.position = position


class ArityError(LatticePolyError, ValueError):
    pass


class PreconditionError(LatticePolyError):
    pass


class NotExtendableError(LatticePolyError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class MeasureError(LatticePolyError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class VerificationError(LatticePolyError):
    """An internally computed identity failed; indicates a bug, never user error."""
