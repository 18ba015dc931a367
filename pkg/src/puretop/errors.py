class PuretopError(Exception):
    """Base class for every error raised by puretop."""


class RingMismatch(PuretopError):
    pass


class LengthMismatch(PuretopError):
    pass


class UnsupportedCoefficients(PuretopError):
    pass


class IncompatibleMap(PuretopError):
    pass


class NotGraded(PuretopError):
    pass


class MissingPresentation(PuretopError):
    pass


class InvalidPresentation(PuretopError):
    pass


class NotPure(PuretopError):
    pass


class TooLarge(PuretopError):
    pass


class JacobianUnsupported(PuretopError):
    pass


class AssociativityFailed(PuretopError):
    pass


class SymmetryFailed(PuretopError):
    pass


class BilinearNotWellDefined(PuretopError):
    pass


class RingAxiomFailed(PuretopError):
    pass


class DSLError(PuretopError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(where + message)
