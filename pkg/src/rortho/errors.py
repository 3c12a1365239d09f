"""Exception types shared across the package."""


class LatinError(ValueError):
    pass


class NotLatin(LatinError):
    """Grid violates the Latin property.

    ``kind`` is one of ``"shape"``, ``"range"``, ``"row"``, ``"col"``;
    ``position`` is the 1-based (row, column) of the offending cell.
    """

    def __init__(self, kind, position, detail=""):
        self.kind = kind
        self.position = position
        msg = f"not Latin: {kind} violation at {position}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class OrderMismatch(LatinError):
    pass


class NotSquare(LatinError):
    pass


class ShapeMismatch(LatinError):
    pass


class SameRow(LatinError):
    pass


class SameColumn(LatinError):
    pass


class SameSymbol(LatinError):
    pass


class BadStart(LatinError):
    pass


class NoPerfectMatching(LatinError):
    pass


class InfeasibleTarget(LatinError):
    pass


class ParseError(LatinError):
    pass


class VerificationFailed(LatinError):
    def __init__(self, claimed, actual):
        self.claimed = claimed
        self.actual = actual
        super().__init__(f"verification failed: claimed r={claimed}, actual r={actual}")
