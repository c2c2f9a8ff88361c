"""Exception hierarchy.

Every error carries a stable ``code`` string and the process ``exit_code``
the command line front-end uses for it.
"""


class PoincareError(Exception):
    code = "error"
    exit_code = 1

    def to_dict(self):
        return {"code": self.code, "exit_code": self.exit_code, "message": str(self)}


class ValidationError(PoincareError, ValueError):
    """Malformed input: dimension mismatch, bad valuation, zero polynomial."""

    code = "validation"
    exit_code = 2


class PreconditionError(ValidationError):
    """A definition was invoked outside its hypotheses (e.g. last valuation not centered)."""

    code = "precondition"


class UnsupportedDimensionError(ValidationError):
    code = "unsupported_dimension"


class InfiniteDimensionError(PoincareError):
    """A vector space that must be finite dimensional is not."""

    code = "infinite_dimension"
    exit_code = 3

    def __init__(self, message, *, subset=None, witness=None, v=None):
        super().__init__(message)
        self.subset = subset
        self.witness = witness
        self.v = v

    def to_dict(self):
        d = super().to_dict()
        if self.subset is not None:
            d["subset"] = [i + 1 for i in self.subset]
        if self.witness is not None:
            d["witness"] = list(self.witness)
        if self.v is not None:
            d["v"] = list(self.v)
        return d


class InfiniteBasisError(InfiniteDimensionError):
    """A monomial quotient basis is infinite; ``witness`` is a generator along
    which the set is unbounded."""

    code = "infinite_basis"


class MalformedComplexError(PoincareError, ValueError):
    code = "malformed_complex"
    exit_code = 2


class NonStabilizedError(PoincareError):
    """Truncated Euler characteristics did not settle within the schedule."""

    code = "non_stabilized"
    exit_code = 4

    def __init__(self, message, trace=(), v=None):
        super().__init__(message)
        self.trace = list(trace)
        self.v = v

    def to_dict(self):
        d = super().to_dict()
        d["trace"] = [{"bound": t, "h": list(h)} for t, h in self.trace]
        if self.v is not None:
            d["v"] = list(self.v)
        return d


class CrossCheckDisagreement(PoincareError):
    code = "disagreement"
    exit_code = 5
