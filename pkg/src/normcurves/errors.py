"""Exception types.  ``code`` is the machine-readable name used by the CLI."""


class NormCurveError(Exception):
    code = "Error"
    exit_code = 2

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class Reducible(NormCurveError):
    code = "Reducible"


class ZeroElement(NormCurveError, ZeroDivisionError):
    code = "ZeroElement"


class TrivialPoint(NormCurveError):
    code = "TrivialPoint"


class ConditionFailed(NormCurveError):
    code = "ConditionFailed"


class ExceptionalForm(NormCurveError):
    code = "ExceptionalForm"


class ZeroCoefficient(NormCurveError):
    code = "ZeroCoefficient"


class ZeroA1(ZeroCoefficient):
    code = "ZeroA1"


class ZeroParameter(ZeroCoefficient):
    code = "ZeroParameter"


class UsePureCubicMethod(NormCurveError):
    code = "UsePureCubicMethod"


class ResidualDegreeError(NormCurveError):
    code = "ResidualDegreeError"


class DegenerateDenominator(NormCurveError, AssertionError):
    code = "DegenerateDenominator"


class NoApplicableMethod(NormCurveError):
    code = "NoApplicableMethod"


class IdentityFailed(NormCurveError):
    code = "IdentityFailed"

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class PoleExhaustion(NormCurveError, AssertionError):
    code = "PoleExhaustion"


class PolySyntaxError(NormCurveError, ValueError):
    """Parse failure with a byte offset and the set of tokens that would fit."""

    code = "SyntaxError"
    exit_code = 3

    def __init__(self, message, offset: int, expected=()):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        super().__init__(f"{message} at offset {offset}"
                         + (f" (expected one of: {', '.join(self.expected)})" if self.expected else ""))

    def to_dict(self) -> dict:
        d = super().to_dict()
        d.update(offset=self.offset, expected=list(self.expected))
        return d


class PointNotOnSurface(NormCurveError, ValueError):
    code = "PointNotOnSurface"
