"""Exception hierarchy.

Every domain error carries a stable machine-readable ``code`` string; the
CLI prints it as ``error=<code>`` and exits 2.
"""


class ConvFecError(Exception):
    """Base class for all domain errors."""

    code = "ERROR"

    def __init__(self, message="", **context):
        super().__init__(message or self.code)
        self.context = context


class ReducibleModulus(ConvFecError):
    code = "REDUCIBLE_MODULUS"


class InvalidDegree(ConvFecError):
    code = "INVALID_DEGREE"


class FieldMismatch(ConvFecError):
    code = "FIELD_MISMATCH"


class DivByZero(ConvFecError, ZeroDivisionError):
    code = "DIV_BY_ZERO"


class BadIndex(ConvFecError):
    code = "BAD_INDEX"


class DimMismatch(ConvFecError):
    code = "DIM_MISMATCH"


class BadParams(ConvFecError):
    code = "BAD_PARAMS"


class TooLarge(ConvFecError):
    code = "TOO_LARGE"


class UnsupportedParams(ConvFecError):
    code = "UNSUPPORTED_PARAMS"


class BadSize(ConvFecError):
    code = "BAD_SIZE"


class ParamsOutOfRegime(ConvFecError):
    code = "PARAMS_OUT_OF_REGIME"


class SearchExhausted(ConvFecError):
    code = "SEARCH_EXHAUSTED"


class BadAction(ConvFecError):
    code = "BAD_ACTION"


class NotEnoughGuard(ConvFecError):
    code = "NOT_ENOUGH_GUARD"


class TooManyErasures(ConvFecError):
    code = "TOO_MANY_ERASURES"


class Singular(ConvFecError):
    code = "SINGULAR"


class ConditionsViolated(ConvFecError):
    code = "CONDITIONS_VIOLATED"


class DecodeInconsistent(ConvFecError):
    code = "DECODE_INCONSISTENT"


class FormatError(ConvFecError):
    code = "FORMAT_ERROR"
