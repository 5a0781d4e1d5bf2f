"""Exception hierarchy shared by every module."""


class ParalogicError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class ValidationError(ParalogicError, ValueError):
    """Malformed input: bad poset, bad distribution, unknown id, bad file."""


class CapacityError(ParalogicError):
    """A size limit of an exhaustive procedure was exceeded."""


class SupportError(ParalogicError, ValueError):
    """Relative entropy target assigns zero mass where the source does not."""


class EvaluationError(ParalogicError):
    """An expression referenced a name the valuation does not define."""


class ParseError(ParalogicError, SyntaxError):
    """Lexical or syntax error in an expression (CLI exit code 2)."""

    def __init__(self, message, line=1, column=1, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)
        self.msg = detail
