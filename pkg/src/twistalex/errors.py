"""Exception types shared across the package."""


class TwistalexError(Exception):
    """Base class for all package errors."""


class DimensionError(TwistalexError):
    """Operands have incompatible shapes or variable counts."""


class ParseError(TwistalexError):
    """Malformed input text.  Carries an optional source location."""

    def __init__(self, message, source=None, line=None):
        self.source = source
        self.line = line
        prefix = ""
        if source is not None:
            prefix = f"{source}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        super().__init__(prefix + message)


class ValidationError(TwistalexError):
    """Structurally well-formed input that violates a semantic invariant."""

    def __init__(self, message, violations=()):
        self.violations = list(violations)
        if self.violations:
            message = message + "\n" + "\n".join("  - " + v for v in self.violations)
        super().__init__(message)


class DegenerateInputError(TwistalexError):
    """Input on which the requested invariant is undefined."""
