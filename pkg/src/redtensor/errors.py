"""Exception types shared across the package."""


class RedTensorError(Exception):
    """Base class for all library errors."""


class MissingSymbol(RedTensorError):
    """A required F- or R-symbol is absent from the category data."""

    def __init__(self, kind, key):
        self.kind = kind
        self.key = key
        super().__init__(f"missing {kind}-symbol {' '.join(map(str, key))}")


class UnknownLabel(RedTensorError):
    pass


class TypeMismatch(RedTensorError):
    """Source and target words do not line up at a composition node."""

    def __init__(self, message, node=None):
        self.node = node
        super().__init__(message)


class NotEndomorphism(RedTensorError):
    pass


class NotIdempotent(RedTensorError):
    pass


class NonProjection(RedTensorError):
    """The loop sum P does not satisfy P∘P = λP."""


class HalfBraidingViolation(RedTensorError):
    pass


class IncompleteDecomposition(RedTensorError):
    pass


class ZeroGlobalDimension(RedTensorError):
    pass


class NotMinimalExtension(RedTensorError):
    pass


class MismatchReport(RedTensorError):
    def __init__(self, message, details=()):
        self.details = list(details)
        super().__init__(message)


class UnknownName(RedTensorError):
    pass


class DiagramSyntaxError(RedTensorError, SyntaxError):
    """Parse failure in the diagram language, with 1-based line and column."""

    def __init__(self, message, line, column):
        self.line_no = line
        self.column = column
        RedTensorError.__init__(self, f"{message} at line {line}, column {column}")
        self.msg = message
        self.lineno = line
        self.offset = column

    def __str__(self):
        return f"{self.msg} at line {self.line_no}, column {self.column}"


class CategorySyntaxError(RedTensorError):
    def __init__(self, message, line, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SemanticError(RedTensorError):
    pass
