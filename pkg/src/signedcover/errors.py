"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An input violates an operation's precondition."""


class ResourceLimit(RuntimeError):
    """A size guard or search budget was exceeded.

    Distinct from a negative answer: a search that raises this has proven
    nothing.
    """


class EdgeListError(InvalidArgument):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
