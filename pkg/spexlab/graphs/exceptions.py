class ExpressionSyntaxError(ValueError):
    """Raised when a graph expression does not match the grammar.

    The offending character offset is available as `position`.
    """
    def __init__(self, message, position):
        self.position = position
        super().__init__(f'{message} (at position {position})')


class ParameterRangeError(ValueError):
    """Raised when a named graph is requested with a parameter outside its valid range."""
    pass


class Graph6FormatError(ValueError):
    """Raised when a string is not a valid graph6 encoding."""
    pass
