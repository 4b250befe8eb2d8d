class FamilySyntaxError(ValueError):
    """Raised when a family description string cannot be parsed."""
    pass
