class UnknownCaseError(KeyError):
    """Raised when a verification case name is not in the catalog."""
    pass


class NotATreeError(ValueError):
    """Raised when a tree predicate receives a graph that is not a tree."""
    pass


class InvalidOrderError(ValueError):
    """Raised when the counterexample construction is requested for an order n which is not
    congruent to 2 modulo 4 or smaller than 10."""
    pass
