from spexlab.exceptions import SpexlabException


class NoFreeGraphError(SpexlabException):
    """Raised when an extremal query has no free graph at all, i.e. the family contains a graph
    without edges on at most n vertices."""
    pass


class NotFreeError(SpexlabException):
    """Raised when a restricted search is asked to extend K_{k,n-k}, but K_{k,n-k} itself
    contains a member of the family."""
    pass
