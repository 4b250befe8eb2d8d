from spexlab.exceptions import CapExceededError


CYCLE_CAP = 16
"""Largest vertex count for which cycle structure is enumerated exhaustively."""

CYCLE_CAP_MAX = 20

MINOR_GRAPH_CAP = 14
"""Largest host graph for minor and topological-minor searches."""

MINOR_PATTERN_CAP = 8
"""Largest pattern graph for minor and topological-minor searches."""

ENUMERATION_CAP = 9
"""Largest n for which all isomorphism classes are enumerated."""

ENUMERATION_CONNECTED_CAP = 10

ENUMERATION_BOUNDED_DEGREE_CAP = 12
"""Largest n for bounded-degree enumeration (maximum degree at most 3)."""

TREE_ORDER_CAP = 10

EIGEN_TOL = 1e-10
RESIDUAL_TOL = 1e-8
TIE_TOL = 1e-9
TIE_RECHECK_TOL = 1e-12
ROOT_TOL = 1e-12

DENSE_SOLVER_LIMIT = 2000
"""Graphs above this order use the sparse eigensolver."""


def check_cap(what, value, cap):
    if value > cap:
        raise CapExceededError(what, value, cap)


def check_alpha(alpha):
    if not 0 <= alpha < 1:
        raise ValueError(f'alpha must be in [0, 1): {alpha}')
