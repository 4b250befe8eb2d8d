"""Extremal search among supergraphs of K_{k,n-k}.

Every graph containing K_{k,n-k} is, after relabelling, the join of a graph L on the k left
vertices with a graph X on the n-k right vertices. Both sides are enumerated up to isomorphism.
A right vertex with more than d right neighbors, where d is the star threshold of the family,
already creates a member, so X is generated with maximum degree d.
"""
import logging
import time

from dataclasses import dataclass
from fractions import Fraction

from spexlab.families.base import FamilySpec
from spexlab.families.thresholds import star_threshold
from spexlab.graphs.canonical import canonical_graph, is_isomorphic
from spexlab.graphs.graph6 import graph6_encode
from spexlab.graphs.named import empty, maximal_union, path
from spexlab.search.enumeration import iter_graphs
from spexlab.search.exceptions import NoFreeGraphError, NotFreeError
from spexlab.search.report import OBJECTIVE_EDGES, SearchReport
from spexlab.utils.datetime import elapsed_ms
from spexlab.utils.logging import verbosity_logger, VERBOSITY_QUIET, VERBOSITY_VERBOSE


RESTRICTED_K_MAX = 4


class _JoinedWithEmptyLeft(FamilySpec):
    """A graph X on at most `right` vertices is free iff the join of an independent set of size
    `k` with X (padded by isolated vertices) is free of `spec`. This is inherited by subgraphs of
    X, so the right side can be generated with pruning."""

    def __init__(self, spec, k, right):
        self.spec = spec
        self.k = k
        self.right = right

    def is_free(self, x):
        return self.spec.is_free(empty(self.k).join(x.union(empty(self.right - x.n))))

    def __str__(self):
        return f'join({self.k}, {self.spec})'


@dataclass
class RestrictedPattern:
    """The maximal union of P_1, P_2 or P_3 closest to a right-side graph X.

    `q` is the edge density e/|X| of the pattern (0, 1/2 or 2/3) and `edge_distance` the
    difference in edge counts. `exact` is True iff X is isomorphic to the pattern.
    """
    name: str
    q: Fraction
    edge_distance: int
    exact: bool

    def to_dict(self):
        return {'name': self.name, 'q': str(self.q), 'edge_distance': self.edge_distance,
                'exact': self.exact}


def restricted_pattern(x):
    """Names the maximal-union pattern (of P_1, P_2 or P_3) nearest to `x`."""
    best = None
    for order, q in ((1, Fraction(0)), (2, Fraction(1, 2)), (3, Fraction(2, 3))):
        pattern = maximal_union(path(order), x.n)
        if is_isomorphic(pattern, x):
            return RestrictedPattern(f'P{order}', q, 0, True)
        distance = abs(pattern.num_edges - x.num_edges)
        if best is None or distance < best.edge_distance:
            best = RestrictedPattern(f'P{order}', q, distance, False)
    return best


def ex_restricted(n, spec, k, workers=1, verbosity=VERBOSITY_QUIET, **enumeration_kwargs):
    """Computes ex^{K_{k,n-k}}(n, F): the maximum number of edges of a free graph on `n` vertices
    which contains K_{k,n-k}.

    Parameters
    ----------
    n : int
        Number of vertices.
    spec : FamilySpec
        The forbidden family.
    k : int
        Size of the left side, ``1 <= k <= 4``.

    Returns
    -------
    report : SearchReport
        Witnesses as canonical graph6 codes. ``details['decompositions']`` lists, per witness, the
        left-side edge count, the right-side graph X and its nearest maximal-union pattern.

    Raises
    ------
    NotFreeError
        If K_{k,n-k} is not free.
    CapExceededError
        If the right side exceeds the enumeration cap for its degree bound.
    """
    if not 1 <= k <= RESTRICTED_K_MAX:
        raise ValueError(f'k must be between 1 and {RESTRICTED_K_MAX}: {k}')
    if n < k:
        raise ValueError(f'n must be at least k: n={n}, k={k}')

    with verbosity_logger():
        logger = logging.getLogger(__name__)
        logger.verbosity = verbosity
    start = time.perf_counter()

    right = n - k
    degree_bound = star_threshold(spec, k, n)
    if degree_bound < 0:
        raise NotFreeError(f'K_{k},{right} is not free of {spec}')
    logger.info('Right side degree bound: %d', degree_bound, verbosity=VERBOSITY_VERBOSE)

    lefts = list(iter_graphs(k))
    right_spec = _JoinedWithEmptyLeft(spec, k, right)

    best = -1
    found = []
    enumerated = 0
    for x in iter_graphs(right, spec=right_spec, workers=workers, max_degree=degree_bound,
                         **enumeration_kwargs):
        for left in lefts:
            g = left.join(x)
            if not spec.is_free(g):
                continue
            enumerated += 1
            if g.num_edges > best:
                best = g.num_edges
                found = [(left, x)]
            elif g.num_edges == best:
                found.append((left, x))

    if enumerated == 0:
        raise NoFreeGraphError(f'No supergraph of K_{k},{right} is free of {spec}')

    witnesses = dict()
    for left, x in found:
        code = graph6_encode(canonical_graph(left.join(x)))
        pattern = restricted_pattern(x)
        witnesses.setdefault(code, {
            'left_edges': left.num_edges,
            'left_complete': left.num_edges == k * (k - 1) // 2,
            'right': graph6_encode(x),
            'right_edges': x.num_edges,
            'pattern': pattern.to_dict()
        })

    codes = sorted(witnesses)
    decompositions = [witnesses[code] for code in codes]
    flags = []
    if any(not item['pattern']['exact'] for item in decompositions):
        flags.append('pattern-violation')
    logger.info('ex^K(%d,%d)(%d, %s) = %d', k, right, n, spec, best, verbosity=VERBOSITY_VERBOSE)

    report = SearchReport('ex_restricted', n, str(spec), OBJECTIVE_EDGES, best, codes,
                          [best] * len(codes), enumerated,
                          runtime_ms=elapsed_ms(start, time.perf_counter()),
                          restricted_to=f'contains K_{k},{right}', flags=flags,
                          details={'k': k, 'degree_bound': degree_bound,
                                   'decompositions': decompositions})
    return report
