import logging
import time
import warnings

from spexlab.base import TIE_RECHECK_TOL, TIE_TOL, check_alpha
from spexlab.graphs.graph6 import graph6_encode
from spexlab.search.enumeration import iter_graphs
from spexlab.search.exceptions import NoFreeGraphError
from spexlab.search.report import OBJECTIVE_EDGES, SearchReport, lambda_objective
from spexlab.spectral.eigen import spectral_radius
from spexlab.spectral.partitions import equitable_partition, quotient, quotient_alpha
from spexlab.spectral.polynomials import char_poly, compare_max_roots, max_real_root
from spexlab.utils.datetime import elapsed_ms
from spexlab.utils.logging import verbosity_logger, VERBOSITY_QUIET, VERBOSITY_VERBOSE


def _free_graphs(n, spec, connected, workers, enumeration_kwargs):
    if spec.hereditary:
        yield from iter_graphs(n, connected=connected, spec=spec, workers=workers,
                               **enumeration_kwargs)
    else:
        for graph in iter_graphs(n, connected=connected, workers=workers, **enumeration_kwargs):
            if spec.is_free(graph):
                yield graph


def _logger(verbosity):
    with verbosity_logger():
        logger = logging.getLogger(__name__)
        logger.verbosity = verbosity
    return logger


def ex(n, spec, connected=False, workers=1, verbosity=VERBOSITY_QUIET, **enumeration_kwargs):
    """Computes ex(n, F) (or ex_c(n, F) if `connected`) by exhaustive enumeration.

    Parameters
    ----------
    n : int
        Number of vertices.
    spec : FamilySpec
        The forbidden family.
    connected : bool, default=False
        Restricts the maximum to connected graphs.
    workers : int, default=1
        Number of worker processes used by the enumeration.
    verbosity : int, default=VERBOSITY_QUIET
        Verbosity of the search log.
    enumeration_kwargs
        Passed on to :py:func:`spexlab.search.iter_graphs` (e.g. `cap`, `pbar`).

    Returns
    -------
    report : SearchReport
        The optimum together with all extremal graphs.

    Raises
    ------
    NoFreeGraphError
        If no (connected) free graph on `n` vertices exists.
    """
    logger = _logger(verbosity)
    start = time.perf_counter()

    best = -1
    witnesses = []
    enumerated = 0
    for graph in _free_graphs(n, spec, connected, workers, enumeration_kwargs):
        enumerated += 1
        edges = graph.num_edges
        if edges > best:
            best = edges
            witnesses = [graph]
        elif edges == best:
            witnesses.append(graph)

    if enumerated == 0:
        raise NoFreeGraphError(f'No {"connected " if connected else ""}graph on {n} vertices is '
                               f'free of {spec}')
    codes = sorted(graph6_encode(graph) for graph in witnesses)
    logger.info('ex(%d, %s) = %d (%d witnesses, %d free graphs)', n, spec, best, len(codes),
                enumerated, verbosity=VERBOSITY_VERBOSE)
    return SearchReport('ex', n, str(spec), OBJECTIVE_EDGES, best, codes, [best] * len(codes),
                        enumerated, runtime_ms=elapsed_ms(start, time.perf_counter()),
                        restricted_to='connected' if connected else None)


def radius_polynomial(g, alpha=0.0):
    """Characteristic polynomial of the A_alpha quotient of the coarsest equitable partition of
    `g`. Its largest real root is the A_alpha spectral radius of `g`."""
    return char_poly(quotient_alpha(quotient(g, equitable_partition(g)), alpha))


def resolve_ties(graphs, alpha=0.0, tol=TIE_RECHECK_TOL):
    """Compares the spectral radii of `graphs` exactly and keeps those attaining the maximum.

    Returns
    -------
    best : list of Graph
        The graphs whose radius equals the largest one.
    radius : float
        The largest radius, to absolute tolerance `tol`.
    """
    polynomials = [radius_polynomial(graph, alpha) for graph in graphs]
    best = [0]
    for i in range(1, len(graphs)):
        comparison = compare_max_roots(polynomials[i], polynomials[best[0]])
        if comparison.sign > 0:
            best = [i]
        elif comparison.sign == 0:
            best.append(i)
    return [graphs[i] for i in best], max_real_root(polynomials[best[0]], tol=tol)


def spex(n, spec, alpha=0.0, connected=False, workers=1, tie_tol=TIE_TOL,
         tie_recheck_tol=TIE_RECHECK_TOL, verbosity=VERBOSITY_QUIET, **enumeration_kwargs):
    """Computes spex_alpha(n, F) by exhaustive enumeration.

    All free graphs whose radius lies within `tie_tol` of the maximum are re-examined with exact
    root comparisons of their quotient polynomials. Graphs with exactly equal radii are all kept
    as witnesses and flagged as a tie.

    Raises
    ------
    NoFreeGraphError
        If no (connected) free graph on `n` vertices exists.
    """
    check_alpha(alpha)
    if n < 1:
        raise ValueError(f'n must be positive: {n}')
    logger = _logger(verbosity)
    start = time.perf_counter()

    best = None
    candidates = []
    enumerated = 0
    for graph in _free_graphs(n, spec, connected, workers, enumeration_kwargs):
        enumerated += 1
        radius = spectral_radius(graph, alpha).radius
        if best is None or radius > best:
            best = radius
            candidates = [(value, other) for value, other in candidates
                          if best - value <= tie_tol]
        if best - radius <= tie_tol:
            candidates.append((radius, graph))

    if enumerated == 0:
        raise NoFreeGraphError(f'No {"connected " if connected else ""}graph on {n} vertices is '
                               f'free of {spec}')

    flags = []
    graphs = [graph for _, graph in candidates]
    if len(graphs) > 1:
        logger.info('Rechecking %d near-ties exactly', len(graphs), verbosity=VERBOSITY_VERBOSE)
        graphs, best = resolve_ties(graphs, alpha=alpha, tol=tie_recheck_tol)
    if len(graphs) > 1:
        flags.append('tie')
        warnings.warn(f'spex({n}, {spec}): {len(graphs)} non-isomorphic graphs share the largest '
                      'spectral radius', RuntimeWarning)

    codes = sorted(graph6_encode(graph) for graph in graphs)
    logger.info('spex(%d, %s) = %.12f (%d witnesses, %d free graphs)', n, spec, best, len(codes),
                enumerated, verbosity=VERBOSITY_VERBOSE)
    return SearchReport('spex', n, str(spec), lambda_objective(alpha), best, codes,
                        [best] * len(codes), enumerated,
                        runtime_ms=elapsed_ms(start, time.perf_counter()),
                        restricted_to='connected' if connected else None, flags=flags)
