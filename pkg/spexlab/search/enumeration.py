"""Isomorph-free generation of graphs by canonical augmentation.

Graphs on n vertices are generated from the representatives on n-1 vertices by adding a vertex
with every possible neighborhood. A child C is kept iff removing its canonically last vertex w
yields a graph isomorphic to the parent; in connected mode w ranges over the vertices whose removal
keeps C connected. Every isomorphism class therefore has exactly one parent class, and children
of the same parent are deduplicated by their canonical certificate.

Pruning by a family is valid because freeness is inherited by subgraphs: if C is free then so is
C - w, so the parent of every free child is itself generated. The same holds for a degree bound.
"""
import logging

from multiprocessing import Pool

from spexlab.base import (ENUMERATION_BOUNDED_DEGREE_CAP,
                          ENUMERATION_CAP,
                          ENUMERATION_CONNECTED_CAP,
                          check_cap)
from spexlab.graphs.canonical import canonical_certificate, canonical_order, from_certificate
from spexlab.graphs.graph import Graph
from spexlab.utils.bits import full_mask, iter_bits, popcount
from spexlab.utils.context import build_pbar_context
from spexlab.utils.logging import verbosity_logger, VERBOSITY_QUIET, VERBOSITY_VERBOSE


def enumeration_cap(connected=False, max_degree=None, cap=None, connected_cap=None):
    """Largest order that may be enumerated with the given options."""
    if max_degree is not None and max_degree <= 3:
        return ENUMERATION_BOUNDED_DEGREE_CAP
    if connected:
        return connected_cap if connected_cap is not None else ENUMERATION_CONNECTED_CAP
    return cap if cap is not None else ENUMERATION_CAP


def _removal_candidates(g, connected):
    everything = full_mask(g.n)
    if not connected or g.n <= 1:
        return everything
    return sum(1 << v for v in range(g.n) if g.is_connected_within(everything & ~(1 << v)))


def _is_canonical_child(child, parent_certificate, connected):
    certificate, order = canonical_order(child)
    candidates = _removal_candidates(child, connected)
    last = next(v for v in reversed(order) if candidates >> v & 1)
    new_vertex = child.n - 1
    if last != new_vertex \
            and canonical_certificate(child.remove_vertex(last)) != parent_certificate:
        return None
    return certificate


def _neighborhoods(parent, connected, max_degree):
    m = parent.n
    if max_degree is None:
        allowed = full_mask(m)
    else:
        allowed = sum(1 << v for v in range(m) if parent.degree(v) < max_degree)
    subset = allowed
    # enumerate the subsets of `allowed` in a fixed order
    subsets = []
    while True:
        subsets.append(subset)
        if subset == 0:
            break
        subset = (subset - 1) & allowed
    subsets.reverse()
    for neighborhood in subsets:
        if connected and neighborhood == 0 and m > 0:
            continue
        if max_degree is not None and popcount(neighborhood) > max_degree:
            continue
        yield neighborhood


def _children(task):
    parent, connected, spec, max_degree = task
    parent_certificate = canonical_certificate(parent)
    seen = set()
    children = []
    for neighborhood in _neighborhoods(parent, connected, max_degree):
        adj = list(parent.adj)
        for u in iter_bits(neighborhood):
            adj[u] |= 1 << parent.n
        adj.append(neighborhood)
        child = Graph._trusted(parent.n + 1, adj)

        certificate = _is_canonical_child(child, parent_certificate, connected)
        if certificate is None or certificate in seen:
            continue
        seen.add(certificate)
        canonical = from_certificate(child.n, certificate)
        if spec is not None and not spec.is_free(canonical):
            continue
        children.append(canonical)
    return children


def _next_level(parents, connected, spec, max_degree, workers, pool, pbar):
    tasks = [(parent, connected, spec, max_degree) for parent in parents]
    if pool is None:
        results = map(_children, tasks)
    else:
        results = pool.imap(_children, tasks, chunksize=max(1, len(tasks) // (4 * workers)))
    for children in results:
        pbar.update(1)
        yield from children


def iter_graphs(n, connected=False, spec=None, workers=1, max_degree=None, cap=None,
                connected_cap=None, pbar=None, verbosity=VERBOSITY_QUIET):
    """Yields one canonically labelled representative of every isomorphism class on `n` vertices.

    Parameters
    ----------
    n : int
        Number of vertices.
    connected : bool, default=False
        Restricts the generation to connected graphs.
    spec : FamilySpec, default=None
        If given, only graphs free of the family are generated (and the search tree is pruned).
    workers : int, default=1
        Number of worker processes. The output order does not depend on the number of workers.
    max_degree : int, default=None
        If given, only graphs with maximum degree at most `max_degree` are generated.
    cap : int, default=None
        Overrides the largest admissible n for full enumeration.
    connected_cap : int, default=None
        Overrides the largest admissible n for connected enumeration.
    pbar : str or None, default=None
        'tqdm' shows one progress bar per level.
    verbosity : int, default=VERBOSITY_QUIET
        Logs the number of graphs per level at VERBOSITY_VERBOSE.

    Raises
    ------
    CapExceededError
        If `n` exceeds the enumeration cap for the chosen options.
    """
    if n < 0:
        raise ValueError(f'n must be non-negative: {n}')
    check_cap('enumeration order', n, enumeration_cap(connected=connected, max_degree=max_degree,
                                                      cap=cap, connected_cap=connected_cap))
    with verbosity_logger():
        logger = logging.getLogger(__name__)
        logger.verbosity = verbosity

    root = Graph(0)
    if n == 0:
        if spec is None or spec.is_free(root):
            yield root
        return

    level = [Graph(1)] if spec is None or spec.is_free(Graph(1)) else []
    pool = Pool(workers) if workers > 1 else None
    try:
        for order in range(2, n + 1):
            logger.info('Level %d: %d graphs', order - 1, len(level), verbosity=VERBOSITY_VERBOSE)
            with build_pbar_context(pbar, dict(total=len(level), desc=f'n={order}')) as bar:
                generated = _next_level(level, connected, spec, max_degree, workers, pool, bar)
                if order == n:
                    count = 0
                    for graph in generated:
                        count += 1
                        yield graph
                    logger.info('Level %d: %d graphs', order, count, verbosity=VERBOSITY_VERBOSE)
                    return
                level = list(generated)
        yield from level
    finally:
        if pool is not None:
            pool.terminate()


def enumerate_graphs(n, connected=False, visitor=None, spec=None, workers=1, max_degree=None,
                     cap=None, connected_cap=None, pbar=None, verbosity=VERBOSITY_QUIET):
    """Visits every isomorphism class on `n` vertices exactly once and returns their number.

    `visitor` is called with the canonical representative of each class. The remaining arguments
    are those of :py:func:`iter_graphs`.
    """
    count = 0
    for graph in iter_graphs(n, connected=connected, spec=spec, workers=workers,
                             max_degree=max_degree, cap=cap, connected_cap=connected_cap,
                             pbar=pbar, verbosity=verbosity):
        if visitor is not None:
            visitor(graph)
        count += 1
    return count
