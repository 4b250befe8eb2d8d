"""Canonical labelling by partition refinement and individualization.

The refinement splits every cell of an ordered partition by the number of neighbors its vertices
have in each cell, until the partition is equitable. When cells remain that are not singletons,
each vertex of the first such cell is individualized in turn and the search recurses; the
labelling with the lexicographically largest adjacency certificate wins. Twin vertices (equal
neighborhoods apart from each other) are interchangeable by an automorphism, so only one vertex
per twin class is individualized.
"""
from spexlab.graphs.graph import Graph
from spexlab.graphs.graph6 import graph6_encode
from spexlab.utils.bits import iter_bits, popcount, to_mask


def refine_partition(adj, cells):
    """Refines the ordered partition `cells` (a list of vertex lists) to an equitable one.

    Split cells replace their parent in place and are ordered by descending neighbor-count
    signature, which keeps the result invariant under relabelling.
    """
    cells = [list(cell) for cell in cells]
    while True:
        masks = [to_mask(cell) for cell in cells]
        refined = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = dict()
            for v in cell:
                signature = tuple(popcount(adj[v] & mask) for mask in masks)
                groups.setdefault(signature, []).append(v)
            if len(groups) > 1:
                changed = True
            refined.extend(groups[signature] for signature in sorted(groups, reverse=True))
        cells = refined
        if not changed:
            return cells


def _are_twins(adj, u, v):
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def _certificate(adj, order):
    position = [0] * len(order)
    for i, v in enumerate(order):
        position[v] = i
    return tuple(to_mask(position[u] for u in iter_bits(adj[v])) for v in order)


def _search(adj, cells, best):
    cells = refine_partition(adj, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        order = [cell[0] for cell in cells]
        certificate = _certificate(adj, order)
        if best[0] is None or certificate > best[0]:
            best[0] = certificate
            best[1] = order
        return

    tried = []
    for v in cells[target]:
        if any(_are_twins(adj, u, v) for u in tried):
            continue
        tried.append(v)
        rest = [u for u in cells[target] if u != v]
        _search(adj, cells[:target] + [[v], rest] + cells[target + 1:], best)


def canonical_order(g):
    """Returns ``(certificate, order)``: the canonical adjacency certificate and the vertices of `g`
    listed in canonical order."""
    if g.n == 0:
        return (), []
    best = [None, None]
    _search(g.adj, [list(range(g.n))], best)
    return best[0], best[1]


def canonical_labeling(g):
    """Returns `perm` such that ``g.relabel(perm)`` is the canonical representative of `g`."""
    _, order = canonical_order(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return perm


def canonical_certificate(g):
    """Returns a hashable value which is equal for two graphs iff they are isomorphic."""
    certificate, _ = canonical_order(g)
    return g.n, certificate


def canonical_graph(g):
    return g.relabel(canonical_labeling(g))


def canonical_form(g):
    """Returns the canonical byte string of `g`: the graph6 code of its canonical relabelling."""
    return graph6_encode(canonical_graph(g)).encode('ascii')


def canonical_last_vertex(g, candidates=None):
    """Returns the vertex labelled last by the canonical labelling, restricted to `candidates`
    (a bitset) if given."""
    _, order = canonical_order(g)
    for v in reversed(order):
        if candidates is None or candidates >> v & 1:
            return v
    return None


def is_isomorphic(g, h):
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_certificate(g) == canonical_certificate(h)


def from_certificate(n, certificate):
    """Rebuilds the canonical representative from a certificate."""
    return Graph._trusted(n, certificate)
