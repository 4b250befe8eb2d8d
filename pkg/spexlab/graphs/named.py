"""Constructors for the named graphs used by expressions, families and predictions.

Unless stated otherwise, vertices are numbered in the order in which they are described, e.g. the
path ``P_n`` is ``0 - 1 - ... - n-1``.
"""
import networkx as nx

from spexlab.graphs.exceptions import ParameterRangeError
from spexlab.graphs.graph import Graph
from spexlab.utils.bits import full_mask


def _check_range(name, value, minimum):
    if value < minimum:
        raise ParameterRangeError(f'{name} requires a parameter >= {minimum}, got {value}')


def empty(n):
    _check_range('E', n, 0)
    return Graph(n)


def complete(n):
    _check_range('K', n, 0)
    mask = full_mask(n)
    return Graph._trusted(n, [mask & ~(1 << v) for v in range(n)])


def complete_bipartite(a, b):
    """K_{a,b} with the `a`-side on ``0..a-1``."""
    _check_range('K', min(a, b), 0)
    return empty(a).join(empty(b))


def path(n):
    _check_range('P', n, 1)
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n):
    _check_range('C', n, 3)
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def matching(n):
    """M_n: floor(n/2) disjoint edges on n vertices (plus one isolated vertex for odd n)."""
    _check_range('M', n, 0)
    return Graph.from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])


def star(d):
    """K_{1,d} with center 0."""
    _check_range('star', d, 0)
    return Graph.from_edges(d + 1, [(0, v) for v in range(1, d + 1)])


def spider(legs):
    """S_{a_1,...,a_j}: paths with a_1, ..., a_j edges identified at the center 0."""
    if len(legs) == 0:
        raise ParameterRangeError('S requires at least one leg')
    for leg in legs:
        _check_range('S', leg, 1)

    edges = []
    vertex = 1
    for leg in legs:
        previous = 0
        for _ in range(leg):
            edges.append((previous, vertex))
            previous = vertex
            vertex += 1
    return Graph.from_edges(vertex, edges)


def double_star(a, b):
    """D_{a,b}: adjacent centers 0 and 1 with `a` and `b` pendant leaves, respectively."""
    _check_range('D', min(a, b), 0)
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(a)]
    edges += [(1, 2 + a + i) for i in range(b)]
    return Graph.from_edges(a + b + 2, edges)


def double_star_extended():
    """D*_{2,2}: D_{2,2} with a pendant vertex 6 attached to the leaf 2."""
    return double_star(2, 2).union(Graph(1)).add_edge(2, 6)


def friendship(k):
    """F_k: k triangles sharing the center 0."""
    _check_range('F', k, 1)
    edges = []
    for i in range(k):
        a, b = 2 * i + 1, 2 * i + 2
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * k + 1, edges)


def intersecting_cycles(lengths):
    """C_{l_1,...,l_t}: cycles of lengths l_1, ..., l_t sharing the vertex 0 and nothing else."""
    if len(lengths) == 0:
        raise ParameterRangeError('intersecting cycles require at least one length')
    edges = []
    vertex = 1
    for length in lengths:
        _check_range('C', length, 3)
        rim = list(range(vertex, vertex + length - 1))
        edges += list(zip([0] + rim, rim + [0]))
        vertex += length - 1
    return Graph.from_edges(vertex, edges)


def complete_minus_paths(n, orders):
    """K_n without the edges of disjoint paths of the given orders, laid out on consecutive
    vertices starting at 0."""
    _check_range('K', n, 0)
    if sum(orders) > n:
        raise ParameterRangeError(f'paths of orders {list(orders)} do not fit into K_{n}')
    removed = set()
    start = 0
    for order in orders:
        _check_range('P', order, 1)
        removed.update((v, v + 1) for v in range(start, start + order - 1))
        start += order
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if (u, v) not in removed])


def petersen():
    return Graph.from_networkx(nx.petersen_graph())


def turan(n, r):
    """The Turán graph T(n, r): the balanced complete r-partite graph on n vertices."""
    _check_range('turan', r, 1)
    _check_range('turan', n, 0)
    return Graph.from_networkx(nx.turan_graph(n, r)) if n > 0 else Graph(0)


def almost_regular(n, d):
    """A graph on n vertices in which every vertex has degree d, except one vertex of degree d-1
    when n*d is odd.

    Built from the circulant graph with offsets ``1..d//2``; an odd `d` adds the antipodal offset
    for even `n`, or a near-perfect matching of offset ``(n-1)/2`` for odd `n`.
    """
    _check_range('almost_regular', d, 0)
    if d >= n:
        raise ParameterRangeError(f'degree {d} is not realizable on {n} vertices')
    if n == 0:
        return Graph(0)
    offsets = list(range(1, d // 2 + 1))
    graph = Graph.from_networkx(nx.circulant_graph(n, offsets)) if offsets else Graph(n)
    if d % 2 == 1:
        if n % 2 == 0:
            extra = [(v, v + n // 2) for v in range(n // 2)]
        else:
            extra = [(v, v + (n - 1) // 2) for v in range((n - 1) // 2)]
        for u, v in extra:
            graph = graph.add_edge(u, v)
    return graph


def maximal_union(g, n):
    """The maximal union of `g` on `n` vertices: floor(n/|g|) disjoint copies plus isolated
    vertices for the remainder."""
    if n < 0:
        raise ValueError(f'n must be non-negative: {n}')
    if g.n == 0:
        if n > 0:
            raise ValueError('Cannot form a maximal union of the graph with zero vertices')
        return Graph(0)
    copies, rest = divmod(n, g.n)
    return g.repeat(copies).union(Graph(rest))
