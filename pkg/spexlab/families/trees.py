from functools import lru_cache

from spexlab.base import TREE_ORDER_CAP, check_cap
from spexlab.graphs.canonical import canonical_certificate, canonical_graph
from spexlab.graphs.graph import Graph


@lru_cache(maxsize=None)
def all_trees_on(t):
    """Returns one representative per isomorphism class of trees on `t` vertices.

    Trees are grown by attaching a leaf to every vertex of every tree on one vertex less and
    deduplicated by canonical form, which reaches every class since each tree on t >= 2 vertices
    has a leaf. The representatives are canonically labelled and sorted by certificate.
    """
    if t < 1:
        raise ValueError(f'Tree order must be positive: {t}')
    check_cap('tree order', t, TREE_ORDER_CAP)

    trees = {canonical_certificate(Graph(1)): Graph(1)}
    for order in range(2, t + 1):
        grown = dict()
        for tree in trees.values():
            extended = tree.union(Graph(1))
            for v in range(tree.n):
                child = extended.add_edge(v, order - 1)
                key = canonical_certificate(child)
                if key not in grown:
                    grown[key] = canonical_graph(child)
        trees = grown
    return tuple(trees[key] for key in sorted(trees))
