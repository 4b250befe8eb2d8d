"""Brute-force oracles for the spexlab tests."""
import itertools

import networkx as nx
import numpy as np

from networkx.algorithms.isomorphism import GraphMatcher

from spexlab.graphs.graph import Graph
from spexlab.spectral.matrices import a_alpha


def atlas_graphs(n, connected=False):
    """All isomorphism classes on `n` vertices (n <= 7) from the networkx graph atlas."""
    graphs = [Graph.from_networkx(g) for g in nx.graph_atlas_g() if g.number_of_nodes() == n]
    if connected:
        graphs = [g for g in graphs if g.is_connected()]
    return graphs


def brute_force_contains(g, f):
    """True iff `f` is a (not necessarily induced) subgraph of `g`, decided by networkx."""
    if f.n > g.n:
        return False
    return GraphMatcher(g.to_networkx(), f.to_networkx()).subgraph_is_monomorphic()


def brute_force_isomorphic(g, h):
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())


def brute_force_certificate(g):
    """Smallest sorted edge list over all relabellings (n <= 7)."""
    return min(tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
               for perm in itertools.permutations(range(g.n)))


def brute_force_radius(g, alpha=0.0):
    """Largest eigenvalue of the dense A_alpha matrix."""
    return float(np.max(np.linalg.eigvalsh(a_alpha(g, alpha))))


def brute_force_cycle_lengths(g):
    lengths = set()
    for cycle in nx.simple_cycles(g.to_networkx().to_directed()):
        if len(cycle) >= 3:
            lengths.add(len(cycle))
    return lengths


def random_graph(n, p, seed):
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


def random_relabel(g, seed):
    perm = list(range(g.n))
    np.random.RandomState(seed).shuffle(perm)
    return g.relabel(perm)
