import itertools

import networkx as nx
import numpy as np

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from sklearn.utils import check_random_state

from spexlab.families.base import FiniteList
from spexlab.families.thresholds import is_saturated
from spexlab.graphs.canonical import canonical_certificate
from spexlab.graphs.graph import Graph
from spexlab.graphs.graph6 import graph6_encode
from spexlab.graphs.named import complete_bipartite
from spexlab.utils.context import build_pbar_context
from spexlab.verification.exceptions import NotATreeError


EXHAUSTIVE_LIMIT = 10 ** 6
"""Trees on m vertices are enumerated exhaustively if there are at most this many."""

CONSISTENCY_ORDER_LIMIT = 7

CONSISTENCY_SIDE_LIMIT = 4

Z_95 = 1.959963984540054


def _sides(t):
    if t.n == 0:
        raise NotATreeError('The empty graph is not a tree')
    graph = t.to_networkx()
    if not nx.is_tree(graph):
        raise NotATreeError(f'Not a tree: {t!r}')
    color = nx.bipartite.color(graph)
    a = tuple(v for v in range(t.n) if color[v] == 0)
    b = tuple(v for v in range(t.n) if color[v] == 1)
    return a, b


def _has_anchor(t, side):
    for v in side:
        if t.degree(v) >= 3 and sum(1 for u in t.neighbors(v) if t.degree(u) >= 2) == 1:
            return True
    return False


def good_tree_sides(t):
    """Returns the color classes ``(A, B)`` witnessing that `t` is a good tree, or None.

    A tree is good if its proper 2-coloring A, B with ``|A| <= |B|`` has a vertex in B of degree
    at least 3 which has exactly one neighbor that is not a leaf of `t`. For ``|A| == |B|`` both
    assignments are tried.

    Raises
    ------
    NotATreeError
        If `t` is not a tree.
    """
    first, second = _sides(t)
    orientations = [(first, second), (second, first)]
    for a, b in orientations:
        if len(a) <= len(b) and _has_anchor(t, b):
            return a, b
    return None


def good_tree(t):
    """Returns True iff `t` is a good tree (see :py:func:`good_tree_sides`)."""
    return good_tree_sides(t) is not None


@dataclass
class TreeConsistency:
    """Free and saturated checks of K_{k,m'} against a good tree T with ``|A| = k + 1``."""
    k: int
    orders: List[int]
    free: List[bool]
    saturated: List[bool]

    @property
    def consistent(self):
        return all(self.free) and all(self.saturated)


def good_tree_consistency(t, m_cap=None):
    """Checks that K_{k,m'} is T-free and T-saturated for ``t.n - k <= m' <= m_cap``.

    Parameters
    ----------
    t : spexlab.graphs.Graph
        A good tree.
    m_cap : int, default=None
        Largest right side. Defaults to ``t.n + 2``.

    Returns
    -------
    consistency : TreeConsistency

    Raises
    ------
    NotATreeError
        If `t` is not a tree.
    ValueError
        If `t` is not a good tree.
    """
    sides = good_tree_sides(t)
    if sides is None:
        raise ValueError('Expected a good tree')
    k = len(sides[0]) - 1
    m_cap = t.n + 2 if m_cap is None else m_cap

    spec = FiniteList([t])
    orders = list(range(max(1, t.n - k), m_cap + 1))
    free, saturated = [], []
    for m in orders:
        host = complete_bipartite(k, m)
        free.append(spec.is_free(host))
        saturated.append(free[-1] and is_saturated(host, spec))
    return TreeConsistency(k, orders, free, saturated)


@dataclass
class TreeStats:
    """Share of good trees among labelled trees on `m` vertices.

    `half_width` is the half-width of the 95% normal approximation confidence interval; it is
    zero for an exhaustive count, where `exact_fraction` gives the share as a reduced fraction.
    """
    m: int
    samples: int
    good_count: int
    fraction: float
    half_width: float
    seed: Optional[int]
    exhaustive: bool = False
    consistency_checked: int = 0
    consistency_failures: List[str] = field(default_factory=list)

    @property
    def exact_fraction(self):
        if not self.exhaustive:
            return None
        return str(Fraction(self.good_count, self.samples))

    def to_dict(self):
        return {'m': self.m, 'samples': self.samples, 'good_count': self.good_count,
                'fraction': self.fraction, 'exact_fraction': self.exact_fraction,
                'half_width': self.half_width, 'seed': self.seed,
                'exhaustive': self.exhaustive,
                'consistency_checked': self.consistency_checked,
                'consistency_failures': list(self.consistency_failures)}


def _prufer_sequences(m, samples, random_state, exhaustive):
    if m <= 2:
        yield from [()] * (1 if exhaustive else samples)
    elif exhaustive:
        yield from itertools.product(range(m), repeat=m - 2)
    else:
        for _ in range(samples):
            yield tuple(random_state.randint(0, m, size=m - 2))


def tree_from_prufer(sequence, m):
    """Decodes a Prufer sequence over ``0..m-1`` into a labelled tree on `m` vertices."""
    if m == 1:
        return Graph(1)
    if m == 2:
        return Graph.from_edges(2, [(0, 1)])
    return Graph.from_networkx(nx.from_prufer_sequence([int(v) for v in sequence]))


def tree_stats(m, samples=10000, seed=42, exhaustive=None, check_consistency=False, pbar=None):
    """Estimates the fraction of good trees among the labelled trees on `m` vertices.

    Trees are drawn uniformly by decoding uniform Prufer sequences, so equal seeds give equal
    results.

    Parameters
    ----------
    m : int
        Tree order (at least 1).
    samples : int, default=10000
        Number of sampled trees. Ignored in exhaustive mode.
    seed : int or None, default=42
        Seed of the random state.
    exhaustive : bool or None, default=None
        Enumerates all m^(m-2) labelled trees if True. If None, exhaustive mode is used iff
        ``m^(m-2) <= EXHAUSTIVE_LIMIT``.
    check_consistency : bool, default=False
        For ``m <= 7``, additionally runs :py:func:`good_tree_consistency` on every good tree
        with ``|A| <= 4`` (once per isomorphism class).
    pbar : str or None, default=None
        'tqdm' shows a progress bar.

    Returns
    -------
    stats : TreeStats
    """
    if m < 1:
        raise ValueError(f'Tree order must be positive: {m}')
    total = m ** max(m - 2, 0)
    if exhaustive is None:
        exhaustive = total <= EXHAUSTIVE_LIMIT
    if not exhaustive and samples < 1:
        raise ValueError(f'samples must be positive: {samples}')

    count = total if exhaustive else samples
    random_state = check_random_state(seed)
    check_consistency = check_consistency and m <= CONSISTENCY_ORDER_LIMIT
    checked = dict()

    good = 0
    with build_pbar_context(pbar, dict(total=count, desc=f'm={m}')) as bar:
        for sequence in _prufer_sequences(m, samples, random_state, exhaustive):
            tree = tree_from_prufer(sequence, m)
            sides = good_tree_sides(tree)
            if sides is not None:
                good += 1
                if check_consistency and len(sides[0]) <= CONSISTENCY_SIDE_LIMIT:
                    key = canonical_certificate(tree)
                    if key not in checked:
                        checked[key] = (tree, good_tree_consistency(tree).consistent)
            bar.update(1)

    fraction = good / count
    half_width = 0.0 if exhaustive else Z_95 * float(np.sqrt(fraction * (1 - fraction) / count))
    failures = [graph6_encode(tree) for tree, consistent in checked.values() if not consistent]
    return TreeStats(m, count, good, fraction, half_width, seed, exhaustive=exhaustive,
                     consistency_checked=len(checked),
                     consistency_failures=failures)


def tree_trend(m_list, samples=10000, seed=42, pbar=None):
    """Runs :py:func:`tree_stats` for every order in `m_list` (sampling, never exhaustive)."""
    return [tree_stats(m, samples=samples, seed=seed, exhaustive=False, pbar=pbar)
            for m in sorted(m_list)]


def is_nondecreasing_within(stats, widths=2):
    """True iff consecutive fractions never drop by more than `widths` combined half-widths."""
    return all(later.fraction >= earlier.fraction
               - widths * (earlier.half_width + later.half_width)
               for earlier, later in zip(stats, stats[1:]))


@dataclass
class TreeEdgeCounts:
    """Numbers of labelled trees on [n] containing one edge ij, two incident edges ij, ik and two
    disjoint edges ij, kl."""
    n: int
    single: int
    incident: int
    disjoint: int

    @property
    def expected(self) -> Tuple[int, int, int]:
        n = self.n
        return 2 * n ** (n - 3), 3 * n ** (n - 4), 4 * n ** (n - 4)

    @property
    def matches(self):
        return (self.single, self.incident, self.disjoint) == self.expected

    def to_dict(self):
        return {'n': self.n, 'single': self.single, 'incident': self.incident,
                'disjoint': self.disjoint, 'expected': list(self.expected),
                'matches': self.matches}


def tree_edge_counts(n, pbar=None):
    """Counts, over all n^(n-2) labelled trees on [n], those containing the edge 01, the edges
    01 and 02, and the edges 01 and 23.

    By symmetry these are the counts for any fixed edge, incident pair and disjoint pair.

    Raises
    ------
    ValueError
        Unless ``4 <= n <= 8``.
    """
    if not 4 <= n <= 8:
        raise ValueError(f'Expected 4 <= n <= 8, got {n}')

    single = incident = disjoint = 0
    with build_pbar_context(pbar, dict(total=n ** (n - 2), desc=f'n={n}')) as bar:
        for sequence in itertools.product(range(n), repeat=n - 2):
            tree = tree_from_prufer(sequence, n)
            if tree.has_edge(0, 1):
                single += 1
                incident += tree.has_edge(0, 2)
                disjoint += tree.has_edge(2, 3)
            bar.update(1)
    return TreeEdgeCounts(n, single, incident, disjoint)
