"""Inequalities on spectral radii which hold for every graph, or for every large F-free graph."""
import math

import networkx as nx

from spexlab.base import EIGEN_TOL, check_alpha
from spexlab.spectral.eigen import spectral_radius


def _validate_order(n, k):
    if not 0 <= k <= n:
        raise ValueError(f'Expected 0 <= k <= n, got k={k}, n={n}')


def initial_lambda_bound(k, n):
    """Spectral radius of K_{k,n-k}, a lower bound for spex(n, F) whenever K_{k,n-k} is F-free."""
    _validate_order(n, k)
    return math.sqrt(k * (n - k))


def weyl_upper_bound(k, n):
    """Upper bound sqrt(k(n-k)) + k for the spectral radius of K_k + (K_2 u empty graph)."""
    return initial_lambda_bound(k, n) + k


def alpha_join_radius(n, k, alpha):
    """Exact A_alpha spectral radius of K_k + K̄_{n-k} from its two-cell equitable quotient."""
    _validate_order(n, k)
    check_alpha(alpha)
    if k == n:
        return float(n - 1)
    if k == 0:
        return 0.0

    a = alpha * (n - 1) + (1 - alpha) * (k - 1)
    b = (1 - alpha) * (n - k)
    c = (1 - alpha) * k
    d = alpha * k
    return (a + d) / 2 + math.sqrt(((a - d) / 2) ** 2 + b * c)


def alpha_spex_lower_bound(n, k, alpha):
    """Lower bound for spex_alpha(n, F) when K_k + K̄_{n-k} is F-free and 0 < alpha < 1.

    The bound is the largest of

    * ``alpha n + k / alpha - k - 1 - 2k(k+1) / (alpha^3 n - alpha^2 (k+1+alpha) + alpha k)``
      (only where the denominator is positive),
    * ``alpha n + k / alpha - k - 1 - alpha``,
    * ``alpha (n - 1)``.
    """
    _validate_order(n, k)
    if not 0 < alpha < 1:
        raise ValueError(f'alpha must be in (0, 1): {alpha}')

    base = alpha * n + k / alpha - k - 1
    candidates = [base - alpha, alpha * (n - 1)]
    denominator = alpha ** 3 * n - alpha ** 2 * (k + 1 + alpha) + alpha * k
    if denominator > 0:
        candidates.append(base - 2 * k * (k + 1) / denominator)
    return max(candidates)


def check_alpha_bounds(g, alpha, tol=EIGEN_TOL):
    """Returns True iff ``alpha Delta(g) <= lambda_alpha(g) <= alpha Delta(g) + (1-alpha) lambda(g)``
    holds up to `tol` (relative to ``max(1, lambda_alpha)``)."""
    check_alpha(alpha)
    if g.n == 0:
        return True
    radius = spectral_radius(g, alpha).radius
    adjacency_radius = spectral_radius(g, 0.0).radius if alpha > 0 else radius
    lower = alpha * g.max_degree
    upper = lower + (1 - alpha) * adjacency_radius
    slack = tol * max(1.0, radius)
    return lower - slack <= radius <= upper + slack


def forest_edge_count(g, v):
    """Returns ``2 e(N_1(v)) + e(N_1(v), N_2(v))``."""
    first = g.sphere(v, 1)
    second = g.sphere(v, 2)
    return 2 * g.edges_within(first) + g.edges_between(first, second)


def check_forest_edge_bound(g, v, c):
    """Returns True iff ``2 e(N_1(v)) + e(N_1(v), N_2(v)) <= 3 c n``."""
    return forest_edge_count(g, v) <= 3 * c * g.n


def forest_edge_constant(f):
    """Constant c of the edge bound around a vertex, for F-free graphs.

    Requires `f` to be bipartite with a vertex whose deletion leaves a forest. The constant is
    ``2 (|V(F)| - 1)``.

    Raises
    ------
    ValueError
        If `f` does not have the required shape.
    """
    nx_graph = f.to_networkx()
    if f.n == 0 or not nx.is_bipartite(nx_graph):
        raise ValueError('f must be a nonempty bipartite graph')
    if f.n > 1 and not any(nx.is_forest(f.remove_vertex(v).to_networkx()) for v in range(f.n)):
        raise ValueError('f must have a vertex whose deletion leaves a forest')
    return 2 * (f.n - 1)
