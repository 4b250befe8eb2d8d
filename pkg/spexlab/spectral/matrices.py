import numpy as np

from scipy.sparse import csr_matrix, diags

from spexlab.base import check_alpha


def a_alpha(g, alpha=0.0):
    """Returns the dense matrix A_alpha = alpha * D + (1 - alpha) * A of `g`.

    Parameters
    ----------
    g : spexlab.graphs.Graph
        The graph.
    alpha : float, default=0.0
        Weight of the degree matrix, ``0 <= alpha < 1``.

    Returns
    -------
    matrix : np.ndarray
        Symmetric ``(n, n)`` matrix.
    """
    check_alpha(alpha)
    return alpha * np.diag(g.degrees().astype(float)) + (1 - alpha) * g.adjacency_matrix()


def a_alpha_sparse(g, alpha=0.0):
    """Returns A_alpha as a CSR matrix."""
    check_alpha(alpha)
    edges = g.edges()
    rows = np.array([u for u, v in edges] + [v for u, v in edges], dtype=int)
    cols = np.array([v for u, v in edges] + [u for u, v in edges], dtype=int)
    data = np.full(rows.shape[0], 1 - alpha, dtype=float)
    adjacency = csr_matrix((data, (rows, cols)), shape=(g.n, g.n))
    return (adjacency + diags(alpha * g.degrees().astype(float))).tocsr()
