import numpy as np

from dataclasses import dataclass

from scipy.linalg import eigh
from scipy.sparse.linalg import eigsh

from spexlab.base import DENSE_SOLVER_LIMIT, RESIDUAL_TOL, check_alpha
from spexlab.spectral.exceptions import SpectralConvergenceError
from spexlab.spectral.matrices import a_alpha, a_alpha_sparse
from spexlab.utils.bits import iter_bits


@dataclass
class Spectrum:
    """Largest eigenvalue of A_alpha together with its Perron vector.

    The Perron vector is nonnegative, its largest entry is exactly 1, and it vanishes outside the
    component (index `component` in ``g.components()``) attaining the largest eigenvalue.
    """
    alpha: float
    radius: float
    perron: np.ndarray
    residual: float
    component: int

    def to_dict(self):
        return {'alpha': self.alpha, 'lambda': self.radius, 'perron': self.perron.tolist(),
                'residual': self.residual, 'component': self.component}


def _top_eigenpair(g, alpha):
    if g.n == 1:
        return 0.0, np.ones(1)
    if g.n <= DENSE_SOLVER_LIMIT:
        values, vectors = eigh(a_alpha(g, alpha), subset_by_index=[g.n - 1, g.n - 1])
        return float(values[0]), vectors[:, 0]
    values, vectors = eigsh(a_alpha_sparse(g, alpha), k=1, which='LA')
    return float(values[0]), vectors[:, 0]


def _matvec(g, alpha, x):
    if g.n <= DENSE_SOLVER_LIMIT:
        return a_alpha(g, alpha).dot(x)
    return a_alpha_sparse(g, alpha).dot(x)


def spectral_radius(g, alpha=0.0, residual_tol=RESIDUAL_TOL):
    """Computes the largest eigenvalue of A_alpha(g) and its Perron vector.

    Components are solved separately; the reported vector lives on the component with the largest
    eigenvalue (the first one on ties).

    Parameters
    ----------
    g : spexlab.graphs.Graph
        A graph with at least one vertex.
    alpha : float, default=0.0
        ``0 <= alpha < 1``.
    residual_tol : float, default=RESIDUAL_TOL
        Bound on ``||A_alpha x - lambda x||_inf``, relative to ``max(1, lambda)``.

    Returns
    -------
    spectrum : Spectrum

    Raises
    ------
    ValueError
        If `g` has no vertices or `alpha` is out of range.
    SpectralConvergenceError
        If the eigenpair fails the residual check.
    """
    check_alpha(alpha)
    if g.n == 0:
        raise ValueError('The spectral radius of the graph with zero vertices is undefined')

    best = None
    for index, component in enumerate(g.components()):
        value, vector = _top_eigenpair(g.induced_subgraph(component), alpha)
        if best is None or value > best[0]:
            best = (value, vector, index, component)

    value, vector, index, component = best
    vector = np.abs(vector)
    top = int(np.argmax(vector))
    vector = vector / vector[top]
    vector[top] = 1.0

    perron = np.zeros(g.n)
    perron[list(iter_bits(component))] = vector

    residual = float(np.max(np.abs(_matvec(g, alpha, perron) - value * perron)))
    if residual > residual_tol * max(1.0, value):
        raise SpectralConvergenceError(f'Perron pair residual {residual:.3e} exceeds tolerance '
                                       f'{residual_tol:.1e}')
    return Spectrum(alpha, value, perron, residual, index)


def eigenvalues(g, alpha=0.0):
    """Returns all eigenvalues of A_alpha(g) in ascending order (dense graphs only)."""
    if g.n == 0:
        return np.zeros(0)
    return eigh(a_alpha(g, alpha), eigvals_only=True)


def eigen_equation_residuals(g, spectrum):
    """Returns the largest violations of the first- and second-degree eigenvector equations and of
    the Rayleigh quotient identity for the Perron pair of `spectrum`.

    With x the Perron vector, lambda its eigenvalue and d the degrees, the identities are::

        lambda x_v   = alpha d(v) x_v + (1 - alpha) sum_{u ~ v} x_u
        lambda^2 x_v = alpha d(v) lambda x_v + alpha (1 - alpha) sum_{u ~ v} d(u) x_u
                       + (1 - alpha)^2 sum_{w ~ v} sum_{u ~ w} x_u
        lambda       = (alpha sum_v d(v) x_v^2 + (1 - alpha) 2 sum_{uv in E} x_u x_v) / x^T x

    The residuals are relative to ``max(1, lambda)`` and ``max(1, lambda^2)``, respectively.
    """
    alpha = spectrum.alpha
    value = spectrum.radius
    x = spectrum.perron
    degrees = g.degrees().astype(float)
    adjacency = g.adjacency_matrix()

    neighbor_sum = adjacency.dot(x)
    first = value * x - (alpha * degrees * x + (1 - alpha) * neighbor_sum)
    second = value ** 2 * x - (alpha * degrees * value * x
                               + alpha * (1 - alpha) * adjacency.dot(degrees * x)
                               + (1 - alpha) ** 2 * adjacency.dot(neighbor_sum))
    rayleigh = (alpha * np.sum(degrees * x ** 2) + (1 - alpha) * x.dot(neighbor_sum)) / x.dot(x)

    return (float(np.max(np.abs(first))) / max(1.0, value),
            float(np.max(np.abs(second))) / max(1.0, value ** 2),
            abs(rayleigh - value) / max(1.0, value))
