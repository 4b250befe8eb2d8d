import numpy as np

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from spexlab.graphs.canonical import refine_partition
from spexlab.spectral.exceptions import PartitionNotEquitableError
from spexlab.utils.bits import popcount, to_mask


@dataclass(frozen=True)
class QuotientMatrix:
    """Quotient matrix of an equitable partition.

    ``matrix[i][j]`` is the number of neighbors in cell j of any vertex in cell i.
    """
    cells: Tuple[Tuple[int, ...], ...]
    sizes: Tuple[int, ...]
    matrix: Tuple[Tuple[Fraction, ...], ...]

    def to_numpy(self):
        return np.array([[float(entry) for entry in row] for row in self.matrix], dtype=float)

    def largest_eigenvalue(self):
        """Largest real eigenvalue, computed in floating point."""
        values = np.linalg.eigvals(self.to_numpy())
        return float(np.max(values.real))

    def __len__(self):
        return len(self.sizes)


def _normalize(g, partition):
    cells = [sorted(cell) for cell in partition if len(cell) > 0]
    covered = sorted(v for cell in cells for v in cell)
    if covered != list(range(g.n)):
        raise ValueError('partition must cover every vertex exactly once')
    return cells


def equitable_partition(g, seed=None):
    """Returns the coarsest equitable refinement of `seed` (default: a single cell).

    Cells are refined by the number of neighbors their vertices have in every other cell until a
    fixpoint is reached; split cells keep the position of their parent.
    """
    cells = _normalize(g, seed) if seed is not None else [list(range(g.n))]
    if g.n == 0:
        return []
    return [tuple(sorted(cell)) for cell in refine_partition(g.adj, cells)]


def _counts(g, cells):
    masks = [to_mask(cell) for cell in cells]
    return [[sorted({popcount(g.adj[v] & mask) for v in cell}) for mask in masks]
            for cell in cells]


def is_equitable(g, partition):
    cells = _normalize(g, partition)
    return all(len(counts) == 1 for row in _counts(g, cells) for counts in row)


def quotient(g, partition):
    """Builds the quotient matrix of an equitable partition, with exact rational entries.

    Raises
    ------
    PartitionNotEquitableError
        If some vertices of a cell have different numbers of neighbors in another cell.
    """
    cells = _normalize(g, partition)
    counts = _counts(g, cells)
    for i, row in enumerate(counts):
        for j, values in enumerate(row):
            if len(values) != 1:
                raise PartitionNotEquitableError(f'Cell {i} has {values} neighbors in cell {j}')
    matrix = tuple(tuple(Fraction(values[0]) for values in row) for row in counts)
    return QuotientMatrix(tuple(tuple(cell) for cell in cells),
                          tuple(len(cell) for cell in cells),
                          matrix)


def quotient_from_matrix(matrix, sizes=None):
    """Wraps an explicit matrix (e.g. a printed quotient at a given n) as a QuotientMatrix."""
    matrix = tuple(tuple(Fraction(entry) for entry in row) for row in matrix)
    if any(len(row) != len(matrix) for row in matrix):
        raise ValueError('matrix must be square')
    sizes = tuple(sizes) if sizes is not None else (1,) * len(matrix)
    return QuotientMatrix(tuple(), sizes, matrix)


def quotient_alpha(q, alpha):
    """Quotient of A_alpha = alpha D + (1 - alpha) A for the same equitable partition.

    Vertices in a cell share their degree, the row sum of the adjacency quotient, so the partition
    stays equitable for A_alpha. `alpha` is converted to an exact rational.
    """
    alpha = Fraction(alpha)
    matrix = tuple(
        tuple((1 - alpha) * entry + (alpha * sum(row) if i == j else 0)
              for j, entry in enumerate(row))
        for i, row in enumerate(q.matrix))
    return QuotientMatrix(q.cells, q.sizes, matrix)
