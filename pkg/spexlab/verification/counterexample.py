"""Reproduction of the counterexample family whose extremal and spectral extremal graphs differ.

For n = 2 (mod 4) the extremal construction is H = K_2 + (P_8 u (n-10)/4 * P_4), while
G = K_2 + (n-2)/4 * K_{1,3} has one edge less. Both have small equitable quotients, so their
spectral radii are the largest roots of a cubic and a degree 7 polynomial, which are compared
exactly for every n up to a ceiling.
"""
import warnings

import numpy as np

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from spexlab.families.base import Counterexample7
from spexlab.graphs.named import complete, path, star
from spexlab.spectral.partitions import quotient, quotient_from_matrix
from spexlab.spectral.polynomials import (char_poly,
                                          check_second_root_below,
                                          compare_max_roots,
                                          max_real_root,
                                          Polynomial)
from spexlab.utils.logging import get_logger, VERBOSITY_QUIET, VERBOSITY_VERBOSE
from spexlab.verification.exceptions import InvalidOrderError


DEFAULT_CEILING = 1000000

FREENESS_CHECK_LIMIT = 14
"""Largest n for which both constructions are checked against the family directly."""

CONSTANT_INTERVAL_NOTE = ('the interval 13/(32*sqrt(2)) < C < 5/(32*sqrt(2)) for the constant of '
                          'the asymptotic comparison is empty; the crossover is established by '
                          'exact root comparison instead')

SCREEN_MARGIN = 1e-7


def check_order(n):
    if n < 10 or n % 4 != 2:
        raise InvalidOrderError(f'n must be at least 10 and congruent to 2 mod 4: {n}')


def construction_g(n):
    """K_2 + (n-2)/4 * K_{1,3}."""
    check_order(n)
    return complete(2).join(star(3).repeat((n - 2) // 4))


def construction_h(n):
    """K_2 + (P_8 u (n-10)/4 * P_4)."""
    check_order(n)
    return complete(2).join(path(8).union(path(4).repeat((n - 10) // 4)))


def cells_g(n):
    """Cells of G: the K_2, the star centers, the star leaves."""
    stars = (n - 2) // 4
    centers = [2 + 4 * i for i in range(stars)]
    leaves = [2 + 4 * i + j for i in range(stars) for j in range(1, 4)]
    return [[0, 1], centers, leaves]


def cells_h(n):
    """Cells of H: the K_2, inner and end vertices of the P_4 copies, then the P_8 vertex pairs
    from the middle outwards. The P_4 cells are empty for n = 10."""
    copies = (n - 10) // 4
    inner = [10 + 4 * i + j for i in range(copies) for j in (1, 2)]
    ends = [10 + 4 * i + j for i in range(copies) for j in (0, 3)]
    # the P_8 occupies vertices 2..9
    return [[0, 1], inner, ends, [5, 6], [4, 7], [3, 8], [2, 9]]


def printed_b_g(n):
    n = Fraction(n)
    return [[1, (n - 2) / 4, 3 * (n - 2) / 4],
            [2, 0, 3],
            [2, 1, 0]]


def printed_b_h(n):
    half = (Fraction(n) - 10) / 2
    return [[1, half, half, 2, 2, 2, 2],
            [2, 1, 1, 0, 0, 0, 0],
            [2, 1, 0, 0, 0, 0, 0],
            [2, 0, 0, 1, 1, 0, 0],
            [2, 0, 0, 1, 0, 1, 0],
            [2, 0, 0, 0, 1, 0, 1],
            [2, 0, 0, 0, 0, 1, 0]]


def printed_p_g(n):
    """x^3 - x^2 + (1 - 2n) x + 9 - 3n."""
    return Polynomial([9 - 3 * n, 1 - 2 * n, -1, 1])


def printed_p_h(n):
    """x^7 - 3x^6 + (3 - 2n) x^5 + (3 + n) x^4 + (7n - 22) x^3 + (1 - n) x^2 + (10 - 4n) x + 3 - n.
    """
    return Polynomial([3 - n, 10 - 4 * n, 1 - n, 7 * n - 22, 3 + n, 3 - 2 * n, -3, 1])


# quotient block of the (empty) P_4 cells at n = 10
EMPTY_CELLS_FACTOR = Polynomial([-1, -1, 1])


def _restrict(matrix, indices):
    return [[matrix[i][j] for j in indices] for i in indices]


@dataclass
class CounterexampleRecord:
    """Exact checks at one order n."""
    n: int
    edges_g: int
    edges_h: int
    free_g: Optional[bool] = None
    free_h: Optional[bool] = None
    quotient_g_matches: bool = False
    quotient_h_matches: bool = False
    poly_g_matches: bool = False
    poly_h_matches: bool = False
    lambda_g: float = None
    lambda_h: float = None
    comparison: int = None
    separator: str = None
    second_root_g: bool = None
    second_root_h: bool = None

    @property
    def edge_difference(self):
        return self.edges_h - self.edges_g

    def failures(self):
        failed = []
        if self.edge_difference != 1:
            failed.append(f'n={self.n}: e(H) - e(G) = {self.edge_difference}')
        for name in ('free_g', 'free_h'):
            if getattr(self, name) is False:
                failed.append(f'n={self.n}: {name} failed')
        for name in ('quotient_g_matches', 'quotient_h_matches', 'poly_g_matches',
                     'poly_h_matches', 'second_root_g', 'second_root_h'):
            if not getattr(self, name):
                failed.append(f'n={self.n}: {name} failed')
        return failed

    def to_dict(self):
        return {'n': self.n, 'edges_g': self.edges_g, 'edges_h': self.edges_h,
                'edge_difference': self.edge_difference, 'free_g': self.free_g,
                'free_h': self.free_h, 'quotient_g_matches': self.quotient_g_matches,
                'quotient_h_matches': self.quotient_h_matches,
                'poly_g_matches': self.poly_g_matches, 'poly_h_matches': self.poly_h_matches,
                'lambda_g': self.lambda_g, 'lambda_h': self.lambda_h,
                'comparison': self.comparison, 'separator': self.separator,
                'second_root_g': self.second_root_g, 'second_root_h': self.second_root_h}


@dataclass
class CounterexampleReport:
    """Per-n records, the smallest n with lambda(G) > lambda(H) and any failed exact check.

    `listed_crossover` is the smallest n of the requested orders with lambda(G) > lambda(H);
    `crossover` the smallest such n found by the sweep up to `ceiling` (None if there is none).
    """
    records: List[CounterexampleRecord]
    ceiling: int
    crossover: Optional[int]
    crossover_edges: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def listed_crossover(self):
        return next((r.n for r in self.records if r.comparison is not None and r.comparison > 0),
                    None)

    @property
    def failures(self):
        failed = [failure for record in self.records for failure in record.failures()]
        if self.crossover_edges and self.crossover_edges.get('difference') != 1:
            failed.append(f'n={self.crossover}: e(H) - e(G) != 1')
        return failed

    @property
    def passed(self):
        return len(self.failures) == 0

    def to_dict(self):
        return {'records': [record.to_dict() for record in self.records],
                'ceiling': self.ceiling, 'crossover': self.crossover,
                'listed_crossover': self.listed_crossover,
                'crossover_edges': self.crossover_edges,
                'failures': self.failures, 'notes': list(self.notes)}


def quotient_polynomials(n):
    """Characteristic polynomials of the quotients of G and H computed from the graphs."""
    g, h = construction_g(n), construction_h(n)
    nonempty = [cell for cell in cells_h(n) if len(cell) > 0]
    return char_poly(quotient(g, cells_g(n))), char_poly(quotient(h, nonempty))


def check_record(n, freeness_limit=FREENESS_CHECK_LIMIT):
    """Runs all exact checks for one order n."""
    g, h = construction_g(n), construction_h(n)
    record = CounterexampleRecord(n, g.num_edges, h.num_edges)

    if n <= freeness_limit:
        family = Counterexample7()
        record.free_g = family.is_free(g)
        record.free_h = family.is_free(h)

    q_g = quotient(g, cells_g(n))
    record.quotient_g_matches = [list(row) for row in q_g.matrix] == printed_b_g(n)

    nonempty = [i for i, cell in enumerate(cells_h(n)) if len(cell) > 0]
    q_h = quotient(h, [cells_h(n)[i] for i in nonempty])
    record.quotient_h_matches = [list(row) for row in q_h.matrix] \
        == _restrict(printed_b_h(n), nonempty)

    p_g, p_h = char_poly(q_g), char_poly(q_h)
    record.poly_g_matches = p_g == printed_p_g(n) \
        and char_poly(quotient_from_matrix(printed_b_g(n))) == printed_p_g(n)
    expected_h = printed_p_h(n)
    if len(nonempty) < 7:
        p_h_full = p_h * EMPTY_CELLS_FACTOR
    else:
        p_h_full = p_h
    record.poly_h_matches = p_h_full == expected_h \
        and char_poly(quotient_from_matrix(printed_b_h(n))) == expected_h

    comparison = compare_max_roots(p_g, p_h)
    record.lambda_g = comparison.p_root
    record.lambda_h = comparison.q_root
    record.comparison = comparison.sign
    record.separator = str(comparison.separator) if comparison.separator is not None else None

    square = 2 * (n - 2)
    record.second_root_g = check_second_root_below(p_g, square)
    record.second_root_h = check_second_root_below(p_h, square)
    return record


def _largest_roots(matrices):
    values = np.linalg.eigvals(np.array(matrices, dtype=float))
    return np.max(values.real, axis=1)


def find_crossover(ceiling=DEFAULT_CEILING, start=10, chunk=4096):
    """Returns the smallest n = 2 (mod 4) with ``start <= n <= ceiling`` and
    lambda(G) > lambda(H), or None.

    Floating point quotient eigenvalues screen the orders; every order whose float gap does not
    clearly favor H is decided by an exact comparison of the printed polynomials.
    """
    first = start + (2 - start) % 4
    orders = np.arange(max(first, 10), ceiling + 1, 4)
    for offset in range(0, len(orders), chunk):
        block = [int(n) for n in orders[offset:offset + chunk]]
        gap = _largest_roots([printed_b_g(n) for n in block]) \
            - _largest_roots([printed_b_h(n) for n in block])
        for n, difference in zip(block, gap):
            if difference < -SCREEN_MARGIN:
                continue
            if compare_max_roots(printed_p_g(n), printed_p_h(n)).sign > 0:
                return n
    return None


def counterexample_report(n_list=(10, 14, 18), ceiling=DEFAULT_CEILING,
                          freeness_limit=FREENESS_CHECK_LIMIT, verbosity=VERBOSITY_QUIET):
    """Reproduces the counterexample: constructions, edge counts, freeness at small n, quotient
    matrices, characteristic polynomials, the second root separation and the crossover order.

    Parameters
    ----------
    n_list : iterable of int, default=(10, 14, 18)
        Orders checked in full; each must be at least 10 and congruent to 2 mod 4.
    ceiling : int, default=DEFAULT_CEILING
        Largest order of the crossover sweep.
    freeness_limit : int, default=FREENESS_CHECK_LIMIT
        Orders up to this limit are checked against the family directly.

    Returns
    -------
    report : CounterexampleReport

    Raises
    ------
    InvalidOrderError
        If an order in `n_list` is invalid.
    """
    n_list = sorted(set(n_list))
    for n in n_list:
        check_order(n)

    logger = get_logger(__name__, verbosity=verbosity)

    records = []
    for n in n_list:
        records.append(check_record(n, freeness_limit=freeness_limit))
        logger.info('Counterexample n=%d: lambda(G)=%.12f lambda(H)=%.12f', n,
                    records[-1].lambda_g, records[-1].lambda_h, verbosity=VERBOSITY_VERBOSE)

    warnings.warn(CONSTANT_INTERVAL_NOTE, RuntimeWarning)
    notes = [CONSTANT_INTERVAL_NOTE]

    crossover = find_crossover(ceiling=ceiling)
    crossover_edges = dict()
    if crossover is None:
        notes.append(f'no crossover below {ceiling}')
    else:
        edges_g = construction_g(crossover).num_edges
        edges_h = construction_h(crossover).num_edges
        crossover_edges = {'g': edges_g, 'h': edges_h, 'difference': edges_h - edges_g}
        logger.info('Crossover at n=%d', crossover, verbosity=VERBOSITY_VERBOSE)

    return CounterexampleReport(records, ceiling, crossover, crossover_edges=crossover_edges,
                                notes=notes)
