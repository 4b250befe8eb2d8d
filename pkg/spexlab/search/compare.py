import json

from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Any, Dict, List, Optional

from spexlab.base import EIGEN_TOL, check_alpha
from spexlab.exceptions import CapExceededError
from spexlab.graphs.expressions import GraphExpr, parse_expr
from spexlab.graphs.graph import Graph
from spexlab.search.extremal import radius_polynomial
from spexlab.spectral.eigen import spectral_radius
from spexlab.spectral.partitions import equitable_partition
from spexlab.spectral.polynomials import compare_max_roots


DEFAULT_MAX_QUOTIENT_CELLS = 16


@dataclass
class CandidateResult:
    """A realized candidate construction with its freeness verdict and spectral radius."""
    label: str
    graph: Graph = field(repr=False)
    free: Optional[bool]
    radius: float = None
    quotient_cells: int = None

    def to_dict(self):
        return {'label': self.label, 'n': self.graph.n, 'edges': self.graph.num_edges,
                'free': self.free, 'lambda': self.radius, 'quotient_cells': self.quotient_cells}


@dataclass
class ComparisonReport:
    """Ranking of candidate constructions by spectral radius, largest first.

    ``comparisons[i]`` relates ``ranking[i]`` and ``ranking[i + 1]``: its `verdict` is ``'>'``,
    ``'='`` or ``'inconclusive'`` and its `method` is ``'exact'`` (quotient polynomials) or
    ``'numeric'`` (eigensolver values).
    """
    alpha: float
    family: Optional[str]
    ranking: List[CandidateResult]
    comparisons: List[Dict[str, Any]]
    rejected: List[Dict[str, Any]]
    flags: List[str] = field(default_factory=list)

    def to_dict(self):
        return {'alpha': self.alpha, 'family': self.family,
                'ranking': [candidate.to_dict() for candidate in self.ranking],
                'comparisons': list(self.comparisons),
                'rejected': list(self.rejected),
                'flags': sorted(set(self.flags))}

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)


def _realize(candidate):
    if isinstance(candidate, Graph):
        return repr(candidate), candidate
    if isinstance(candidate, str):
        candidate = parse_expr(candidate)
    if isinstance(candidate, GraphExpr):
        return str(candidate), candidate.realize()
    raise ValueError(f'Unsupported candidate type: {type(candidate).__name__}')


class _Comparator(object):

    def __init__(self, alpha, tol, max_quotient_cells):
        self.alpha = alpha
        self.tol = tol
        self.max_quotient_cells = max_quotient_cells
        self.polynomials = dict()

    def _polynomial(self, candidate):
        if candidate.label not in self.polynomials:
            reducible = candidate.quotient_cells <= self.max_quotient_cells
            self.polynomials[candidate.label] = radius_polynomial(candidate.graph, self.alpha) \
                if reducible else None
        return self.polynomials[candidate.label]

    def compare(self, a, b):
        """Returns (sign, method): the sign of lambda(a) - lambda(b), 0 if equal or undecided."""
        p, q = self._polynomial(a), self._polynomial(b)
        if p is not None and q is not None:
            return compare_max_roots(p, q).sign, 'exact'
        gap = a.radius - b.radius
        if abs(gap) < 10 * self.tol * max(1.0, abs(a.radius)):
            return 0, 'numeric'
        return (1 if gap > 0 else -1), 'numeric'


def candidate_compare(candidates, spec=None, alpha=0.0, tol=EIGEN_TOL,
                      max_quotient_cells=DEFAULT_MAX_QUOTIENT_CELLS):
    """Ranks candidate constructions by their A_alpha spectral radius.

    Candidates whose coarsest equitable partition has at most `max_quotient_cells` cells are
    compared exactly through the largest roots of their quotient polynomials. All other pairs are
    compared by eigensolver values and reported as inconclusive when their gap is below ten times
    `tol`.

    Parameters
    ----------
    candidates : list of str, GraphExpr or Graph
        The constructions. Strings are parsed as graph expressions.
    spec : FamilySpec, default=None
        If given, only free candidates are ranked; the others are listed as rejected.
    alpha : float, default=0.0
        ``0 <= alpha < 1``.

    Returns
    -------
    report : ComparisonReport
    """
    check_alpha(alpha)
    results = []
    rejected = []
    for candidate in candidates:
        try:
            label, graph = _realize(candidate)
        except ValueError as e:
            rejected.append({'label': str(candidate), 'reason': f'invalid: {e}'})
            continue

        free = None
        if spec is not None:
            try:
                free = spec.is_free(graph)
            except CapExceededError as e:
                rejected.append({'label': label, 'reason': f'freeness undecided: {e}'})
                continue
            if not free:
                rejected.append({'label': label, 'reason': f'not free of {spec}'})
                continue
        if graph.n == 0:
            rejected.append({'label': label, 'reason': 'graph has no vertices'})
            continue

        radius = spectral_radius(graph, alpha).radius
        cells = len(equitable_partition(graph))
        results.append(CandidateResult(label, graph, free, radius=radius, quotient_cells=cells))

    comparator = _Comparator(alpha, tol, max_quotient_cells)
    numeric_order = sorted(results, key=lambda c: (-c.radius, c.label))
    ranking = sorted(numeric_order,
                     key=cmp_to_key(lambda a, b: -comparator.compare(a, b)[0]))

    comparisons = []
    flags = []
    for higher, lower in zip(ranking, ranking[1:]):
        sign, method = comparator.compare(higher, lower)
        if sign > 0:
            verdict = '>'
        elif method == 'exact':
            verdict = '='
        else:
            verdict = 'inconclusive'
            flags.append('inconclusive')
        comparisons.append({'higher': higher.label, 'lower': lower.label, 'method': method,
                            'verdict': verdict})
    if len(rejected) > 0:
        flags.append('rejected-candidates')

    return ComparisonReport(alpha, str(spec) if spec is not None else None, ranking,
                            comparisons, rejected, flags=flags)
