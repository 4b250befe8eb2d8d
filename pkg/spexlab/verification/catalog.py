"""Named verification cases: a family, the predicted spectral extremal graph and its statement.

Every case builds its family and, for each order n, the predicted graph. :py:func:`run_case`
checks that the predicted graph is free and, where exhaustive search is feasible, that it is a
spectral extremal graph.
"""
import logging

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from spexlab.base import ENUMERATION_CAP
from spexlab.exceptions import CapExceededError
from spexlab.families.base import (AllTreesOn,
                                   ChordedCycles,
                                   ConsecutiveEvenCycles,
                                   CyclesAtLeast,
                                   CyclesModulo,
                                   DisjointCycles,
                                   FiniteList,
                                   MinorsOf,
                                   SubdivisionsOf)
from spexlab.graphs.canonical import canonical_graph
from spexlab.graphs.expressions import parse_expr
from spexlab.graphs.graph6 import graph6_decode, graph6_encode
from spexlab.graphs.named import (almost_regular,
                                  complete,
                                  complete_bipartite,
                                  complete_minus_paths,
                                  cycle,
                                  empty,
                                  friendship,
                                  intersecting_cycles,
                                  matching,
                                  maximal_union,
                                  path,
                                  star)
from spexlab.search.exceptions import NoFreeGraphError
from spexlab.search.extremal import spex
from spexlab.spectral.eigen import spectral_radius
from spexlab.utils.bits import full_mask
from spexlab.utils.logging import (verbosity_logger,
                                    VERBOSITY_MORE_VERBOSE,
                                    VERBOSITY_QUIET,
                                    VERBOSITY_VERBOSE)
from spexlab.verification.exceptions import UnknownCaseError


def join_empty(k, n):
    """K_k + K̄_{n-k}."""
    return complete(k).join(empty(n - k))


def join_edge(k, n):
    """K_k + (K_2 u K̄_{n-k-2})."""
    return complete(k).join(complete(2).union(empty(n - k - 2)))


def join_matching(k, n):
    """K_k + M_{n-k}, with an isolated vertex if n - k is odd."""
    return complete(k).join(maximal_union(complete(2), n - k))


def bipartite(k, n):
    """K_{k,n-k}."""
    return complete_bipartite(k, n - k)


@dataclass(frozen=True)
class CatalogCase:
    """An application of the main theorem.

    `family` builds the family from the case parameters, `predicted` the predicted extremal graph
    for an order n, and `min_order` the smallest n for which the prediction is meaningful.
    `shape` optionally replaces the isomorphism test by a structural check of a witness.
    """
    name: str
    citation: str
    defaults: Dict[str, Any]
    family: Callable
    predicted: Callable
    min_order: Callable
    k: Callable
    shape: Optional[Callable] = None


def _paths_family(params):
    ell = params['ell']
    order = 2 * ell + 2 if params['variant'] == 'even' else 2 * ell + 3
    return FiniteList([path(order)], names=[f'P{order}'])


def _paths_predicted(n, params):
    builder = join_empty if params['variant'] == 'even' else join_edge
    return builder(params['ell'], n)


def _linear_forest_k(params):
    return sum(order // 2 for order in params['orders']) - 1


def _linear_forest_family(params):
    orders = params['orders']
    if len(orders) < 2 or any(order < 2 for order in orders) or all(order == 3 for order in orders):
        raise ValueError('Expected at least two path orders >= 2, not all equal to 3')
    forest = path(orders[0])
    for order in orders[1:]:
        forest = forest.union(path(order))
    return FiniteList([forest], names=['u'.join(f'P{order}' for order in orders)])


def _linear_forest_predicted(n, params):
    k = _linear_forest_k(params)
    if any(order % 2 == 0 for order in params['orders']):
        return join_empty(k, n)
    return join_edge(k, n)


def _star_forest_family(params):
    degrees = sorted(params['degrees'], reverse=True)
    if len(degrees) < 2 or min(degrees) < 1:
        raise ValueError('Expected at least two star degrees >= 1')
    forest = star(degrees[0])
    for d in degrees[1:]:
        forest = forest.union(star(d))
    return FiniteList([forest], names=['u'.join(f'K1,{d}' for d in degrees)])


def _star_forest_predicted(n, params):
    degrees = sorted(params['degrees'], reverse=True)
    k = len(degrees)
    return complete(k - 1).join(almost_regular(n - k + 1, degrees[-1] - 1))


def _star_forest_shape(g, params):
    """K_{k-1} + X with X almost (d_k - 1)-regular: all but at most one vertex of X have degree
    d_k - 1, the remaining one d_k - 2."""
    degrees = sorted(params['degrees'], reverse=True)
    apexes = len(degrees) - 1
    target = degrees[-1] - 1
    dominating = [v for v in range(g.n) if g.degree(v) == g.n - 1]
    if len(dominating) < apexes:
        return False
    rest = full_mask(g.n)
    for v in dominating[:apexes]:
        rest &= ~(1 << v)
    x = g.induced_subgraph(rest)
    low = [d for d in x.degrees() if d != target]
    return len(low) <= 1 and all(d == target - 1 for d in low)


SMALL_TREE_PREDICTIONS = {
    'S2,2,1': (join_empty, 2),
    'S3,1,1': (join_matching, 1),
    'D2,2': (bipartite, 2),
    'D2,2*': (join_empty, 2),
    'S3,2,1': (join_empty, 2),
    'D2,3': (bipartite, 2)
}


def _small_tree(params):
    name = params['tree']
    if name not in SMALL_TREE_PREDICTIONS:
        raise ValueError(f'Unknown small tree {name}; expected one of '
                         f'{sorted(SMALL_TREE_PREDICTIONS)}')
    return parse_expr(name).realize()


def _long_cycles_k(params):
    return (params['ell'] - 1) // 2


def _long_cycles_predicted(n, params):
    builder = join_empty if params['ell'] % 2 == 1 else join_edge
    return builder(_long_cycles_k(params), n)


def _cycles_mod_regime(params):
    ell, r = params['ell'], params['r']
    if ell % 2 == 0 and ell >= 5:
        return 'even', ell // 2 - 1
    if ell % 2 == 1 and r % 2 == 1:
        return 'odd', (r + ell) // 2 - 1
    raise ValueError(f'No prediction for cycles of length {ell} mod {r}: expected ell even and '
                     'at least 5, or ell and r both odd')


def _cycles_mod_predicted(n, params):
    regime, k = _cycles_mod_regime(params)
    return join_edge(k, n) if regime == 'even' else bipartite(k, n)


def _disjoint_long_k(params):
    k, ell = params['k'], params['ell']
    return k * ell // 2 - 1 if ell % 2 == 0 else k * (ell + 1) // 2 - 1


def _disjoint_long_predicted(n, params):
    builder = join_edge if params['ell'] % 2 == 0 else join_empty
    return builder(_disjoint_long_k(params), n)


def _disjoint_chorded_family(params):
    if params['variant'] == 'one':
        return DisjointCycles(2, chorded=(True, False))
    return ChordedCycles(count=params['k'])


def _disjoint_chorded_k(params):
    return 4 if params['variant'] == 'one' else 3 * params['k'] - 1


def _chorded_cycle_order(chords):
    order = 4
    while order * (order - 3) // 2 < chords:
        order += 1
    return order


def _multiply_chorded_family(params):
    k = params['k']
    if k < 2:
        raise ValueError(f'k must be at least 2: {k}')
    return ChordedCycles(count=1, min_chords=k * (k - 2) + 1)


def _even_cycles_family(params):
    ell = params['ell']
    members = [cycle(2 * ell + 2)]
    names = [f'C{2 * ell + 2}']
    if params['variant'] == 'pair':
        members.insert(0, cycle(2 * ell + 1))
        names.insert(0, f'C{2 * ell + 1}')
    return FiniteList(members, names=names)


def _even_cycles_predicted(n, params):
    builder = join_edge if params['variant'] == 'single' else join_empty
    return builder(params['ell'], n)


def _erdos_sos_order(params):
    return 2 * params['k'] + 2 if params['variant'] == 'even' else 2 * params['k'] + 3


def _erdos_sos_predicted(n, params):
    builder = join_empty if params['variant'] == 'even' else join_edge
    return builder(params['k'], n)


def _intersecting_cycles_family(params):
    ells = params['ells']
    if len(ells) == 0 or min(ells) < 2 or max(ells) < 3:
        raise ValueError(f'Expected half lengths >= 2, at least one of them > 2: {list(ells)}')
    lengths = [2 * ell for ell in ells]
    return FiniteList([intersecting_cycles(lengths)],
                      names=['C' + ','.join(str(length) for length in lengths)])


def _intersecting_cycles_k(params):
    return sum(ell - 1 for ell in params['ells'])


def _subdivisions_family(params):
    t = params['t']
    if t < 3:
        raise ValueError(f't must be at least 3: {t}')
    return SubdivisionsOf(complete(t), name=f'K{t}')


def _minus_paths_pattern(params):
    t, orders = params['t'], params['paths']
    if len(orders) == 0 or min(orders) < 2 or all(order == 3 for order in orders):
        raise ValueError(f'Expected path orders >= 2, not all equal to 3: {list(orders)}')
    if t < 4:
        raise ValueError(f't must be at least 4: {t}')
    return complete_minus_paths(t, orders)


def _minus_paths_family(params):
    name = f'K{params["t"]}-' + '-'.join(f'P{order}' for order in params['paths'])
    return MinorsOf(_minus_paths_pattern(params), name=name)


CATALOG = {case.name: case for case in [
    CatalogCase(
        'paths',
        'Paths: SPEX(n, P_{2l+2}) = K_l + K̄_{n-l} and SPEX(n, P_{2l+3}) = K_l + (K_2 u K̄_{n-l-2})',
        {'ell': 2, 'variant': 'even'},
        _paths_family, _paths_predicted,
        lambda p: 2 * p['ell'] + 2, lambda p: p['ell']),
    CatalogCase(
        'matchings',
        'Matchings: SPEX(n, M_{2k+2}) = K_k + K̄_{n-k}',
        {'k': 1},
        lambda p: FiniteList([matching(2 * p['k'] + 2)], names=[f'M{2 * p["k"] + 2}']),
        lambda n, p: join_empty(p['k'], n),
        lambda p: 2 * p['k'] + 2, lambda p: p['k']),
    CatalogCase(
        'copies-of-P3',
        'Copies of P_3: SPEX(n, k*P_3) = K_{k-1} + M_{n-k+1}',
        {'k': 2},
        lambda p: FiniteList([path(3).repeat(p['k'])], names=[f'{p["k"]}*P3']),
        lambda n, p: join_matching(p['k'] - 1, n),
        lambda p: 3 * p['k'], lambda p: p['k'] - 1),
    CatalogCase(
        'linear-forests',
        'Linear forests: SPEX(n, u P_{v_i}) = K_k + K̄_{n-k} if some v_i is even and '
        'K_k + (K_2 u K̄_{n-k-2}) otherwise, k = sum floor(v_i / 2) - 1',
        {'orders': (4, 2)},
        _linear_forest_family, _linear_forest_predicted,
        lambda p: sum(p['orders']), _linear_forest_k),
    CatalogCase(
        'star-forests',
        'Star forests: every graph in SPEX(n, u K_{1,d_i}) is K_{k-1} + X with X almost '
        '(d_k - 1)-regular',
        {'degrees': (3, 2)},
        _star_forest_family, _star_forest_predicted,
        lambda p: sum(d + 1 for d in p['degrees']), lambda p: len(p['degrees']) - 1,
        shape=_star_forest_shape),
    CatalogCase(
        'small-trees',
        'Certain small trees: SPEX(n, S_{2,2,1}) = SPEX(n, D*_{2,2}) = SPEX(n, S_{3,2,1}) = '
        'K_2 + K̄_{n-2}, SPEX(n, S_{3,1,1}) = K_1 + M_{n-1}, '
        'SPEX(n, D_{2,2}) = SPEX(n, D_{2,3}) = K_{2,n-2}',
        {'tree': 'S2,2,1'},
        lambda p: FiniteList([_small_tree(p)], names=[p['tree']]),
        lambda n, p: SMALL_TREE_PREDICTIONS[p['tree']][0](SMALL_TREE_PREDICTIONS[p['tree']][1],
                                                          n),
        lambda p: _small_tree(p).n, lambda p: SMALL_TREE_PREDICTIONS[p['tree']][1]),
    CatalogCase(
        'erdos-sos',
        'Spectral Erdos-Sos: graphs not containing all trees on 2k+2 (2k+3) vertices have '
        'SPEX = K_k + K̄_{n-k} (K_k + (K_2 u K̄_{n-k-2}))',
        {'k': 1, 'variant': 'even'},
        lambda p: AllTreesOn(_erdos_sos_order(p)), _erdos_sos_predicted,
        _erdos_sos_order, lambda p: p['k']),
    CatalogCase(
        'long-cycles',
        'Long cycles: for cycles of length at least l, SPEX = K_k + K̄_{n-k} if l is odd and '
        'K_k + (K_2 u K̄_{n-k-2}) if l is even, k = floor((l-1)/2)',
        {'ell': 5},
        lambda p: CyclesAtLeast(p['ell']), _long_cycles_predicted,
        lambda p: p['ell'], _long_cycles_k),
    CatalogCase(
        'cycles-mod',
        'Arithmetic progression of cycles: SPEX = K_{l/2-1} + (K_2 u K̄) for l even and at '
        'least 5, and K_{(r+l)/2-1,n-(r+l)/2+1} for l and r odd',
        {'ell': 3, 'r': 5},
        lambda p: CyclesModulo(p['ell'], p['r']), _cycles_mod_predicted,
        lambda p: max(p['ell'], 3), lambda p: _cycles_mod_regime(p)[1]),
    CatalogCase(
        'consec-even-cycles',
        'Interval of even cycles: graphs with k consecutive even cycle lengths have '
        'SPEX = K_k + (K_2 u K̄_{n-k-2})',
        {'k': 2},
        lambda p: ConsecutiveEvenCycles(p['k']), lambda n, p: join_edge(p['k'], n),
        lambda p: p['k'] + 3, lambda p: p['k']),
    CatalogCase(
        'disjoint-cycles',
        'Disjoint cycles: EX(n, F) = K_{2k-1} + K̄_{n-2k+1} for k disjoint cycles, '
        'hence SPEX(n, F) = K_{2k-1} + K̄_{n-2k+1}',
        {'k': 2},
        lambda p: DisjointCycles(p['k']), lambda n, p: join_empty(2 * p['k'] - 1, n),
        lambda p: 3 * p['k'], lambda p: 2 * p['k'] - 1),
    CatalogCase(
        'disjoint-long-cycles',
        'Disjoint long cycles: k disjoint cycles of length at least l give '
        'SPEX = K_{kl/2-1} + (K_2 u K̄) for l even and K_{k(l+1)/2-1} + K̄ for l odd',
        {'k': 2, 'ell': 5},
        lambda p: DisjointCycles(p['k'], min_length=p['ell']), _disjoint_long_predicted,
        lambda p: p['k'] * p['ell'], _disjoint_long_k),
    CatalogCase(
        'disjoint-equal-cycles',
        'Disjoint equicardinal cycles: two disjoint cycles of the same length give '
        'SPEX = K_3 + K̄_{n-3}',
        {},
        lambda p: DisjointCycles(2, equal_length=True), lambda n, p: join_empty(3, n),
        lambda p: 6, lambda p: 3),
    CatalogCase(
        'chorded-cycles',
        'Chorded cycles: ex(n, F) < 2n - 3, hence SPEX(n, F) = K_{2,n-2}',
        {},
        lambda p: ChordedCycles(1), lambda n, p: bipartite(2, n),
        lambda p: 4, lambda p: 2),
    CatalogCase(
        'disjoint-chorded-cycles',
        'Disjoint chorded cycles: k disjoint chorded cycles give SPEX = K_{3k-1,n-3k+1}; two '
        'disjoint cycles, one of them chorded, give SPEX = K_{4,n-4}',
        {'k': 2, 'variant': 'all'},
        _disjoint_chorded_family, lambda n, p: bipartite(_disjoint_chorded_k(p), n),
        lambda p: 7 if p['variant'] == 'one' else 4 * p['k'], _disjoint_chorded_k),
    CatalogCase(
        'multiply-chorded',
        'Multiply chorded cycles: cycles with k(k-2)+1 chords give SPEX = K_{k,n-k}',
        {'k': 3},
        _multiply_chorded_family, lambda n, p: bipartite(p['k'], n),
        lambda p: _chorded_cycle_order(p['k'] * (p['k'] - 2) + 1), lambda p: p['k']),
    CatalogCase(
        'incident-chords',
        'Cycles with k incident chords: SPEX = K_{k+1,n-k-1}',
        {'k': 2},
        lambda p: ChordedCycles(1, min_chords=p['k'], incident=True),
        lambda n, p: bipartite(p['k'] + 1, n),
        lambda p: p['k'] + 3, lambda p: p['k'] + 1),
    CatalogCase(
        'intersecting-even-cycles',
        'Intersecting even cycles: cycles of lengths 2l_1, ..., 2l_t sharing one vertex, all '
        'l_i >= 2 and some l_i > 2, give SPEX = K_k + (K_2 u K̄_{n-k-2}), k = sum (l_i - 1)',
        {'ells': (2, 3)},
        _intersecting_cycles_family,
        lambda n, p: join_edge(_intersecting_cycles_k(p), n),
        lambda p: sum(2 * ell - 1 for ell in p['ells']) + 1, _intersecting_cycles_k),
    CatalogCase(
        'even-cycles',
        'Even cycles: SPEX(n, C_{2l+2}) = K_l + (K_2 u K̄_{n-l-2}) and '
        'SPEX(n, {C_{2l+1}, C_{2l+2}}) = K_l + K̄_{n-l}',
        {'ell': 1, 'variant': 'single'},
        _even_cycles_family, _even_cycles_predicted,
        lambda p: 2 * p['ell'] + 2, lambda p: p['ell']),
    CatalogCase(
        'minors-Kk',
        'Minors: the K_k-minor free spectral extremal graph is K_{k-2} + K̄_{n-k+2}',
        {'k': 4},
        lambda p: MinorsOf(complete(p['k']), name=f'K{p["k"]}'),
        lambda n, p: join_empty(p['k'] - 2, n),
        lambda p: p['k'], lambda p: p['k'] - 2),
    CatalogCase(
        'friendship-minor',
        'Minors: the F_k-minor free spectral extremal graph is K_k + K̄_{n-k}',
        {'k': 2},
        lambda p: MinorsOf(friendship(p['k']), name=f'F{p["k"]}'),
        lambda n, p: join_empty(p['k'], n),
        lambda p: 2 * p['k'] + 1, lambda p: p['k']),
    CatalogCase(
        'minors-Kk-minus-paths',
        'Minors: if F is K_t without the edges of disjoint paths, not all of order 3, the '
        'F-minor free spectral extremal graph is K_{t-3} + K̄_{n-t+3}',
        {'t': 5, 'paths': (3, 2)},
        _minus_paths_family, lambda n, p: join_empty(p['t'] - 3, n),
        lambda p: p['t'], lambda p: p['t'] - 3),
    CatalogCase(
        'subdivisions-Kk',
        'Topological subdivisions: if K_k + K̄_{n-k} is saturated for the subdivisions of F, '
        'SPEX = K_k + K̄_{n-k}; for F = K_t this is K_{t-2} + K̄_{n-t+2}',
        {'t': 4},
        _subdivisions_family, lambda n, p: join_empty(p['t'] - 2, n),
        lambda p: p['t'], lambda p: p['t'] - 2),
]}


def case_names():
    return sorted(CATALOG)


def get_case(name):
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownCaseError(f'Unknown case {name}; available cases: {", ".join(case_names())}')


@dataclass
class CaseRecord:
    """Outcome of a case at one order n."""
    n: int
    predicted: str
    predicted_free: Optional[bool]
    verdict: str
    lambdas: Dict[str, Dict[str, Optional[float]]] = field(default_factory=dict)
    edges: Dict[str, Optional[int]] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def to_dict(self):
        return {'n': self.n, 'predicted': self.predicted, 'predicted_free': self.predicted_free,
                'verdict': self.verdict, 'lambdas': self.lambdas, 'edges': self.edges,
                'notes': list(self.notes)}


@dataclass
class CaseResult:
    """Per-n records of a catalog case and the observed threshold.

    `threshold` is the smallest tested n from which on every decided record matched the
    prediction, or None if the prediction was not observed to hold up to the largest tested n.
    """
    name: str
    citation: str
    family: str
    params: Dict[str, Any]
    k: int
    records: List[CaseRecord]
    threshold: Optional[int]

    @property
    def all_predictions_free(self):
        return all(record.predicted_free is not False for record in self.records)

    def to_dict(self):
        return {'name': self.name, 'citation': self.citation, 'family': self.family,
                'params': {key: list(value) if isinstance(value, tuple) else value
                           for key, value in self.params.items()},
                'k': self.k, 'threshold': self.threshold,
                'records': [record.to_dict() for record in self.records]}


def observed_threshold(records):
    threshold = None
    for record in reversed([r for r in records if r.verdict != 'skipped']):
        if record.verdict != 'matched':
            break
        threshold = record.n
    return threshold


def _matches(case, params, predicted_code, report):
    if case.shape is None:
        return predicted_code in report.witnesses
    return any(case.shape(graph6_decode(code), params) for code in report.witnesses)


def _evaluate(case, spec, params, n, alphas, enumeration_cap, workers, logger):
    predicted = case.predicted(n, params)
    code = graph6_encode(canonical_graph(predicted))
    record = CaseRecord(n, code, None, 'skipped', edges={'predicted': predicted.num_edges})

    try:
        record.predicted_free = spec.is_free(predicted)
    except CapExceededError as e:
        record.notes.append(f'freeness of the predicted graph undecided: {e}')
    if record.predicted_free is False:
        record.notes.append('predicted graph is not free')

    if n > enumeration_cap:
        record.notes.append(f'n exceeds the enumeration cap {enumeration_cap}')
        return record

    matched = True
    for alpha in alphas:
        try:
            report = spex(n, spec, alpha=alpha, workers=workers, cap=enumeration_cap)
        except (CapExceededError, NoFreeGraphError) as e:
            record.notes.append(f'search at alpha={alpha:g} failed: {e}')
            record.verdict = 'skipped'
            return record
        record.lambdas[f'{alpha:g}'] = {
            'predicted': spectral_radius(predicted, alpha).radius if predicted.n > 0 else None,
            'best': report.optimum}
        record.edges['best'] = graph6_decode(report.witnesses[0]).num_edges
        if 'tie' in report.flags:
            record.notes.append(f'tie at alpha={alpha:g}: {len(report.witnesses)} witnesses')
        matched = matched and _matches(case, params, code, report)
        logger.info('%s n=%d alpha=%g: %s', case.name, n, alpha,
                    'matched' if matched else 'unmatched', verbosity=VERBOSITY_MORE_VERBOSE)

    record.verdict = 'matched' if matched else 'unmatched'
    return record


def run_case(name, n_range, alphas=(0.0,), params=None, enumeration_cap=ENUMERATION_CAP,
             workers=1, verbosity=VERBOSITY_QUIET):
    """Runs a catalog case over the orders `n_range`.

    Parameters
    ----------
    name : str
        Case name, see :py:func:`case_names`.
    n_range : iterable of int
        Orders to test. Orders below the case's minimum order are skipped.
    alphas : sequence of float, default=(0.0,)
        Values of alpha for which the prediction is compared with spex_alpha.
    params : dict, default=None
        Overrides of the case parameters (e.g. ``{'k': 2}``).
    enumeration_cap : int, default=ENUMERATION_CAP
        Orders above this cap only get the freeness check.

    Returns
    -------
    result : CaseResult

    Raises
    ------
    UnknownCaseError
        If `name` is not in the catalog.
    """
    case = get_case(name)
    params = {**case.defaults, **(params or dict())}
    spec = case.family(params)
    k = case.k(params)
    min_order = max(case.min_order(params), k + 2)

    with verbosity_logger():
        logger = logging.getLogger(__name__)
        logger.verbosity = verbosity
    logger.info('Running case %s (%s) with k=%d', name, spec, k, verbosity=VERBOSITY_VERBOSE)

    records = []
    for n in sorted(set(n_range)):
        if n < min_order:
            logger.info('%s: n=%d below minimum order %d', name, n, min_order,
                        verbosity=VERBOSITY_MORE_VERBOSE)
            continue
        records.append(_evaluate(case, spec, params, n, alphas, enumeration_cap, workers, logger))

    return CaseResult(name, case.citation, str(spec), params, k, records,
                      observed_threshold(records))
