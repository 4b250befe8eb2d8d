import csv
import json
import os
import warnings

from datetime import datetime

from spexlab.utils.datetime import format_timedelta
from spexlab.utils.logging import get_logger, VERBOSITY_QUIET, VERBOSITY_VERBOSE
from spexlab.verification.catalog import run_case
from spexlab.verification.counterexample import counterexample_report
from spexlab.verification.trees import tree_edge_counts, tree_stats


DEFAULT_REPORT_CASES = {
    'matchings': (5, 8),
    'paths': (6, 8),
    'long-cycles': (5, 8),
    'chorded-cycles': (5, 8),
    'erdos-sos': (5, 8),
}
"""Catalog cases and inclusive order ranges of the default reproduction report."""

DEFAULT_TREE_ORDERS = (4, 8, 16, 32, 64)

DEFAULT_EDGE_COUNT_ORDERS = (4, 5, 6, 7)


def _fmt(value):
    if value is None:
        return '-'
    if isinstance(value, float):
        return f'{value:.10f}'
    return str(value)


def write_json(data, path):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2, ensure_ascii=False, sort_keys=False)
        f.write('\n')


def write_case_json(result, path):
    write_json(result.to_dict(), path)


def write_case_csv(result, path, alpha='0'):
    """Writes one ``(n, lambda_pred, lambda_best, matched)`` row per record of a case result."""
    with open(path, 'w', newline='', encoding='utf-8') as f:
        writer = csv.writer(f)
        writer.writerow(['n', 'lambda_pred', 'lambda_best', 'matched'])
        for record in result.records:
            lambdas = record.lambdas.get(alpha, dict())
            writer.writerow([record.n, lambdas.get('predicted'), lambdas.get('best'),
                             record.verdict == 'matched'])


def _case_section(result):
    lines = [f'### {result.name}', '', result.citation, '',
             f'Family `{result.family}`, k = {result.k}, observed threshold: '
             f'{_fmt(result.threshold)}', '',
             '| n | predicted (graph6) | free | verdict | notes |',
             '|---|---|---|---|---|']
    for record in result.records:
        lines.append(f'| {record.n} | `{record.predicted}` | {_fmt(record.predicted_free)} | '
                     f'{record.verdict} | {"; ".join(record.notes)} |')
    return lines + ['']


def _counterexample_section(report):
    lines = ['## Counterexample', '',
             '| n | e(G) | e(H) | lambda(G) | lambda(H) | sign | quotients | polynomials |',
             '|---|---|---|---|---|---|---|---|']
    for r in report.records:
        lines.append(f'| {r.n} | {r.edges_g} | {r.edges_h} | {_fmt(r.lambda_g)} | '
                     f'{_fmt(r.lambda_h)} | {r.comparison} | '
                     f'{r.quotient_g_matches and r.quotient_h_matches} | '
                     f'{r.poly_g_matches and r.poly_h_matches} |')
    lines += ['', f'Crossover below {report.ceiling}: {_fmt(report.crossover)}', '']
    lines += [f'- {note}' for note in report.notes]
    lines += [f'- FAILED: {failure}' for failure in report.failures]
    return lines + ['']


def _tree_section(stats, edge_counts):
    lines = ['## Trees', '',
             '| m | trees | good | fraction | 95% half-width | exhaustive |',
             '|---|---|---|---|---|---|']
    for s in stats:
        lines.append(f'| {s.m} | {s.samples} | {s.good_count} | '
                     f'{s.exact_fraction or format(s.fraction, ".4f")} | '
                     f'{s.half_width:.4f} | {s.exhaustive} |')
    lines += ['', '| n | N(ij) | N(ij,ik) | N(ij,kl) | formulas hold |', '|---|---|---|---|---|']
    for c in edge_counts:
        lines.append(f'| {c.n} | {c.single} | {c.incident} | {c.disjoint} | {c.matches} |')
    return lines + ['']


def write_markdown_report(path, case_results=(), counterexample=None, tree_stats_list=(),
                          edge_counts=(), runtime=None):
    """Writes a Markdown reproduction report with one section per part that is given."""
    lines = ['# spexlab reproduction report', '']
    if runtime is not None:
        lines += [f'Runtime: {format_timedelta(runtime)}', '']
    if len(case_results) > 0:
        lines += ['## Catalog cases', '']
        for result in case_results:
            lines += _case_section(result)
    if counterexample is not None:
        lines += _counterexample_section(counterexample)
    if len(tree_stats_list) > 0 or len(edge_counts) > 0:
        lines += _tree_section(tree_stats_list, edge_counts)
    with open(path, 'w', encoding='utf-8') as f:
        f.write('\n'.join(lines))


def run_report(output_dir, cases=None, counterexample_n=(10, 14, 18), ceiling=10 ** 6,
               tree_orders=DEFAULT_TREE_ORDERS, tree_samples=10000, seed=42,
               edge_count_orders=DEFAULT_EDGE_COUNT_ORDERS, workers=1, enumeration_cap=None,
               verbosity=VERBOSITY_QUIET):
    """Runs the catalog cases, the counterexample and the tree statistics and writes
    ``report.md``, a JSON (and for cases a CSV) file per part into `output_dir`.

    Returns
    -------
    paths : list of str
        The files written.
    """
    cases = DEFAULT_REPORT_CASES if cases is None else cases
    logger = get_logger(__name__, verbosity=verbosity)
    os.makedirs(output_dir, exist_ok=True)
    start = datetime.now()
    paths = []

    case_kwargs = dict() if enumeration_cap is None else dict(enumeration_cap=enumeration_cap)
    results = []
    for name, (low, high) in cases.items():
        logger.info('Report: case %s for n=%d..%d', name, low, high, verbosity=VERBOSITY_VERBOSE)
        result = run_case(name, range(low, high + 1), workers=workers, verbosity=verbosity,
                          **case_kwargs)
        results.append(result)
        for suffix, writer in (('json', write_case_json), ('csv', write_case_csv)):
            path = os.path.join(output_dir, f'case-{name}.{suffix}')
            writer(result, path)
            paths.append(path)

    with warnings.catch_warnings():
        warnings.simplefilter('ignore', RuntimeWarning)
        counterexample = counterexample_report(counterexample_n, ceiling=ceiling,
                                               verbosity=verbosity)
    path = os.path.join(output_dir, 'counterexample.json')
    write_json(counterexample.to_dict(), path)
    paths.append(path)

    stats = [tree_stats(m, samples=tree_samples, seed=seed) for m in tree_orders]
    counts = [tree_edge_counts(n) for n in edge_count_orders]
    path = os.path.join(output_dir, 'trees.json')
    write_json({'stats': [s.to_dict() for s in stats],
                'edge_counts': [c.to_dict() for c in counts]}, path)
    paths.append(path)

    path = os.path.join(output_dir, 'report.md')
    write_markdown_report(path, results, counterexample, stats, counts,
                          runtime=datetime.now() - start)
    paths.append(path)
    return paths
