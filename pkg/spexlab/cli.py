"""Command line front end: ``spexlab <command> [options]``.

Exit codes: 0 on success, 1 if an exact verification check fails or a search has no answer,
2 on invalid input (expressions, families, configuration, arguments) and 3 if a cap is
exceeded.
"""
import argparse
import json
import sys
import warnings

from spexlab.exceptions import CapExceededError, SpexlabException
from spexlab.config import load_config
from spexlab.families.dsl import parse_family
from spexlab.graphs.exceptions import ExpressionSyntaxError, Graph6FormatError
from spexlab.graphs.expressions import realize
from spexlab.graphs.graph6 import graph6_decode, graph6_encode
from spexlab.search.extremal import ex, spex
from spexlab.search.restricted import ex_restricted
from spexlab.spectral.eigen import spectral_radius
from spexlab.utils.logging import configure_logging
from spexlab.verification.catalog import run_case
from spexlab.verification.counterexample import counterexample_report
from spexlab.verification.reporting import run_report, write_case_csv
from spexlab.verification.trees import tree_edge_counts, tree_stats


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_CAP = 3


def parse_graph(text):
    """Parses a graph expression, falling back to graph6."""
    try:
        return realize(text)
    except ExpressionSyntaxError as e:
        try:
            return graph6_decode(text)
        except Graph6FormatError:
            raise e


def parse_int_list(text):
    """Parses ``'5..9'`` (inclusive range) or ``'10,14,18'``."""
    text = text.strip()
    if '..' in text:
        low, high = text.split('..', 1)
        return list(range(int(low), int(high) + 1))
    return [int(part) for part in text.split(',') if part.strip() != '']


def parse_float_list(text):
    return [float(part) for part in text.split(',') if part.strip() != '']


def _param_value(text):
    parts = [part.strip() for part in text.split(',')]
    try:
        values = [int(part) for part in parts]
    except ValueError:
        return text
    return values[0] if len(values) == 1 else tuple(values)


def parse_params(items):
    params = dict()
    for item in items or []:
        if '=' not in item:
            raise ValueError(f'Expected key=value, got {item!r}')
        key, value = item.split('=', 1)
        params[key.strip()] = _param_value(value.strip())
    return params


def _emit(text, out):
    if out is None:
        sys.stdout.write(text + '\n')
    else:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text + '\n')


def _dumps(data):
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False)


def _family(args, config):
    return parse_family(args.family, **config.family_caps)


def cmd_lambda(args, config):
    g = parse_graph(args.graph)
    spectrum = spectral_radius(g, alpha=args.alpha, residual_tol=config.residual_tol)
    result = {'graph': args.graph, 'graph6': graph6_encode(g), 'n': g.n,
              'edges': g.num_edges, **spectrum.to_dict()}
    _emit(_dumps(result), args.out)
    return EXIT_OK


def cmd_ex(args, config):
    spec = _family(args, config)
    kwargs = dict(workers=config.workers, verbosity=config.verbosity, pbar=args.pbar,
                  **config.enumeration_caps)
    if args.restricted_k is not None:
        report = ex_restricted(args.n, spec, args.restricted_k, **kwargs)
    else:
        report = ex(args.n, spec, connected=args.connected, **kwargs)
    _emit(report.to_json(timestamp=not args.no_timestamp), args.out)
    return EXIT_OK


def cmd_spex(args, config):
    spec = _family(args, config)
    report = spex(args.n, spec, alpha=args.alpha, connected=args.connected,
                  workers=config.workers, tie_tol=config.tie_tol,
                  tie_recheck_tol=config.tie_recheck_tol, verbosity=config.verbosity,
                  pbar=args.pbar, **config.enumeration_caps)
    _emit(report.to_json(timestamp=not args.no_timestamp), args.out)
    return EXIT_OK


def cmd_verify(args, config):
    result = run_case(args.case, parse_int_list(args.n), alphas=parse_float_list(args.alphas),
                      params=parse_params(args.param), enumeration_cap=config.enumeration_cap,
                      workers=config.workers, verbosity=config.verbosity)
    _emit(_dumps(result.to_dict()), args.out)
    if args.csv is not None:
        write_case_csv(result, args.csv)
    return EXIT_OK if result.all_predictions_free else EXIT_FAILED


def cmd_counterexample(args, config):
    ceiling = args.ceiling if args.ceiling is not None else config.crossover_ceiling
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', RuntimeWarning)
        report = counterexample_report(parse_int_list(args.n), ceiling=ceiling,
                                       verbosity=config.verbosity)
    data = report.to_dict()
    if report.crossover is None:
        data['summary'] = f'none below ceiling {ceiling}'
    else:
        data['summary'] = f'crossover at n={report.crossover}'
    _emit(_dumps(data), args.out)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_trees(args, config):
    pbar = args.pbar
    stats = [tree_stats(m, samples=args.samples, seed=config.seed, exhaustive=args.exhaustive,
                        check_consistency=args.consistency, pbar=pbar)
             for m in parse_int_list(args.m)]
    counts = [tree_edge_counts(n, pbar=pbar) for n in parse_int_list(args.edge_counts)]
    data = {'stats': [s.to_dict() for s in stats], 'edge_counts': [c.to_dict() for c in counts]}
    _emit(_dumps(data), args.out)
    failed = any(not c.matches for c in counts) or any(len(s.consistency_failures) > 0
                                                      for s in stats)
    return EXIT_FAILED if failed else EXIT_OK


def cmd_report(args, config):
    output_dir = args.out if args.out is not None else config.output_dir
    paths = run_report(output_dir, ceiling=config.crossover_ceiling, seed=config.seed,
                       workers=config.workers, enumeration_cap=config.enumeration_cap,
                       verbosity=config.verbosity)
    sys.stdout.write('\n'.join(paths) + '\n')
    return EXIT_OK


def _common_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', default=None,
                        help='key=value config file (default: $SPEXLAB_CONFIG)')
    common.add_argument('--workers', type=int, default=None)
    common.add_argument('--seed', type=int, default=None)
    common.add_argument('--verbosity', type=int, default=None)
    common.add_argument('--out', default=None,
                        help='output file (output directory for "report"); default: stdout')
    common.add_argument('--no-timestamp', action='store_true',
                        help='omit runtime and creation time from search reports')
    return common


def build_parser():
    common = _common_parser()
    parser = argparse.ArgumentParser(prog='spexlab',
                                     description='Spectral extremal graph computations.')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('lambda', parents=[common], help='spectral radius of a graph')
    p.add_argument('graph', help='graph expression (e.g. "K2+(P8 u 2*P4)") or graph6 string')
    p.add_argument('--alpha', type=float, default=0.0)
    p.set_defaults(func=cmd_lambda)

    for name, func, help_text in (('ex', cmd_ex, 'maximum number of edges'),
                                  ('spex', cmd_spex, 'maximum spectral radius')):
        p = commands.add_parser(name, parents=[common], help=help_text)
        p.add_argument('--n', type=int, required=True)
        p.add_argument('--family', required=True, help='family, e.g. "list:M4"')
        p.add_argument('--connected', action='store_true')
        p.add_argument('--pbar', choices=['tqdm'], default=None)
        if name == 'ex':
            p.add_argument('--restricted-k', type=int, default=None)
        else:
            p.add_argument('--alpha', type=float, default=0.0)
        p.set_defaults(func=func)

    p = commands.add_parser('verify', parents=[common], help='run a catalog case')
    p.add_argument('--case', required=True)
    p.add_argument('--n', required=True, help='orders, e.g. "5..9" or "5,7,9"')
    p.add_argument('--alphas', default='0')
    p.add_argument('--param', action='append', help='case parameter, e.g. "k=2"')
    p.add_argument('--csv', default=None, help='also write (n, lambda_pred, lambda_best, matched)')
    p.set_defaults(func=cmd_verify)

    p = commands.add_parser('counterexample', parents=[common],
                            help='reproduce the counterexample and find the crossover')
    p.add_argument('--n', default='10,14,18')
    p.add_argument('--ceiling', type=int, default=None)
    p.set_defaults(func=cmd_counterexample)

    p = commands.add_parser('trees', parents=[common], help='good tree statistics')
    p.add_argument('--m', default='8,16,32,64')
    p.add_argument('--samples', type=int, default=10000)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument('--exhaustive', dest='exhaustive', action='store_true', default=None)
    mode.add_argument('--sampled', dest='exhaustive', action='store_false')
    p.add_argument('--consistency', action='store_true',
                   help='check K_{k,m} free and saturated for good trees (m <= 7)')
    p.add_argument('--edge-counts', default='', help='orders for the edge count formulas')
    p.add_argument('--pbar', choices=['tqdm'], default=None)
    p.set_defaults(func=cmd_trees)

    p = commands.add_parser('report', parents=[common], help='write the reproduction report')
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config).override(workers=args.workers, seed=args.seed,
                                                   verbosity=args.verbosity)
        configure_logging(config.verbosity)
        return args.func(args, config)
    except CapExceededError as e:
        sys.stderr.write(f'spexlab: {e}\n')
        return EXIT_CAP
    except (ValueError, KeyError) as e:
        sys.stderr.write(f'spexlab: {e}\n')
        return EXIT_INVALID
    except SpexlabException as e:
        sys.stderr.write(f'spexlab: {e}\n')
        return EXIT_FAILED


if __name__ == '__main__':
    raise SystemExit(main())
