'''
Command-line surface: generate, analyze, verify, compare, export-dot.

Exit codes: 0 success, 1 a verification check failed, 2 usage error,
3 parse error (edge list or campaign spec), 4 validation error
(invalid parameters, budgets, sizes, disconnected input where fatal),
5 file input/output failure.
'''
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional, Tuple
from analysis.degrees import cumulative_distribution, extremal_fit_window
from analysis.diameter import EXACT_BUDGET
from analysis.experiments import DEFAULT_SCALING_SPEC, RECURSIVE_BUDGET, \
                                 constructor_equivalence, degree_table_conformance, \
                                 diameter_campaign, diameter_scaling, parse_scaling_spec, \
                                 scaling_frame, verify_formulas
from analysis.verdicts import MIN_DISTINCT, MIN_R2, is_complete, scale_free_verdict, \
                              theorem_check, try_fit
from construction.baselines import BaConfig, generate_ba
from construction.errors import BudgetExceeded, Disconnected, EmptyGraph, ExtremalError, \
                                FormatError, InvalidParams, ModelError, ParseError, SpecError
from construction.extremal import build_direct, build_recursive
from construction.graph import Graph, degree_histogram
from .formats import REPORT_SCHEMA_VERSION, dump_report, load_scaling_spec, read_edge_list, \
                     to_dot, write_edge_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 3
EXIT_VALIDATION = 4
EXIT_IO = 5

MODELS = ('extremal-direct', 'extremal-recursive', 'ba')
VERIFY_MODES = ('formulas', 'equivalence', 'degree-table', 'diameter')

def cmd_generate(model: str, out: str, t: Optional[int] = None, n: Optional[int] = None,
                 m: Optional[int] = None, seed: Optional[int] = None) -> Graph:
    '''
    Generate a graph and write it as an edge list.

    :param model: One of extremal-direct, extremal-recursive, ba.

    :param out: Output path.

    :param t: Construction step for the extremal models.

    :param n: Order of the BA graph.

    :param m: Edges per new vertex of the BA graph.

    :param seed: Seed of the BA graph.

    '''
    if model in ('extremal-direct', 'extremal-recursive'):
        if t is None:
            raise InvalidParams(f'{model} needs --t')
        if model == 'extremal-recursive':
            if t > RECURSIVE_BUDGET:
                raise BudgetExceeded(f'recursive construction is limited to t <= {RECURSIVE_BUDGET}')
            graph = build_recursive(t).graph
        else:
            graph = build_direct(t).graph
        metadata = {'generator': 'extremal', 't': t}
    elif model == 'ba':
        if None in (n, m, seed):
            raise InvalidParams('ba needs --n, --m and --seed')
        graph = generate_ba(BaConfig(n, m, seed))
        metadata = {'generator': model, 'ba_m': m, 'seed': seed}
    else:
        raise InvalidParams(f'unknown model {model!r}')
    write_edge_list(out, graph, metadata)
    logger.info('wrote %s: %d vertices, %d edges', out, graph.n, graph.m)
    return graph

def _default_window(metadata: Dict[str, str]) -> Tuple[Optional[int], Optional[int]]:
    if metadata.get('generator') == 'extremal' and metadata.get('t', '').isdigit():
        t = int(metadata['t'])
        if t >= 1:
            return extremal_fit_window(t)
    return None, None

def _fit_section(fit) -> Optional[Dict[str, Any]]:
    if fit is None:
        return None
    return {'gamma_alpha': fit.gamma_alpha, 'gamma': fit.gamma, 'r_squared': fit.r_squared,
            'k_range': list(fit.k_range)}

def cmd_analyze(path: str, fit_klo: Optional[int] = None, fit_khi: Optional[int] = None,
                exact_budget: int = EXACT_BUDGET, min_distinct: int = MIN_DISTINCT,
                min_r2: float = MIN_R2, csv_out: Optional[str] = None,
                progress: bool = False) -> Dict[str, Any]:
    '''
    Analyze an edge list: degree table, cumulative distribution, gamma fit,
    diameter and verdicts.

    :param path: Edge list file.

    :param fit_klo: Smallest fitted degree; default from the file's generator metadata.

    :param fit_khi: Largest fitted degree; default from the file's generator metadata.

    :param exact_budget: Largest order swept exactly.

    :param min_distinct: Scale-free heuristic threshold.

    :param min_r2: Scale-free heuristic threshold.

    :param csv_out: Optional CSV path for the cumulative distribution.

    :param progress: Show a progress bar during the exact diameter sweep.

    '''
    graph, metadata = read_edge_list(path)
    if graph.n == 0:
        raise EmptyGraph(f'{path} has no vertices')
    default_lo, default_hi = _default_window(metadata)
    window = (default_lo if fit_klo is None else fit_klo,
              default_hi if fit_khi is None else fit_khi)
    distribution = cumulative_distribution(graph)
    if csv_out:
        distribution.to_frame().to_csv(csv_out, index=False)

    report: Dict[str, Any] = {
        'schema_version': REPORT_SCHEMA_VERSION,
        'order': graph.n,
        'size': graph.m,
        'degree_table': [list(row) for row in degree_histogram(graph).rows],
        'cumulative_distribution': [[k, float(p)] for k, p in distribution.points],
    }
    try:
        verdict = theorem_check(graph, window, min_distinct, min_r2, exact_budget, progress)
    except Disconnected:
        logger.warning('%s is disconnected; diameter omitted', path)
        fit = try_fit(graph, window)
        report.update({
            'gamma_fit': _fit_section(fit),
            'diameter': None,
            'disconnected': True,
            'verdicts': {'is_complete': is_complete(graph),
                         'scale_free_plausible': scale_free_verdict(graph, fit, min_distinct,
                                                                    min_r2),
                         'extremal_bound_met': False},
        })
        return report

    result = verdict.diameter_result
    report.update({
        'gamma_fit': _fit_section(verdict.fit),
        'diameter': {'value': result.diameter, 'witness': list(result.witness),
                     'method': result.method},
        'disconnected': False,
        'verdicts': {'is_complete': verdict.is_complete,
                     'scale_free_plausible': verdict.scale_free_plausible,
                     'extremal_bound_met': verdict.extremal_bound_met},
    })
    return report

def _records(frame) -> List[Dict[str, Any]]:
    return json.loads(frame.to_json(orient='records'))

def _first_failure(frame) -> Optional[int]:
    failed = frame[~frame['pass'].astype(bool)]
    return None if failed.empty else int(failed['t'].iloc[0])

def cmd_verify(t_max: int, mode: str, exact_budget: int = EXACT_BUDGET) -> Tuple[int, Dict[str, Any]]:
    '''
    Run one verification battery and return (exit status, report).

    :param t_max: Largest t checked.

    :param mode: formulas, equivalence, degree-table or diameter.

    :param exact_budget: Exact-diameter vertex budget for the diameter mode.

    '''
    report: Dict[str, Any] = {'schema_version': REPORT_SCHEMA_VERSION, 'mode': mode, 't_max': t_max}
    if mode == 'formulas':
        direct = verify_formulas(t_max, 'direct')
        recursive = verify_formulas(min(t_max, RECURSIVE_BUDGET), 'recursive')
        failures = [f for f in (_first_failure(direct.rows), _first_failure(recursive.rows))
                    if f is not None]
        report['rows'] = {'direct': _records(direct.rows), 'recursive': _records(recursive.rows)}
        first = min(failures) if failures else None
    elif mode == 'equivalence':
        same = constructor_equivalence(t_max)
        report['rows'] = [{'t': t, 'pass': ok} for t, ok in enumerate(same)]
        first = next((t for t, ok in enumerate(same) if not ok), None)
    elif mode == 'degree-table':
        frame = degree_table_conformance(t_max)
        report['rows'] = _records(frame)
        first = _first_failure(frame)
    elif mode == 'diameter':
        frame = diameter_campaign(t_max, exact_budget)
        report['rows'] = _records(frame)
        first = _first_failure(frame)
    else:
        raise InvalidParams(f'unknown verify mode {mode!r}')
    report['pass'] = first is None
    report['first_failure'] = first
    return (EXIT_OK if first is None else EXIT_CHECK_FAILED), report

def cmd_export_dot(t: int, out: str) -> str:
    '''
    Write a DOT drawing of G*_t (t <= 3).

    :param t: Construction step.

    :param out: Output path.

    '''
    text = to_dot(build_direct(t))
    with open(out, 'w', encoding='utf-8') as f:
        f.write(text)
    return text

def cmd_compare(spec: Optional[str], out: str, exact_budget: int = EXACT_BUDGET):
    '''
    Run a diameter-scaling campaign and write the CSV table.

    :param spec: JSON campaign spec; None runs the default campaign.

    :param out: Output CSV path.

    :param exact_budget: Exact-diameter vertex budget.

    '''
    entries = DEFAULT_SCALING_SPEC if spec is None else load_scaling_spec(spec)
    frame = scaling_frame(diameter_scaling(parse_scaling_spec(entries), exact_budget))
    frame.to_csv(out, index=False)
    return frame

def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)

def build_parser() -> argparse.ArgumentParser:
    ''' Argument parser with one subcommand per operation. '''
    parser = argparse.ArgumentParser(prog='extremal',
                                     description='Build and verify the extremal scale-free family G*_t.')
    parser.add_argument('--verbose', '-v', action='store_true', help='debug logging')
    sub = parser.add_subparsers(dest='command', required=True)

    generate = sub.add_parser('generate', help='write a graph as an edge list')
    generate.add_argument('--model', choices=MODELS, required=True)
    generate.add_argument('--t', type=int)
    generate.add_argument('--n', type=int)
    generate.add_argument('--m', type=int)
    generate.add_argument('--seed', type=int)
    generate.add_argument('--out', required=True)

    analyze = sub.add_parser('analyze', help='write a JSON analysis report')
    analyze.add_argument('input')
    analyze.add_argument('--fit-klo', type=int)
    analyze.add_argument('--fit-khi', type=int)
    analyze.add_argument('--exact-budget', type=int, default=EXACT_BUDGET)
    analyze.add_argument('--min-distinct', type=int, default=MIN_DISTINCT)
    analyze.add_argument('--min-r2', type=float, default=MIN_R2)
    analyze.add_argument('--csv', help='also write the cumulative distribution as CSV')
    analyze.add_argument('--out')

    verify = sub.add_parser('verify', help='check the closed-form claims up to t')
    verify.add_argument('--mode', choices=VERIFY_MODES, required=True)
    verify.add_argument('--t', type=int, required=True)
    verify.add_argument('--exact-budget', type=int, default=EXACT_BUDGET)
    verify.add_argument('--out')

    compare = sub.add_parser('compare', help='diameter scaling table as CSV')
    compare.add_argument('--spec')
    compare.add_argument('--exact-budget', type=int, default=EXACT_BUDGET)
    compare.add_argument('--out', required=True)

    dot = sub.add_parser('export-dot', help='DOT drawing of G*_t, t <= 3')
    dot.add_argument('--t', type=int, required=True)
    dot.add_argument('--out', required=True)
    return parser

def run(args: argparse.Namespace) -> int:
    '''
    Execute a parsed command.

    :param args: Parsed arguments.

    '''
    if args.command == 'generate':
        cmd_generate(args.model, args.out, args.t, args.n, args.m, args.seed)
    elif args.command == 'analyze':
        report = cmd_analyze(args.input, args.fit_klo, args.fit_khi, args.exact_budget,
                             args.min_distinct, args.min_r2, args.csv, args.verbose)
        _emit(dump_report(report), args.out)
    elif args.command == 'verify':
        status, report = cmd_verify(args.t, args.mode, args.exact_budget)
        _emit(dump_report(report), args.out)
        if status != EXIT_OK:
            logger.error('verify %s failed at t=%s', args.mode, report['first_failure'])
        return status
    elif args.command == 'compare':
        cmd_compare(args.spec, args.out, args.exact_budget)
    elif args.command == 'export-dot':
        cmd_export_dot(args.t, args.out)
    return EXIT_OK

def main(argv: Optional[List[str]] = None) -> int:
    '''
    Console entry point.

    :param argv: Arguments without the program name; sys.argv by default.

    '''
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    try:
        return run(args)
    except (ParseError, SpecError) as e:
        logger.error('%s', e)
        return EXIT_PARSE
    except (FormatError, ModelError, Disconnected) as e:
        logger.error('%s', e)
        return EXIT_VALIDATION
    except OSError as e:
        logger.error('%s', e)
        return EXIT_IO
    except ExtremalError as e:
        logger.error('%s', e)
        return EXIT_VALIDATION

if __name__ == '__main__':
    sys.exit(main())
