import json
import logging
import os
import sys
from argparse import ArgumentParser
from pathlib import Path

from tabulate import tabulate

from fxpoly.codegen import parse_nfd, parse_ppd, pipeline, write_report
from fxpoly.expr import compile_function
from fxpoly.fitters import FitConfig, fit_candidates_with_report, verify_plan
from fxpoly.fxp import flp_sim_fxp
from fxpoly.oppe import OpKind, SharingBackend, expected_counts, finalize_plan, load_plan, oppe_eval_batch, \
    render_trace_graph
from fxpoly.perfmodel import PerfProfile, fit_cost_model, generate_profiling_suite, select_plan, simulate_profile
from fxpoly.util import FxpolyError, Logger, NoFeasiblePlanError

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_PLAN = 2
EXIT_VERIFY_FAILED = 3


def _seed(ns) -> int:
    if ns.seed is not None:
        return ns.seed
    return int(os.environ.get('FXPOLY_SEED', 0))


def _outcome_rows(outcomes):
    rows = [['k', 'm', 'max SRD', 'seconds', 'reason']]
    for o in outcomes:
        rows.append([o.k, o.m if o.m is not None else '-',
                     f'{o.max_srd:.3e}' if o.max_srd is not None else '-',
                     f'{o.seconds:.2f}', o.reason or ''])
    return rows


def cmd_fit(ns) -> int:
    nfd = parse_nfd(ns.nfd)
    cfg = FitConfig.from_nfd(nfd)
    F = compile_function(nfd.function, quad_tol=nfd.tol / 100)
    plans, outcomes = fit_candidates_with_report(F, cfg, ns.jobs)

    print(tabulate(_outcome_rows(outcomes), headers="firstrow", tablefmt="fancy_grid"))

    if ns.out is not None:
        doc = {
            'function': nfd.function,
            'candidates': [plan.to_json() for plan in plans],
            'outcomes': [{'k': o.k, 'm': o.m, 'max_srd': o.max_srd, 'seconds': o.seconds, 'reason': o.reason}
                         for o in outcomes],
        }
        with open(ns.out, 'w') as file:
            json.dump(doc, file, indent=2)

    if not plans:
        print('no candidate plans', file=sys.stderr)
        return EXIT_NO_PLAN
    return EXIT_OK


def cmd_select(ns) -> int:
    nfd = parse_nfd(ns.nfd)
    ppd = parse_ppd(ns.ppd, _seed(ns))
    cfg = FitConfig.from_nfd(nfd)
    F = compile_function(nfd.function, quad_tol=nfd.tol / 100)
    plans, outcomes = fit_candidates_with_report(F, cfg, ns.jobs)

    reasons = {o.k: o.reason for o in outcomes if not o.succeeded}
    decision = select_plan(plans, fit_cost_model(ppd), ppd.time_dict, nfd.expression, reasons, nfd.ops)
    rows = [[key, value] for key, value in decision.as_dict().items()]
    print(tabulate(rows, tablefmt="fancy_grid"))
    return EXIT_OK


def cmd_gen(ns) -> int:
    nfd = parse_nfd(ns.nfd)
    ppd = parse_ppd(ns.ppd, _seed(ns))
    result = pipeline(nfd, ppd, ns.jobs)
    report = result.report()

    output = nfd.output_path()
    if result.source is not None:
        if output is None:
            print(result.source)
        else:
            output.write_text(result.source)
            log.info('Wrote %s', output)

    report_path = ns.report
    if report_path is None and output is not None:
        report_path = output.with_name(output.name + '.report.json')
    if report_path is not None:
        write_report(report, report_path)

    print(tabulate([[key, report[key]] for key in ('name', 'decision', 'k', 'm', 'predicted_cost', 'direct_cost')
                    if key in report], tablefmt="fancy_grid"), file=sys.stderr)

    if result.verification is not None and not result.verification.passed:
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_verify(ns) -> int:
    plan = load_plan(ns.plan, ns.k)
    nfd = parse_nfd(ns.nfd)
    cfg = FitConfig.from_nfd(nfd)
    F = compile_function(nfd.function, quad_tol=nfd.tol / 100)
    report = verify_plan(plan, F, cfg, ns.samples)

    rows = [['max SRD', f'{report.max_srd:.3e}'],
            ['mean SRD', f'{report.mean_srd:.3e}'],
            ['worst x', report.worst_x],
            ['worst piece', report.worst_piece],
            ['samples', report.samples],
            ['passed', report.passed]]
    print(tabulate(rows, tablefmt="fancy_grid"))
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_profile_suite(ns) -> int:
    with open(ns.ppd, 'r') as file:
        profile = PerfProfile.from_json(json.load(file))

    suite = generate_profiling_suite(tuple(ns.k_range), tuple(ns.m_range), ns.repeats, _seed(ns))
    profile = simulate_profile(profile, suite, ns.noise, _seed(ns))
    model = fit_cost_model(profile)
    profile = profile.with_samples(profile.samples, model=model.describe())

    with open(ns.out, 'w') as file:
        json.dump(profile.to_json(), file, indent=2)
    print(f'{len(profile.samples)} samples, rms residual {model.rms_residual:.4g}')
    return EXIT_OK


def cmd_trace(ns) -> int:
    plan = load_plan(ns.plan, ns.k)
    if not plan.finalized:
        log.info('Finalizing plan before tracing')
        plan = finalize_plan(plan)

    xs = [flp_sim_fxp(x, plan.format) for x in ns.inputs]
    backend = SharingBackend(_seed(ns)) if ns.sharing else None
    values, traces = oppe_eval_batch(plan, xs, ns.jobs, backend)

    for x, value, trace in zip(xs, values, traces):
        print(f'# x = {x.to_decimal_str()} -> {value.to_decimal_str()}')
        print(trace.dump())

    if len(traces) > 1:
        identical = all(trace == traces[0] for trace in traces[1:])
        print(f'verdict: {"identical" if identical else "different"}')

    trace = traces[0]
    expected = expected_counts(plan.k, len(plan.pieces))
    rows = [['op', 'traced', 'expected'],
            ['GT', trace.count(OpKind.GT), expected['GT']],
            ['MUL_pc', trace.count(OpKind.MUL_pc), expected['MUL_pc']],
            ['MUL_cc kx', trace.count(OpKind.MUL_cc, 'kx'), expected['MUL_cc kx']],
            ['MUL_cc term', trace.count(OpKind.MUL_cc, 'term'), expected['MUL_cc term']]]
    print(tabulate(rows, headers="firstrow", tablefmt="fancy_grid"))

    if ns.graph is not None:
        render_trace_graph(trace, ns.graph)
    return EXIT_OK


def _parser() -> ArgumentParser:
    p = ArgumentParser('fxpoly', description='Fixed point piecewise polynomial generation for secure computation')
    p.add_argument('-v', '--verbose', action='count', default=0, help='repeat for more detail')
    p.add_argument('--jobs', type=int, default=1, help='worker processes/threads')
    p.add_argument('--seed', type=int, default=None, help='seed, overrides FXPOLY_SEED')
    sub = p.add_subparsers(dest='command', required=True)

    fit = sub.add_parser('fit', help='fit candidate plans for every order')
    fit.add_argument('nfd', help='path to the NFD file')
    fit.add_argument('-o', '--out', default=None, help='write candidates JSON here')
    fit.set_defaults(handler=cmd_fit)

    select = sub.add_parser('select', help='print the selection decision')
    select.add_argument('nfd')
    select.add_argument('ppd')
    select.set_defaults(handler=cmd_select)

    gen = sub.add_parser('gen', help='run the full pipeline and emit source')
    gen.add_argument('nfd')
    gen.add_argument('ppd')
    gen.add_argument('--report', default=None, help='report JSON path')
    gen.set_defaults(handler=cmd_gen)

    verify = sub.add_parser('verify', help='measure a plan against its NFD')
    verify.add_argument('plan')
    verify.add_argument('nfd')
    verify.add_argument('--samples', type=int, default=None)
    verify.add_argument('--k', type=int, default=None, help='order to pick from a candidates file')
    verify.set_defaults(handler=cmd_verify)

    profile = sub.add_parser('profile-suite', help='simulate profiling samples for a PPD')
    profile.add_argument('ppd')
    profile.add_argument('-o', '--out', required=True)
    profile.add_argument('--k-range', type=int, nargs=2, default=[3, 10])
    profile.add_argument('--m-range', type=int, nargs=2, default=[2, 50])
    profile.add_argument('--repeats', type=int, default=None)
    profile.add_argument('--noise', type=float, default=0.0)
    profile.set_defaults(handler=cmd_profile_suite)

    trace = sub.add_parser('trace', help='dump secure operation traces of a plan')
    trace.add_argument('plan')
    trace.add_argument('--inputs', type=float, nargs='+', required=True)
    trace.add_argument('--graph', default=None, help='save a dot rendering of the first trace')
    trace.add_argument('--sharing', action='store_true', help='run on the mock sharing backend')
    trace.add_argument('--k', type=int, default=None, help='order to pick from a candidates file')
    trace.set_defaults(handler=cmd_trace)
    return p


def main(argv=None) -> int:
    ns = _parser().parse_args(argv)
    logging.basicConfig(level=max(logging.WARNING - 10 * ns.verbose, logging.DEBUG))

    Logger().reset()
    try:
        return ns.handler(ns)
    except NoFeasiblePlanError as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_NO_PLAN
    except (FxpolyError, OSError, ValueError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_ERROR
    finally:
        log.info('run statistics: %s', Logger().snapshot())
