# -*- coding: utf-8 -*-
"""Command-line front end: ``pyharnack <command> [options]``.

Exit codes: 0 all checks pass, 1 usage or parse error, 2 a check failed,
3 the search found a candidate violation of the j-conjecture.
"""
import argparse
import logging
import sys

from . import __version__
from .cayley import cayley_corollary, cayley_difference_reports, cayley_reports, fan_hoffman_check
from .conjectures import SearchConfig, search
from .context import Context
from .errors import HarnackError, InvalidIndexSet, InvalidSpec, NotContractive, ParseError
from .harnack import (IDENTITY_TOL, LATTICE, bound_reports, determinant_consistency,
                      eigen_bound_J0, fan_operator_check, identity_residuals,
                      naive_lower_bound_check, tung_check)
from .indexset import IndexSet, index_sets
from .matrix import ComplexMatrix
from .paper_examples import repro_paper
from .report import Check, RunReport, dumps
from .sampling import Mode, RandomSpec, random_matrix, random_unitary, rng_for

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_VIOLATION = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; 2 means "check failed" here
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _float_list(text):
    try:
        return tuple(float(tok) for tok in text.split(',') if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated list of "
                                         "numbers (got %r)" % text)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--tol', type=float, default=1e-9,
                        help="Relative inequality tolerance (default 1e-9).")
    common.add_argument('--margin', type=float, default=1e-6,
                        help="Strict-contraction margin 1 - sigma_1 >= margin "
                             "(default 1e-6).")
    common.add_argument('--seed', type=int, default=0,
                        help="Seed for every random choice (default 0).")
    common.add_argument('--out', metavar='PATH',
                        help="Also write the JSON result to PATH.")
    common.add_argument('--json', action='store_true',
                        help="Print JSON instead of a table.")
    common.add_argument('--backend', choices=('native', 'numpy'), default='native',
                        help="Eigensolver backend (default native).")
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help="-v for INFO, -vv for DEBUG logging on stderr.")

    parser = _Parser(prog='pyharnack',
                     description="Numerical checks of Harnack-type matrix "
                                 "inequalities.")
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('verify', parents=[common],
                       help="Run every identity and bound check on one matrix.")
    p.add_argument('matrix', help="Matrix JSON file.")
    p.add_argument('--k', type=int, help="Only index sets of this size.")
    p.add_argument('--per-k', type=int, default=50,
                   help="Sampled index sets per k when n > 5 (default 50).")

    p = sub.add_parser('bounds', parents=[common],
                       help="Upper and lower bound families for index sets.")
    p.add_argument('matrix', help="Matrix JSON file.")
    p.add_argument('--indices', help="One index set, e.g. 1,3 (1-based).")
    p.add_argument('--k', type=int, help="Every index set of this size.")

    p = sub.add_parser('cayley', parents=[common],
                       help="Cayley transform bounds for one or two matrices.")
    p.add_argument('matrix', nargs='+', help="One or two matrix JSON files.")
    p.add_argument('--indices', help="One index set, e.g. 1,3 (1-based).")
    p.add_argument('--k', type=int, help="Every index set of this size.")

    p = sub.add_parser('search', parents=[common],
                       help="Random search for j-conjecture counterexamples.")
    p.add_argument('--n', type=int, required=True, help="Dimension.")
    p.add_argument('--trials', type=int, default=1000)
    p.add_argument('--modes', default=','.join(m.value for m in Mode),
                   help="Comma-separated generation modes.")
    p.add_argument('--descent-steps', type=int, default=0)
    p.add_argument('--descent-scale', type=float, default=0.05)
    p.add_argument('--prescribed', type=_float_list,
                   help="Fixed singular values for the prescribed modes.")
    p.add_argument('--workers', type=int, default=1)
    p.add_argument('--csv', metavar='PATH',
                   help="Write (trial, mode, min_slack) rows to PATH.")

    p = sub.add_parser('random', parents=[common],
                       help="Emit a seeded random matrix as JSON.")
    p.add_argument('--n', type=int, required=True, help="Dimension.")
    p.add_argument('--mode', default=Mode.GAUSSIAN.value)
    p.add_argument('--max-norm', type=float, default=0.9)
    p.add_argument('--prescribed', type=_float_list,
                   help="Singular values, descending, each in [0, 1).")

    sub.add_parser('repro-paper', parents=[common],
                   help="Reproduce the published numerical examples.")
    return parser


def _echo(args):
    return {k: v for k, v in sorted(vars(args).items()) if k != 'verbose'}


def _index_sets(args, n):
    if getattr(args, 'indices', None):
        return [IndexSet.parse(args.indices, n=n)]
    per_k = getattr(args, 'per_k', 50)
    return index_sets(n, rng=rng_for(args.seed, 1), k=args.k, per_k=per_k)


def _min_normalized(pairs):
    # leq(x, y) <=> (y - x) / (1 + |y|) >= -tol
    return min((y - x) / (1 + abs(y)) for x, y in pairs)


def _bound_checks(reports, tol):
    checks = []
    sets = len(reports)
    for name in reports[0].upper_bounds:
        value = _min_normalized((r.lhs, r.upper_bounds[name]) for r in reports)
        checks.append(Check.compare('upper %s (%d sets)' % (name, sets), value,
                                    0.0, tol, '>=', 'min (bound - lhs)/(1 + bound)'))
    for name in reports[0].lower_bounds:
        value = _min_normalized((-r.lhs_lower, -r.lower_bounds[name]) for r in reports)
        checks.append(Check.compare('lower %s (%d sets)' % (name, sets), value,
                                    0.0, tol, '>=', 'min (lhs - bound)/(1 + bound)'))
    for a, b in LATTICE:
        values = []
        for r in reports:
            both = dict(r.upper_bounds)
            both.update(r.lower_bounds)
            values.append((both[a], both[b]))
        checks.append(Check.compare('lattice %s <= %s' % (a, b),
                                    _min_normalized(values), 0.0, tol, '>='))
    return checks


def _gated(report, name, func):
    # contraction-gated checks become failures instead of aborting the run
    try:
        report.extend(func())
    except NotContractive as exc:
        report.add(Check.failure(name, 'NotContractive: %s' % exc))


def cmd_verify(args):
    a = ComplexMatrix.load(args.matrix)
    tol = args.tol
    report = RunReport(command=_echo(args))

    res = identity_residuals(a)
    for key, value in res.as_dict().items():
        if value is None:
            report.add(Check.failure('identity %s' % key, res.note))
        else:
            report.add(Check.compare('identity %s' % key, value,
                                     IDENTITY_TOL * res.scale, 0.0, '<='))

    def eigen_bounds():
        return [Check.compare('lambda_%d(H) <= (1+r_j)/(1-r_j)' % row.j,
                              row.eigenvalue, row.bound, tol * (1 + row.bound), '<=')
                for row in eigen_bound_J0(a)]

    def families():
        return _bound_checks(bound_reports(a, _index_sets(args, a.n)), tol)

    def naive():
        rows = naive_lower_bound_check(a)
        return [Check.compare('valid lower bounds per j', all(r.valid_holds for r in rows),
                              True, 0.0, 'is'),
                Check.compare('naive lower bound violations',
                              sum(r.violated for r in rows), 0, 0.0, '>=',
                              'informational; violations are allowed')]

    def fan():
        rep = fan_operator_check(a)
        return [Check.compare('operator sandwich', rep.holds, True, 0.0, 'is')]

    def tung():
        u = random_unitary(a.n, rng_for(args.seed, 0))
        rep = tung_check(a, u)
        return [Check.compare('tung lower <= middle', rep.lower, rep.middle,
                              tol * (1 + abs(rep.middle)), '<='),
                Check.compare('tung middle <= upper', rep.middle, rep.upper,
                              tol * (1 + abs(rep.upper)), '<=',
                              'equality side: %s' % rep.equality_side)]

    def determinant():
        rep = determinant_consistency(a)
        return [Check.compare('prod lambda(H) vs det ratio (relative)',
                              rep.relative_error, 1e-9, 0.0, '<=')]

    _gated(report, 'eigenvalue bounds', eigen_bounds)
    _gated(report, 'bound families', families)
    _gated(report, 'naive lower bound', naive)
    _gated(report, 'operator sandwich', fan)
    _gated(report, 'tung', tung)
    _gated(report, 'determinant consistency', determinant)
    return report


def cmd_bounds(args):
    a = ComplexMatrix.load(args.matrix)
    reports = bound_reports(a, _index_sets(args, a.n), matrix_id=args.matrix)
    report = RunReport(command=_echo(args))
    for rep in reports:
        for name, bound in rep.upper_bounds.items():
            report.add(Check.compare('%s lhs <= %s' % (rep.index_set, name), rep.lhs,
                                     bound, args.tol * (1 + abs(bound)), '<='))
        for name, bound in rep.lower_bounds.items():
            report.add(Check.compare('%s lhs >= %s' % (rep.index_set, name),
                                     rep.lhs_lower, bound,
                                     args.tol * (1 + abs(bound)), '>='))
    report.extra['reports'] = reports
    return report


def _chain_checks(reports, tol):
    checks = []
    for rep in reports:
        checks.append(Check.compare('%s lower <= lhs' % rep.index_set, rep.lower,
                                    rep.lhs, tol * (1 + abs(rep.lhs)), '<=',
                                    rep.lower_form))
        checks.append(Check.compare('%s lhs <= upper' % rep.index_set, rep.lhs,
                                    rep.upper, tol * (1 + abs(rep.upper)), '<='))
    return checks


def cmd_cayley(args):
    if len(args.matrix) > 2:
        raise UsageError("cayley takes one or two matrix files.")
    mats = [ComplexMatrix.load(p) for p in args.matrix]
    a = mats[0]
    sets = _index_sets(args, a.n)
    report = RunReport(command=_echo(args))
    if len(mats) == 1:
        reports = cayley_reports(a, sets)
        report.extend(_chain_checks(reports, args.tol))
        for row in cayley_corollary(a):
            report.add(Check.compare('sigma_%d(C(A)) corollary' % row.j, row.holds,
                                     True, 0.0, 'is'))
    else:
        b = mats[1]
        reports = cayley_difference_reports(a, b, sets)
        report.extend(_chain_checks(reports, args.tol))
        report.add(Check.compare('factorization residual', reports[0].residual,
                                 IDENTITY_TOL, 0.0, '<='))
        if a.is_hermitian() and b.is_hermitian():
            fh = fan_hoffman_check(a, b)
            report.add(Check.compare('Hermitian pair: s_j(C(A)-C(B)) <= 2 s_j(A-B)',
                                     fh.holds, True, 0.0, 'is'))
            report.extra['fan_hoffman'] = fh
    report.extra['reports'] = reports
    return report


def cmd_search(args):
    config = SearchConfig(n=args.n, trials=args.trials, seed=args.seed,
                          modes=tuple(m for m in args.modes.split(',') if m.strip()),
                          descent_steps=args.descent_steps,
                          descent_scale=args.descent_scale, margin=args.margin,
                          prescribed=args.prescribed, workers=args.workers)
    result = search(config)
    if args.csv:
        result.write_csv(args.csv)
    return result


def cmd_random(args):
    spec = RandomSpec(n=args.n, mode=args.mode, max_norm=args.max_norm,
                      prescribed=args.prescribed, seed=args.seed)
    return random_matrix(spec)


def cmd_repro_paper(args):
    return repro_paper(command=_echo(args))


COMMANDS = {
    'verify': cmd_verify,
    'bounds': cmd_bounds,
    'cayley': cmd_cayley,
    'search': cmd_search,
    'random': cmd_random,
    'repro-paper': cmd_repro_paper,
}


def _emit(text):
    sys.stdout.write(text + '\n')


def _write_out(args, text):
    if args.out:
        with open(args.out, 'w') as fh:
            fh.write(text + '\n')


def _render(result, args):
    """Print *result*; return the exit code it implies.
    """
    if isinstance(result, ComplexMatrix):
        text = result.to_json(indent=2)
        _write_out(args, text)
        _emit(text)
        return EXIT_OK
    if isinstance(result, RunReport):
        result.finish()
        text = result.to_json()
        _write_out(args, text)
        _emit(text if args.json else result.render_table())
        return EXIT_OK if result.passed else EXIT_FAILED
    # search result
    text = dumps(result)
    _write_out(args, text)
    if args.json:
        _emit(text)
    else:
        best = result.best
        _emit('trials: %d  best min_slack: %.6g at j=%d (trial %s, mode %s)'
              % (result.trials_completed, best.min_slack, best.min_j,
                 best.trial, best.mode))
        _emit('descent: %d steps, %d accepted, final min_slack %.6g'
              % (result.descent.steps, result.descent.accepted,
                 result.descent.final_slack))
        _emit('violation candidate' if result.violation else 'no violation found')
    return EXIT_VIOLATION if result.violation else EXIT_OK


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write('pyharnack: error: %s\n' % exc)
        return EXIT_USAGE
    configure_logging(args.verbose)
    try:
        ctx = Context(tol=args.tol, margin=args.margin, backend=args.backend)
    except (TypeError, ValueError) as exc:
        sys.stderr.write('pyharnack: error: %s\n' % exc)
        return EXIT_USAGE

    try:
        with ctx:
            result = COMMANDS[args.command](args)
            return _render(result, args)
    except (UsageError, ParseError, InvalidSpec, InvalidIndexSet) as exc:
        sys.stderr.write('pyharnack: error: %s\n' % exc)
        return EXIT_USAGE
    except HarnackError as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write('pyharnack: %s: %s\n' % (type(exc).__name__, exc))
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
