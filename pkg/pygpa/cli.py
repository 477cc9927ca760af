"""
The gpa command line: load structures from JSON, run the verdicts and cross-checks, and print JSON reports

GNU GPL v3.0
V0.1 - October 2026
"""
import argparse
import sys
from time import perf_counter

from pygpa.version import __version__
from pygpa.common import CapExceeded, InternalDisagreement, ValidationError, canonical_json, digest
from pygpa.serialize import read_json, load_structure, dump_structure, dump_canonical
from pygpa.core import GroupoidAnalysis, GraphAnalysis, SemigroupAnalysis, CorpusAnalysis


__all__ = ['EXIT_OK', 'EXIT_EXPECTATION', 'EXIT_INVALID', 'EXIT_DISAGREEMENT', 'build_parser', 'parse_expectation',
           'cmd_check_groupoid', 'cmd_check_graph', 'cmd_check_semigroup', 'cmd_corpus', 'main']


EXIT_OK = 0
EXIT_EXPECTATION = 1
EXIT_INVALID = 2
EXIT_DISAGREEMENT = 3

_PROPERTIES = ('prime', 'semiprime', 'primitive')


def _err(msg):
    print(msg, file=sys.stderr)


def parse_expectation(text):
    """
    Parse 'prop' or 'prop=true|false' into (prop, bool).
    """
    prop, _, value = text.partition('=')
    prop = prop.strip()
    if prop not in _PROPERTIES:
        raise argparse.ArgumentTypeError(f'unknown property "{prop}", expected one of {", ".join(_PROPERTIES)}')
    value = value.strip().lower() or 'true'
    if value not in ('true', 'false'):
        raise argparse.ArgumentTypeError(f'expected true or false, got "{value}"')
    return prop, value == 'true'


def _common_parser():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('path', help='JSON file with the input structure.')
    parent.add_argument('--ring', default='Q', help='Coefficient ring: Z, Q, Z/<n> or Laurent(<ring>). Default Q.')
    parent.add_argument('--oracle', action='store_true', help='Also run the brute-force oracles (finite rings).')
    parent.add_argument('--expect', action='append', type=parse_expectation, default=[], metavar='PROP[=BOOL]',
                        help='Exit 1 when the verdict on PROP differs. Repeatable.')
    parent.add_argument('--dump-canonical', action='store_true',
                        help='Print the canonical JSON of the validated input and exit.')
    parent.add_argument('-q', '--quiet', action='store_true', help='No progress messages on stderr.')
    return parent


def build_parser():
    parser = argparse.ArgumentParser(prog='gpa', description='Prime and semiprime verdicts for groupoid, inverse '
                                                             'semigroup and Leavitt path algebras.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    sub = parser.add_subparsers(dest='command', required=True)
    common = _common_parser()

    p = sub.add_parser('check-groupoid', parents=[common], help='Analyze a finite groupoid algebra.')
    p.set_defaults(func=cmd_check_groupoid)

    p = sub.add_parser('check-graph', parents=[common], help='Analyze a Leavitt path algebra.')
    p.add_argument('--depth', type=int, default=None, help='Boundary path sampling and cylinder cross-check depth.')
    p.set_defaults(func=cmd_check_graph)

    p = sub.add_parser('check-semigroup', parents=[common], help='Analyze an inverse semigroup algebra.')
    p.add_argument('--contracted', action='store_true', help='Use the contracted algebra R_0 S.')
    p.add_argument('--iso', action='store_true', help='Verify the isomorphism with the universal groupoid algebra.')
    p.set_defaults(func=cmd_check_semigroup)

    p = sub.add_parser('corpus', help='Run the agreement suites over generated corpora.')
    p.add_argument('--seed', type=int, default=42, help='Seed of the random corpora. Default 42.')
    p.add_argument('--max-objects', type=int, default=3, help='Object bound of the groupoid corpus. Default 3.')
    p.add_argument('--max-arrows', type=int, default=8, help='Arrow bound of the groupoid corpus. Default 8.')
    p.add_argument('--suite', action='append', default=None, choices=CorpusAnalysis.SUITES,
                   help='Run only this suite. Repeatable.')
    p.add_argument('-q', '--quiet', action='store_true', help='No progress messages on stderr.')
    p.set_defaults(func=cmd_corpus)
    return parser


def _emit(report):
    print(canonical_json(report, indent=2))


def _check(args, kind, analysis):
    structure = load_structure(kind, read_json(args.path))
    if args.dump_canonical:
        print(dump_canonical(structure))
        return EXIT_OK

    start = perf_counter()
    result = analysis.analyze(structure)
    report = {'operation': f'check-{kind}', 'input_digest': digest(dump_structure(structure)),
              'ring': str(analysis.ring), 'result': result,
              'timing': {'seconds': round(perf_counter() - start, 6)}}
    _emit(report)

    oracle = result.get('oracle', {})
    if any(isinstance(v, dict) and v.get('agreement') == 'disagree' for v in oracle.values()):
        _err('structural and brute-force verdicts disagree')
        return EXIT_DISAGREEMENT

    code = EXIT_OK
    for prop, wanted in args.expect:
        verdict = result.get(prop, {})
        if prop not in verdict:
            _err(f'expected {prop}={str(wanted).lower()}, but no {prop} verdict was produced')
            code = EXIT_EXPECTATION
        elif verdict[prop] != wanted:
            _err(f'expected {prop}={str(wanted).lower()}, got {str(verdict[prop]).lower()}: {verdict["reason"]}')
            code = EXIT_EXPECTATION
    return code


def cmd_check_groupoid(args):
    return _check(args, 'groupoid', GroupoidAnalysis(ring=args.ring, oracle=args.oracle, verbose=not args.quiet))


def cmd_check_graph(args):
    return _check(args, 'graph', GraphAnalysis(ring=args.ring, oracle=args.oracle, depth=args.depth,
                                               verbose=not args.quiet))


def cmd_check_semigroup(args):
    return _check(args, 'semigroup', SemigroupAnalysis(ring=args.ring, contracted=args.contracted, iso=args.iso,
                                                       oracle=args.oracle, verbose=not args.quiet))


def cmd_corpus(args):
    settings = None if args.suite is None else {'suites': tuple(args.suite)}
    analysis = CorpusAnalysis(seed=args.seed, max_objects=args.max_objects, max_arrows=args.max_arrows,
                              settings=settings, verbose=not args.quiet)
    start = perf_counter()
    result = analysis.run()
    _emit({'operation': 'corpus', 'input_digest': digest({'seed': args.seed, 'max_objects': args.max_objects,
                                                          'max_arrows': args.max_arrows, 'suites': args.suite}),
           'result': result, 'timing': {'seconds': round(perf_counter() - start, 6)}})
    if not result['ok']:
        for name, suite in result['suites'].items():
            if suite['fail']:
                _err(f'suite {name}: {suite["fail"]} disagreements, smallest counterexample '
                     f'{canonical_json(suite["counterexample"])}')
        return EXIT_DISAGREEMENT
    return EXIT_OK


def main(argv=None):
    """
    Entry point of the gpa command.

    Returns
    -------
    code : int
        0 on success, 1 when an --expect is violated, 2 on invalid input, 3 on any disagreement.
    """
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as e:
        _err(f'invalid input: {e.axiom}: {e}')
        return EXIT_INVALID
    except ValueError as e:
        _err(f'invalid input: {e}')
        return EXIT_INVALID
    except CapExceeded as e:
        _err(f'search cap exceeded: {e}')
        return EXIT_INVALID
    except InternalDisagreement as e:
        _err(f'internal disagreement: {e}')
        return EXIT_DISAGREEMENT


if __name__ == '__main__':
    sys.exit(main())
