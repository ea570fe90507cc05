import argparse
import sys

from ..utils.errors import ConfigError, MembershipError, ShapeError
from ..utils.logger import Logger
from ..utils.utils_translation import TextTranslation
from .config import load_config
from .runner import run_experiment, run_acceptance
from .scenarios import SCENARIOS

__all__ = ['build_parser', 'main', 'EXIT_PASS', 'EXIT_FAIL', 'EXIT_USAGE']

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def build_parser():
    parser = argparse.ArgumentParser(prog='mobiusflow',
                                     description="Kinetic energy geometry of Möbius actions: reproducible experiments.")
    parser.add_argument('--quiet', action='store_true', help="do not print log messages on the console")
    commands = parser.add_subparsers(dest='command', required=True)

    run = commands.add_parser('run', help="run the scenario of a JSON configuration")
    run.add_argument('config', help="path of the JSON configuration")
    run.add_argument('--seed', type=int, default=None, help="override the quadrature seed")
    run.add_argument('--out', default=None, help="output directory (default: the 'output' entry)")

    commands.add_parser('list-scenarios', help="list the scenarios and the statement each one tests")

    acceptance = commands.add_parser('acceptance', help="run every scenario with its built-in configuration")
    acceptance.add_argument('--out', default='acceptance', help="output directory")
    acceptance.add_argument('--seed', type=int, default=0, help="seed of every scenario")
    acceptance.add_argument('--jobs', type=int, default=1, help="number of worker processes")
    return parser


def main(argv=None):
    """ Entry point of the ``mobiusflow`` command.

    Returns
    -------
    int
        Returns 0 when every check passes, 1 when a tolerance check fails and 2 for configuration errors.
    """
    args = build_parser().parse_args(argv)
    logger = Logger()
    if args.quiet:
        logger.log_disable()
    else:
        logger.log_enable()

    if args.command == 'list-scenarios':
        for name, scenario in SCENARIOS.items():
            print('%-22s %s' % (name, scenario.theorem))
        return EXIT_PASS

    if args.command == 'acceptance':
        if args.jobs < 1:
            print('error: --jobs must be positive', file=sys.stderr)
            return EXIT_USAGE
        if args.seed < 0:
            print('error: %s %d' % (TextTranslation().get_str('Error_seed'), args.seed), file=sys.stderr)
            return EXIT_USAGE
        summary =run_acceptance(args.out, args.seed, args.jobs)
        return EXIT_PASS if summary['pass'] else EXIT_FAIL

    try:
        if args.seed is not None and args.seed < 0:
            raise ConfigError('seed', '%s %d' % (TextTranslation().get_str('Error_seed'), args.seed))
        config = load_config(args.config)
    except (ConfigError, MembershipError, ShapeError) as e:
        print('error: %s' % e, file=sys.stderr)
        return EXIT_USAGE
    result, _ = run_experiment(config, args.out, args.seed)
    return EXIT_PASS if result.passed else EXIT_FAIL


if __name__ == '__main__':
    sys.exit(main())
