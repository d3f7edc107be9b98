#!/usr/bin/env python
import sys
import logging
import argparse
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Any, Dict, List, Optional, Sequence, TextIO

import einsteincheck
from einsteincheck.core.config import ConfigManager, RunConfig
from einsteincheck.core.flagdecomp import Decomposition, find_nodes_with_q2
from einsteincheck.core.reporter import OutputFormat, Reporter
from einsteincheck.core.reproduce import EXCEPTIONAL, all_tasks, run_checks, sweep
from einsteincheck.core.rootsys import LieKind, enumerate_positive_roots
from einsteincheck.core.selector import resolve_kind, resolve_nodes
from einsteincheck.core.solver import QuotientEinstein, SolveResult, quotient_einstein_metrics, solve
from einsteincheck.exceptions import (
    EinsteinCheckError,
    ConfigurationError,
    SelectorError
)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130


def _selector_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group('group selection')
    group.add_argument('--group', metavar='NAME', help='Group name: E6, E7, E8, F4, G2, B5, Sp(3), SO(12), ...')
    group.add_argument('--family', metavar='X', help='Family letter B, C or D (or an exceptional name)')
    group.add_argument('--n', type=int, metavar='N', help='Rank of a classical family')
    group.add_argument('--p', type=int, metavar='P', help='Painted node of a classical family (1-based)')
    group.add_argument('--node', type=int, metavar='I', help='Painted Bourbaki node (1-based)')
    group.add_argument('--type', dest='dtype', choices=['Ia', 'Ib', 'IIa', 'IIb'], help='Only spaces of this Type')


def _output_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--verbose', '-V', action='store_true', help="Enable verbose output with detailed information")
    parser.add_argument('-q', '--quiet', action='store_true', help="Suppress non-error output")
    parser.add_argument(
        '--format',
        choices=['human', 'json', 'csv'],
        default=None,
        help='Output format: human, json, csv (default: human)'
    )
    parser.add_argument('-o', '--out', metavar='FILE', help='Write output to file instead of stdout')
    parser.add_argument('--precision', type=int, metavar='DIGITS', help='Decimal digits for inexact values')
    parser.add_argument('--width', metavar='W', help='Root isolation width, e.g. 1e-12 or 1/10000')
    parser.add_argument('--jobs', '-j', type=int, metavar='N', help='Worker threads for independent solves')


def parse_arguments(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse and return command line arguments."""
    parser = argparse.ArgumentParser(
        prog='einsteincheck',
        description=einsteincheck.__description__,
        epilog="Examples:\n"
               "  einsteincheck spaces --group E6\n"
               "  einsteincheck solve --group E7 --type Ib --format json\n"
               "  einsteincheck solve --family B --sweep 5..30 --format csv -o sweep.csv\n"
               "  einsteincheck reproduce\n",
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument('-v', '--version', action='version', version=f'EinsteinCheck {einsteincheck.__version__}')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    spaces = commands.add_parser('spaces', help='List painted nodes with q = 2, their dimensions and Type')
    _selector_options(spaces)
    _output_options(spaces)

    solve_cmd = commands.add_parser('solve', help='Solve the Einstein equations of the selected spaces')
    _selector_options(solve_cmd)
    _output_options(solve_cmd)
    solve_cmd.add_argument('--sweep', metavar='A..B', help='Rank range of a classical family, e.g. 5..30')
    solve_cmd.add_argument('--unit-einstein', action='store_true', default=None,
                           help='Rescale every reported metric to Einstein constant 1')

    reproduce = commands.add_parser('reproduce', help='Regenerate every published table, polynomial and solution')
    _output_options(reproduce)
    reproduce.add_argument('--only', nargs='+', metavar='PREFIX',
                           help='Run only the checks whose task name starts with PREFIX')

    return parser.parse_args(argv)


def configure_logging(args: argparse.Namespace) -> None:
    """Root logger on stderr: WARNING, DEBUG with --verbose, ERROR with --quiet."""
    level = logging.WARNING
    if getattr(args, 'verbose', False):
        level = logging.DEBUG
    elif getattr(args, 'quiet', False):
        level = logging.ERROR
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s", force=True)


def load_config(args: argparse.Namespace, manager: Optional[ConfigManager] = None) -> RunConfig:
    """Configuration files overridden by the flags that were actually given.

    Raises:
        ConfigurationError: If a file or flag value is invalid
    """
    overrides: Dict[str, Any] = {
        'group': getattr(args, 'group', None),
        'family': getattr(args, 'family', None),
        'n': getattr(args, 'n', None),
        'p': getattr(args, 'p', None),
        'node': getattr(args, 'node', None),
        'dtype': getattr(args, 'dtype', None),
        'precision': args.precision,
        'width': args.width,
        'sweep': getattr(args, 'sweep', None),
        'output_format': args.format,
        'jobs': args.jobs,
        'unit_einstein': getattr(args, 'unit_einstein', None),
        'verbose': args.verbose or None,
    }
    return (manager or ConfigManager()).load(overrides)


def setup_output_file(args: argparse.Namespace) -> Optional[TextIO]:
    """Setup output file if specified.

    Args:
        args: Parsed command line arguments

    Returns:
        Open file handle if output file specified, None otherwise
    """
    if args.out:
        output_file = open(args.out, 'w', newline='')
        if not args.quiet:
            print(f"Writing output to {args.out}...", file=sys.stderr)
        return output_file
    return None


def finalize_output(output_file: Optional[TextIO], args: argparse.Namespace) -> None:
    """Close output file and print success message.

    Args:
        output_file: Open file handle or None
        args: Parsed command line arguments
    """
    if output_file:
        output_file.close()
        if not args.quiet:
            print(f"✓ Report saved to {args.out}", file=sys.stderr)


def make_reporter(config: RunConfig) -> Reporter:
    return Reporter(OutputFormat(config.output_format), precision=config.precision, verbose=config.verbose)


def selected_spaces(config: RunConfig) -> List[Decomposition]:
    """Decompositions picked by the selector; every exceptional group when nothing is selected."""
    if not (config.group or config.family):
        return [dims for group in EXCEPTIONAL for _, dims in find_nodes_with_q2(enumerate_positive_roots(LieKind(group)))]
    kind = resolve_kind(config.group, config.family, config.n)
    return [dims for _, dims in resolve_nodes(kind, config.node, config.p, config.dtype)]


def cmd_spaces(config: RunConfig, output: Optional[TextIO]) -> int:
    spaces = selected_spaces(config)
    quotients: Dict[str, List[QuotientEinstein]] = {}
    if config.verbose:
        quotients = {dims.label: quotient_einstein_metrics(dims) for dims in spaces}
    make_reporter(config).report_spaces(spaces, quotients, output)
    return EXIT_OK


def solve_spaces(spaces: Sequence[Decomposition], config: RunConfig) -> List[SolveResult]:
    """Solve every decomposition, in selector order, on ``config.jobs`` threads."""
    def task(dims: Decomposition) -> SolveResult:
        result = solve(dims, config.width, config.residual_threshold, config.tolerance)
        if config.unit_einstein:
            result = replace(result, solutions=[s.rescaled() for s in result.solutions])
        return result

    with ThreadPoolExecutor(max_workers=config.jobs) as executor:
        return list(executor.map(task, spaces))


def cmd_solve(config: RunConfig, output: Optional[TextIO]) -> int:
    reporter = make_reporter(config)
    if config.sweep is not None:
        lo, hi = config.sweep
        reporter.report_sweep(sweep(config.family, lo, hi, config, p=config.p or config.node), output)
        return EXIT_OK
    if not (config.group or config.family):
        raise SelectorError("select a group with --group or --family")
    reporter.report_solve(solve_spaces(selected_spaces(config), config), output)
    return EXIT_OK


def cmd_reproduce(config: RunConfig, output: Optional[TextIO], only: Optional[Sequence[str]] = None) -> int:
    if only:
        unknown = [prefix for prefix in only if not any(name.startswith(prefix) for name in all_tasks())]
        if unknown:
            raise ConfigurationError(f"no reproduction task starts with {', '.join(unknown)}")
    records = run_checks(config, only)
    make_reporter(config).report_checks(records, output)
    return EXIT_OK if all(r.passed for r in records) else EXIT_FAILED


def run_command(args: argparse.Namespace, config: RunConfig, output: Optional[TextIO]) -> int:
    if args.command == 'spaces':
        return cmd_spaces(config, output)
    if args.command == 'solve':
        return cmd_solve(config, output)
    return cmd_reproduce(config, output, getattr(args, 'only', None))


def handle_error(e: BaseException, args: argparse.Namespace, error_type: str = "Error") -> None:
    """Handle different types of errors uniformly.

    Args:
        e: Exception that was raised
        args: Parsed command line arguments
        error_type: Type of error for specialized handling
    """
    if error_type == "Configuration":
        print(f"❌ Configuration Error: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    elif error_type == "Selector":
        print(f"❌ Selector Error: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)
    elif error_type == "Unexpected":
        if getattr(args, 'verbose', False):
            import traceback
            traceback.print_exc()
        else:
            print(f"Unexpected error: {e}", file=sys.stderr)
            print("Use --verbose for more details.", file=sys.stderr)
    else:
        print(f"Error: {e}", file=sys.stderr)
    sys.exit(EXIT_FAILED)


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Main entry point for the EinsteinCheck CLI tool."""
    args = parse_arguments(argv)
    configure_logging(args)

    output_file = None
    try:
        config = load_config(args)
        output_file = setup_output_file(args)
        code = run_command(args, config, output_file)
        finalize_output(output_file, args)
        output_file = None
        if code:
            sys.exit(code)

    except ConfigurationError as e:
        handle_error(e, args, "Configuration")
    except SelectorError as e:
        handle_error(e, args, "Selector")
    except EinsteinCheckError as e:
        handle_error(e, args)
    except KeyboardInterrupt:
        print("\nOperation cancelled by user.", file=sys.stderr)
        sys.exit(EXIT_INTERRUPTED)
    except Exception as e:
        handle_error(e, args, "Unexpected")
    finally:
        if output_file:
            output_file.close()


if __name__ == "__main__":
    main()
