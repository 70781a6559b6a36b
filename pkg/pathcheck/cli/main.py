# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Command-line entry point: pathcheck check | interpret | demo | hom """
import argparse

from pathcheck import __version__
from pathcheck.common.exceptions import ConfigException, EnvironmentException, ParseException, QueryException, \
    SearchLimitException
from pathcheck.common.log import init_logging, get_logger
from pathcheck.cli.commands import cmd_check, cmd_demo, cmd_hom, cmd_interpret
from pathcheck.cli.config import resolve_config
from pathcheck.cli.demos import DEMOS
from pathcheck.cli.reports import exit_code, render, write_report
from pathcheck.groupoid import get_search_limit, set_search_limit
from pathcheck.semantics import BACKENDS

_logger = get_logger("cli")

EXIT_USAGE = 2

USAGE_ERRORS = (ParseException, ConfigException, QueryException, EnvironmentException, SearchLimitException)


def _common_options():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--extensional", action="store_true", default=None,
                        help="Check with the reflection rule (extensional theory)")
    parser.add_argument("--strict-j", dest="strict_j", action="store_true", default=None,
                        help="Make J commute strictly with substitution")
    parser.add_argument("--backend", choices=BACKENDS, default=None, help="Semantic backend")
    parser.add_argument("--json", action="store_true", default=None, help="Print the report as JSON")
    parser.add_argument("--seed", type=int, default=None, help="Seed of the generated corpora")
    parser.add_argument("--max-search", dest="max_search", type=int, default=None,
                        help="Size guard of the searches (also PATHCHECK_MAX_SEARCH)")
    parser.add_argument("--config", default=None, help="Configuration file (default: ./configuration.yaml)")
    parser.add_argument("--log-level", dest="log_level", default=None,
                        help="Log level: DEBUG, INFO, WARNING, ERROR or CRITICAL")
    parser.add_argument("--output", default=None, help="Write the report to this file instead of stdout")
    return parser


def get_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog="pathcheck",
                                     description="Checker and groupoid interpretation of type theory with identity "
                                                 "types")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    commands = parser.add_subparsers(dest="command")
    commands.required = True

    check = commands.add_parser("check", parents=[common], help="Check the goals of .mltt files")
    check.add_argument("files", nargs="+")

    interpret = commands.add_parser("interpret", parents=[common], help="Interpret the goals of a .mltt file")
    interpret.add_argument("file")
    source = interpret.add_mutually_exclusive_group()
    source.add_argument("--env", default=None, help="Environment file (JSON or YAML)")
    source.add_argument("--preset", default=None, help="Environment preset: interval, z2 or discrete-N")

    demo = commands.add_parser("demo", parents=[common], help="Run a demonstration suite")
    demo.add_argument("name", choices=list(DEMOS))

    hom = commands.add_parser("hom", parents=[common], help="Answer homotopy queries on finite groupoids")
    hom.add_argument("query_file")
    return parser


def run(args, config):
    """ :return: the report of the command of args """
    if args.command == "check":
        return cmd_check(args.files, config)
    if args.command == "interpret":
        return cmd_interpret(args.file, config, env_file=args.env, preset=args.preset)
    if args.command == "demo":
        return cmd_demo(args.name, config)
    return cmd_hom(args.query_file, config)


def main(argv=None, environ=None, stream=None):
    """
    :param argv: the arguments, sys.argv[1:] by default
    :param environ: the environment variables, os.environ by default
    :param stream: where reports are printed, stdout by default
    :return: the exit code: 0 when every goal passed, 1 when one did not, 2 on usage, input or environment errors
    """
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        config = resolve_config(args, environ)
    except ConfigException as e:
        init_logging()
        _logger.error("%s", e)
        return EXIT_USAGE
    init_logging(config.log_level)

    previous_limit = get_search_limit()
    set_search_limit(config.max_search)
    try:
        report = run(args, config)
    except USAGE_ERRORS as e:
        _logger.error("%s: %s", args.command, e)
        return EXIT_USAGE
    finally:
        set_search_limit(previous_limit)

    write_report(render(report, config.format), args.output, stream)
    return exit_code(report)
