# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" The four commands. Each returns a report; exceptions are mapped to exit codes by pathcheck.cli.main """
import os

from pathcheck.common.base import LOAD_ERRORS, load_json_or_yaml, read_source
from pathcheck.common.exceptions import ConfigException, QueryException
from pathcheck.common.log import get_logger
from pathcheck.cli.demos import run_demo
from pathcheck.cli.queries import answer, split_queries
from pathcheck.cli.reports import goal_entry, make_report, verdict_entry
from pathcheck.kernel import Kernel
from pathcheck.semantics import FillerCache, Interpreter, env_from_preset, load_env
from pathcheck.syntax import parse
from pathcheck.syntax.terms import goal_name

_logger = get_logger("cli.commands")

DEFAULT_PRESET = "interval"


def _kernel(signature, config):
    return Kernel(signature, config.kernel_mode(), max_reduction_steps=config.max_reduction_steps)


def _load_program(file_path):
    """ :return: (signature, goals) of a .mltt file. Raises ParseException """
    try:
        source = read_source(file_path)
    except IOError as e:
        raise ConfigException("cannot read {}: {}".format(file_path, e))
    return parse(source)


def cmd_check(files, config):
    """ Checks every goal of every file. Goals are named kind@line, prefixed by their file when there are several """
    entries = []
    for file_path in files:
        signature, goals = _load_program(file_path)
        prefix = "{}:".format(file_path) if len(files) > 1 else ""
        kernel = _kernel(signature, config)
        signature_verdict = kernel.validate_signature()
        if not signature_verdict.accepted:
            entries.append(verdict_entry(prefix + "signature", signature_verdict))
        for goal, verdict in zip(goals, kernel.check_program(goals)):
            entries.append(verdict_entry(prefix + goal_name(goal), verdict))
        _logger.info("%s: %d goals checked", os.path.basename(file_path), len(goals))
    return make_report(entries)


def cmd_interpret(file_path, config, env_file=None, preset=None, hook_manager=None):
    """
    Interprets the kernel-accepted goals of a file in the environment given by env_file, or by the preset (the
    interval by default). Goals rejected by the kernel are reported as rejected and not interpreted.
    """
    signature, goals = _load_program(file_path)
    if env_file is not None:
        env = load_env(env_file, signature, config.backend)
    else:
        env = env_from_preset(signature, preset or DEFAULT_PRESET, config.backend)
    kernel = _kernel(signature, config)
    interpreter = Interpreter(env, FillerCache(hook_manager))
    entries = []
    for goal, verdict in zip(goals, kernel.check_program(goals)):
        if not verdict.accepted:
            entries.append(goal_entry(goal_name(goal), "rejected", error=verdict.reason))
            continue
        entries.append(interpreter.judgement(goal).to_json())
    return make_report(entries)


def cmd_demo(name, config):
    return make_report(run_demo(name, config))


def cmd_hom(query_file, config):
    """ Answers every query of a JSON or YAML query file """
    try:
        data = load_json_or_yaml(query_file)
    except LOAD_ERRORS as e:
        raise QueryException("cannot read the query file {}: {}".format(query_file, e))
    entries = []
    for name, query in split_queries(data):
        passed, witness = answer(query)
        entries.append(goal_entry(name, "ok" if passed else "failed", witness=witness))
    return make_report(entries)
