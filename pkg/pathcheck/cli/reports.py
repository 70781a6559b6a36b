# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Reports of the commands: {"tool", "version", "goals": [{"name", "status", "trace" | "witness", "error"}]} """
import codecs
import sys
from collections import OrderedDict

from pathcheck import __tool__, __version__
from pathcheck.common.base import dump_json
from pathcheck.syntax.printer import pretty

# statuses counting as success
PASSING = ("accepted", "ok")


def goal_entry(name, status, trace=None, witness=None, error=None):
    entry = OrderedDict([("name", name), ("status", status)])
    if trace is not None:
        entry["trace"] = trace
    if witness is not None:
        entry["witness"] = witness
    if error is not None:
        entry["error"] = error
    return entry


def verdict_entry(name, verdict):
    """ The report entry of a kernel Verdict, with its rule trace """
    trace = [OrderedDict([("rule", step.rule), ("judgement", pretty(step.judgement))]) for step in verdict.trace]
    return goal_entry(name, "accepted" if verdict.accepted else "rejected", trace=trace, error=verdict.reason)


def make_report(goals):
    return OrderedDict([("tool", __tool__), ("version", __version__), ("goals", list(goals))])


def report_passed(report):
    return all(goal["status"] in PASSING for goal in report["goals"])


def exit_code(report):
    """ 0 when every goal passed, 1 otherwise """
    return 0 if report_passed(report) else 1


def render(report, fmt="human"):
    """ :return: the text of report, in the "json" or "human" format """
    if fmt == "json":
        return dump_json(report)
    lines = []
    for goal in report["goals"]:
        line = "{}: {}".format(goal["name"], goal["status"])
        if "error" in goal:
            line += " ({})".format(goal["error"])
        lines.append(line)
    passed = sum(1 for goal in report["goals"] if goal["status"] in PASSING)
    lines.append("{}/{} goals passed".format(passed, len(report["goals"])))
    return "\n".join(lines) + "\n"


def write_report(text, output=None, stream=None):
    """ Writes text to the file output, or to stream (stdout by default) """
    if output is not None:
        with codecs.open(output, "w", "utf-8") as f:
            f.write(text)
    else:
        (stream if stream is not None else sys.stdout).write(text)
