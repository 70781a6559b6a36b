# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Verification of the weak factorization systems of the model structure on a finite universe of maps: every map
    factors, acyclic cofibrations lift against fibrations, cofibrations lift against acyclic fibrations, and weak
    equivalences satisfy two-out-of-three on composable pairs.
"""
from collections import OrderedDict

from pathcheck.common.log import get_logger
from pathcheck.groupoid import classify, enumerate_functors
from pathcheck.homotopy.factorization import factorize
from pathcheck.homotopy.lifting import llp_counterexample
from pathcheck.homotopy.three_for_two import three_for_two

_logger = get_logger("homotopy.wfs")


class WfsCheck(object):
    def __init__(self, check, maps, passed, witness=None):
        self.check = check
        self.maps = tuple(maps)
        self.passed = passed
        self.witness = witness

    def to_json(self):
        data = OrderedDict([("check", self.check), ("maps", list(self.maps)), ("passed", self.passed)])
        if self.witness is not None:
            data["witness"] = self.witness
        return data


class WfsReport(object):
    def __init__(self, classes, checks):
        self.classes = classes
        self.checks = checks

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def failures(self):
        return [check for check in self.checks if not check.passed]

    def count(self, check):
        return sum(1 for c in self.checks if c.check == check)

    def to_json(self):
        return OrderedDict([("passed", self.passed), ("maps", len(self.classes)),
                            ("classes", [flags.to_json() for flags in self.classes]),
                            ("checks", [check.to_json() for check in self.checks])])


def functor_universe(groupoids):
    """ :return: every functor between two groupoids of the list, in list order """
    return [F for A in groupoids for B in groupoids for F in enumerate_functors(A, B)]


def verify_wfs(universe):
    """
    Checks the factorization axiom on every map of universe, both lifting axioms on every pair of maps of the
    universe that they concern, and two-out-of-three on every composable pair. Maps are referred to by their index.
    Raises SearchLimitException.
    :return: a WfsReport
    """
    universe = list(universe)
    classes = [classify(f) for f in universe]
    checks = []

    for n, f in enumerate(universe):
        problem = factorize(f).violation(f)
        checks.append(WfsCheck("factorization", [n], problem is None, problem))

    for n, (left, left_class) in enumerate(zip(universe, classes)):
        for m, (right, right_class) in enumerate(zip(universe, classes)):
            concerned = (left_class.acyclic_cofibration and right_class.fibration) or \
                        (left_class.cofibration and right_class.acyclic_fibration)
            if not concerned:
                continue
            square = llp_counterexample(left, right)
            checks.append(WfsCheck("lifting", [n, m], square is None,
                                   square.to_json() if square is not None else None))

    for n, f in enumerate(universe):
        for m, g in enumerate(universe):
            if f.cod != g.dom:
                continue
            flags = three_for_two(f, g)
            checks.append(WfsCheck("three-for-two", [n, m], flags.holds, None if flags.holds else flags.to_json()))

    report = WfsReport(classes, checks)
    _logger.info("%d maps, %d checks, %d failures", len(universe), len(checks), len(report.failures()))
    return report
