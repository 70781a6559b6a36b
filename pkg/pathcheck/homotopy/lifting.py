# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Lifting problems and their fillers.

    A lifting problem is a commuting square

        A --h--> C
        |        |
        f        g
        v        v
        B --k--> D

    and a filler is a functor l: B -> C with l o f = h and g o l = k. Fillers are searched with the functor
    enumeration of pathcheck.groupoid: f pins l, g constrains it from above.
"""
from collections import OrderedDict

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.common.log import get_logger
from pathcheck.groupoid import FunctorConstraints, compose, enumerate_functors, first_functor, iter_functors, \
    functor_from_json

_logger = get_logger("homotopy.lifting")


class LiftingProblem(object):
    """ The square g o h = k o f """

    def __init__(self, f, g, h, k):
        self.f = f
        self.g = g
        self.h = h
        self.k = k

    def violation(self):
        """ :return: why the four maps do not form a commuting square, or None """
        f, g, h, k = self.f, self.g, self.h, self.k
        if h.dom != f.dom or k.dom != f.cod or h.cod != g.dom or k.cod != g.cod:
            return "the four maps do not form a square"
        if compose(g, h) != compose(k, f):
            return "the square does not commute"
        return None

    def check(self):
        """ Raises GroupoidLawException unless the square commutes """
        reason = self.violation()
        if reason is not None:
            raise GroupoidLawException(reason)

    def constraints(self):
        return FunctorConstraints(pins=[(self.f, self.h)], over=[(self.g, self.k)])

    def is_filler(self, l):
        return l.dom == self.f.cod and l.cod == self.g.dom and compose(l, self.f) == self.h \
            and compose(self.g, l) == self.k

    def to_json(self):
        return OrderedDict([("f", self.f.to_json()), ("g", self.g.to_json()), ("h", self.h.to_json()),
                            ("k", self.k.to_json())])

    def __repr__(self):
        return "LiftingProblem({!r}, {!r}, {!r}, {!r})".format(self.f, self.g, self.h, self.k)


def lifting_problem_from_json(data, A, B, C, D):
    """ Reads {"f", "g", "h", "k"} over the groupoids of the square. Raises GroupoidLawException """
    try:
        problem = LiftingProblem(functor_from_json(data["f"], A, B), functor_from_json(data["g"], C, D),
                                 functor_from_json(data["h"], A, C), functor_from_json(data["k"], B, D))
    except (KeyError, TypeError) as e:
        raise GroupoidLawException("malformed lifting problem: {}".format(e))
    problem.check()
    return problem


def fillers(problem):
    """ Iterates over every filler of problem, in enumeration order """
    problem.check()
    return iter_functors(problem.f.cod, problem.g.dom, problem.constraints())


def solve_lift(problem):
    """
    :return: the first filler of problem in enumeration order, or None if there is none. Raises
             GroupoidLawException when the square does not commute
    """
    problem.check()
    l = first_functor(problem.f.cod, problem.g.dom, problem.constraints())
    if l is None:
        _logger.debug("no filler for %r", problem)
        return None
    if not problem.is_filler(l):
        raise GroupoidLawException("the search returned a map violating a triangle of the square")
    return l


def enumerate_squares(f, g):
    """ :return: every commuting square from f to g, ordered by the top map and then the bottom map """
    squares = []
    for h in enumerate_functors(f.dom, g.dom):
        gh = compose(g, h)
        for k in enumerate_functors(f.cod, g.cod, FunctorConstraints(pins=[(f, gh)])):
            squares.append(LiftingProblem(f, g, h, k))
    return squares


def llp_counterexample(f, g):
    """ :return: the first commuting square from f to g without a filler, or None """
    for problem in enumerate_squares(f, g):
        if solve_lift(problem) is None:
            return problem
    return None


def has_llp(f, g):
    """ True iff f has the left lifting property with respect to g. Raises SearchLimitException """
    return llp_counterexample(f, g) is None
