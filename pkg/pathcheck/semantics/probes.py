# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Checks of the groupoid interpretation: soundness of definitional equalities, the reflection countermodel,
    extensionality of discrete environments, stability of path objects under substitution, coherence of the
    interpretation of J under substitution, and agreement of the two backends.
"""
from collections import OrderedDict

from pathcheck.common.exceptions import EnvironmentException, PathcheckException
from pathcheck.common.log import get_logger
from pathcheck.groupoid import compose, diagonal, discrete, find_isomorphism, functor_by_labels, pairing, point, \
    product, pullback, arrow_groupoid, relative_path_object
from pathcheck.homotopy import right_homotopy
from pathcheck.semantics.environment import build_env, env_from_preset
from pathcheck.semantics.interpreter import Interpreter, FillerCache
from pathcheck.syntax.parser import parse
from pathcheck.syntax.substitution import push_substitution
from pathcheck.syntax.terms import BaseApp, ConstApp, Context, Id, SuspSub, IsType, HasType, TypeEq, TermEq, \
    goal_name

_logger = get_logger("semantics.probes")

REFLECTION_SOURCE = """
assume A : Type
assume a : A
assume b : A
"""


# Soundness

class SoundnessReport(object):
    """ One (name, passed, error) entry per equality """

    def __init__(self, entries):
        self.entries = entries

    @property
    def passed(self):
        return all(passed for _, passed, _ in self.entries)

    def failures(self):
        return [name for name, passed, _ in self.entries if not passed]

    def to_json(self):
        return OrderedDict([
            ("passed", self.passed),
            ("equalities", [OrderedDict([("name", name), ("passed", passed), ("error", error)])
                            for name, passed, error in self.entries]),
        ])


def check_soundness(env, equalities):
    """
    :param equalities: TermEq judgements accepted by the kernel
    :return: a SoundnessReport: an equality passes when both sides are interpreted by the same section
    """
    interpreter = Interpreter(env)
    entries = []
    for judgement in equalities:
        name = goal_name(judgement)
        try:
            scope = interpreter.context(judgement.context)
            left, right = interpreter.term(scope, judgement.left), interpreter.term(scope, judgement.right)
            if left.fibration != right.fibration:
                entries.append((name, False, "the two sides lie over different fibrations"))
            elif left.functor != right.functor:
                entries.append((name, False, "the two sides are different sections"))
            else:
                entries.append((name, True, None))
        except PathcheckException as e:
            entries.append((name, False, str(e)))
    report = SoundnessReport(entries)
    _logger.info("%d/%d equalities sound", len(entries) - len(report.failures()), len(entries))
    return report


# Reflection

class CountermodelReport(object):
    def __init__(self, preset, fiber, a, b):
        self.preset = preset
        self.fiber = fiber
        self.a = a
        self.b = b

    @property
    def fiber_objects(self):
        return self.fiber.n_objects

    @property
    def distinct(self):
        return self.a != self.b

    @property
    def refutes_reflection(self):
        """ Id A a b is inhabited while a and b are interpreted by different points """
        return self.fiber_objects > 0 and self.distinct

    def to_json(self):
        return OrderedDict([("preset", self.preset), ("fiber_objects", self.fiber_objects),
                            ("inhabitants", list(self.fiber.objects())), ("a", self.a), ("b", self.b),
                            ("distinct", self.distinct), ("refutes_reflection", self.refutes_reflection)])


def reflection_countermodel(preset="interval", backend="groupoid"):
    """ Interprets a, b : A and Id A a b with A given by the preset, a and b by its first two points """
    signature, _ = parse(REFLECTION_SOURCE)
    interpreter = Interpreter(env_from_preset(signature, preset, backend))
    scope = interpreter.context(Context())
    identity = interpreter.type(scope, Id(BaseApp("A"), ConstApp("a"), ConstApp("b")))
    a = interpreter.term(scope, ConstApp("a")).functor.obj[0]
    b = interpreter.term(scope, ConstApp("b")).functor.obj[0]
    # over the empty context, the total of Id A a b is its fiber over (a, b)
    return CountermodelReport(preset, identity.total, a, b)


# Extensionality of discrete groupoids

class ExtensionalityReport(object):
    def __init__(self, n, cases, iso):
        self.n = n
        self.cases = cases
        self.iso = iso

    def failures(self):
        return [(a, b) for a, b, size in self.cases if (size > 0) != (a == b)]

    @property
    def passed(self):
        return self.iso is not None and not self.failures()

    def to_json(self):
        return OrderedDict([("n", self.n), ("passed", self.passed),
                            ("isomorphic_to_diagonal", self.iso is not None),
                            ("cases", [[a, b, size] for a, b, size in self.cases]),
                            ("failures", [list(case) for case in self.failures()])])


def extensionality_check_discrete(n):
    """
    For A discrete with n objects: A^I is isomorphic to A over A x A through the diagonal, and the fiber of A^I
    over (a, b) is inhabited iff a = b
    """
    if n < 0:
        raise ValueError("a groupoid has a non-negative number of objects")
    A = discrete(n)
    path = arrow_groupoid(A)
    AA = product(A, A).groupoid
    iso = find_isomorphism(A, path.groupoid, over=[(path.p, diagonal(A))])
    cases = []
    for a in A.objects():
        for b in A.objects():
            fiber = pullback(point(AA, AA.object_index((a, b))), path.p).groupoid
            cases.append((a, b, fiber.n_objects))
    return ExtensionalityReport(n, cases, iso)


# Stability under substitution

class StabilityReport(object):
    def __init__(self, iso):
        self.iso = iso

    @property
    def passed(self):
        return self.iso is not None

    def to_json(self):
        return OrderedDict([("passed", self.passed), ("iso", self.iso.to_json() if self.iso is not None else None)])


def stability_check(g, sigma):
    """
    Compares sigma*(P_g) and P_(sigma*g), where P is the relative path object, for a fibration g: B -> Gamma and
    sigma: Gamma' -> Gamma. Raises GroupoidLawException when g is not a fibration
    :return: a StabilityReport holding an isomorphism commuting with the maps r and p, if any
    """
    path = relative_path_object(g)
    Q = pullback(g, g).groupoid
    lhs = pullback(sigma, compose(g, compose(pullback(g, g).first, path.p)))
    moved = pullback(sigma, g)
    B1 = moved.groupoid
    rhs = relative_path_object(moved.first)
    Q1 = pullback(moved.first, moved.first).groupoid

    r_lhs = pairing(moved.first, compose(path.r, moved.second), target=lhs.groupoid)

    def on_object(label):
        gamma, x = label
        b1, b2 = Q.object_labels[path.p.obj[x]]
        return B1.object_index((gamma, b1)), B1.object_index((gamma, b2))

    def on_morphism(label):
        mu, xi = label
        phi, psi = Q.morphism_labels[path.p.mor[xi]]
        return B1.morphism_index((mu, phi)), B1.morphism_index((mu, psi))

    p_lhs = functor_by_labels(lhs.groupoid, Q1, on_object, on_morphism)
    iso = find_isomorphism(lhs.groupoid, rhs.groupoid, pins=[(r_lhs, rhs.r)], over=[(rhs.p, p_lhs)])
    return StabilityReport(iso)


# Coherence of J under substitution

class CoherenceReport(object):
    def __init__(self, lhs, rhs, homotopy):
        self.lhs = lhs
        self.rhs = rhs
        self.homotopy = homotopy

    @property
    def strict_equal(self):
        return self.lhs == self.rhs

    @property
    def passed(self):
        return self.homotopy is not None

    def to_json(self):
        return OrderedDict([("strict_equal", self.strict_equal), ("homotopy_found", self.passed),
                            ("lhs", self.lhs.functor.to_json()), ("rhs", self.rhs.functor.to_json()),
                            ("homotopy", self.homotopy.to_json() if self.homotopy is not None else None)])


def coherence_probe(env, context, term, hook_manager=None):
    """
    Compares the interpretation of a J-term under a suspended substitution, the pullback of its filler, with the
    interpretation of the J-term where the substitution is pushed in, computed with a fresh FillerCache using
    hook_manager.
    :return: a CoherenceReport. The homotopy is vertical for the fibration of the type of the term
    """
    if not isinstance(term, SuspSub):
        raise EnvironmentException("a coherence probe needs a J-term under a suspended substitution")
    left = Interpreter(env)
    lhs = left.term(left.context(context), term)
    right = Interpreter(env, FillerCache(hook_manager))
    rhs = right.term(right.context(context), push_substitution(term.term, term.mapping))
    if lhs.fibration != rhs.fibration:
        raise EnvironmentException("the two interpretations of the J-term lie over different fibrations")
    homotopy = right_homotopy(lhs.functor, rhs.functor, fibration=lhs.fibration.projection)
    report = CoherenceReport(lhs, rhs, homotopy)
    if not report.strict_equal:
        _logger.warning("J is not strictly stable under substitution here (homotopy %s)",
                        "found" if report.passed else "missing")
    return report


# Backend agreement

class AgreementReport(object):
    """ One (name, groupoid status, discrete status, isomorphic) entry per goal """

    def __init__(self, entries):
        self.entries = entries

    @property
    def passed(self):
        return all(left == right and isomorphic for _, left, right, isomorphic in self.entries)

    def to_json(self):
        return OrderedDict([
            ("passed", self.passed),
            ("goals", [OrderedDict([("name", name), ("groupoid", left), ("discrete", right),
                                    ("isomorphic", isomorphic)])
                       for name, left, right, isomorphic in self.entries]),
        ])


def _goal_fibration(interpreter, goal):
    scope = interpreter.context(goal.context)
    if isinstance(goal, IsType):
        return interpreter.type(scope, goal.type)
    if isinstance(goal, TypeEq):
        return interpreter.type(scope, goal.left)
    if isinstance(goal, (HasType, TermEq)):
        return interpreter.type(scope, goal.type)
    raise EnvironmentException("unknown judgement {!r}".format(goal))


def backend_agreement(signature, data, goals):
    """
    Interprets goals in the groupoid and in the discrete backend of the same environment data, which must only
    use discrete groupoids, and compares the statuses and the fibrations of the goals up to isomorphism
    """
    interpreters = [Interpreter(build_env(signature, data, backend)) for backend in ("groupoid", "discrete")]
    entries = []
    for goal in goals:
        statuses = [interpreter.judgement(goal).status for interpreter in interpreters]
        try:
            fibrations = [_goal_fibration(interpreter, goal) for interpreter in interpreters]
        except PathcheckException:
            entries.append((goal_name(goal), statuses[0], statuses[1], statuses[0] == statuses[1]))
            continue
        isomorphic = find_isomorphism(fibrations[0].total, fibrations[1].total) is not None \
            and find_isomorphism(fibrations[0].base, fibrations[1].base) is not None
        entries.append((goal_name(goal), statuses[0], statuses[1], isomorphic))
    return AgreementReport(entries)
