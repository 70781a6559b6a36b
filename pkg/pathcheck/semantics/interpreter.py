# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Interpretation of contexts, types, terms and judgements in a semantic environment.

    Identity types are pulled back from the path object of the generic fibration of their type, reflexivity is the
    map r of that path object, and J is a chosen filler of the square

        G_w ----d----> D
         |             |
         R             | projection
         v             v
        G_id ===== G_id

    where G_w interprets the context extended by w:A, G_id the context extended by x:A, y:A, z:Id A x y, and R
    sends w to (w, w, refl w). The filler is then pulled back along the interpretation of the two endpoints and the
    path.
"""
import threading
from collections import OrderedDict

from pathcheck.common.exceptions import UnsupportedFormerException, EnvironmentException, \
    FillerNotFoundException, PathcheckException
from pathcheck.common.hook_manager import HookManager
from pathcheck.common.log import get_logger, get_goal_logger
from pathcheck.groupoid import compose, identity_functor, pairing, pullback, terminal_map
from pathcheck.homotopy import LiftingProblem, fillers, solve_lift
from pathcheck.semantics.context import SemContext
from pathcheck.semantics.fibrations import PulledBackFibration, SigmaFibration, SemSection
from pathcheck.syntax.terms import BaseApp, Pi, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, \
    SuspSub, DefDecl, TermConstDecl, IsType, HasType, TypeEq, TermEq, free_vars, goal_name
from pathcheck.syntax.substitution import substitution_telescope

_logger = get_logger("semantics.interpreter")


class FillerCache(object):
    """
    The chosen fillers of the J-instances met so far, keyed by the interpreted A, D and base case. The first filler
    computed for a key is kept. A "filler_choice" hook of the hook manager may pick another candidate than the
    first one of the enumeration: it receives the problem and the list of candidates and returns an index.
    """

    def __init__(self, hook_manager=None):
        self._hook_manager = hook_manager if hook_manager is not None else HookManager()
        self._fillers = {}
        self._lock = threading.Lock()

    def filler(self, key, problem):
        """ :return: the filler cached for key, computing it from problem on first use """
        with self._lock:
            if key in self._fillers:
                return self._fillers[key]
        filler = self._choose(problem)
        with self._lock:
            return self._fillers.setdefault(key, filler)

    def _choose(self, problem):
        if self._hook_manager.has_hook("filler_choice"):
            candidates = list(fillers(problem))
            _logger.debug("%d filler candidates", len(candidates))
            if not candidates:
                raise FillerNotFoundException("no filler for the square of a J-term")
            choice = self._hook_manager.call_hook_first("filler_choice", 0, problem=problem, candidates=candidates)
            if isinstance(choice, int) and 0 <= choice < len(candidates):
                return candidates[choice]
            if choice in candidates:
                return choice
            _logger.warning("filler_choice hook returned %r, which is not a candidate", choice)
            return candidates[0]
        filler = solve_lift(problem)
        if filler is None:
            raise FillerNotFoundException("no filler for the square of a J-term")
        return filler

    def __len__(self):
        return len(self._fillers)


class Interpreter(object):
    """ Interprets syntax in a SemEnv. Each interpreter owns a FillerCache unless one is given """

    def __init__(self, env, cache=None):
        self._env = env
        self._signature = env.signature
        self._cache = cache if cache is not None else FillerCache()
        self._definitions = {}

    def get_cache(self):
        return self._cache

    def context(self, context):
        """ :return: the SemContext of a syntactic Context """
        scope = SemContext()
        for name, type_expr in context:
            scope = scope.extend(name, self.type(scope, type_expr))
        return scope

    # Types

    def type(self, scope, expr):
        """ :return: the SemFibration over scope.total interpreting the type expr """
        if isinstance(expr, BaseApp):
            family = self._env.family(expr.name)
            return PulledBackFibration(family.fibration, self._arguments(scope, family.telescope, expr.args))
        if isinstance(expr, Sigma):
            first = self.type(scope, expr.dom)
            return SigmaFibration(first, self.type(scope.extend(expr.var, first), expr.cod))
        if isinstance(expr, Id):
            fibration = self.type(scope, expr.type)
            left = self.check_term(scope, expr.left, fibration)
            return self._identity_type(fibration, left, self.check_term(scope, expr.right, fibration))
        if isinstance(expr, Pi):
            raise UnsupportedFormerException("dependent products have no interpretation in the groupoid backend")
        raise EnvironmentException("not a type: {!r}".format(expr))

    def _identity_type(self, fibration, left, right):
        u = fibration.generic()
        path = self._env.path_structure(u)
        endpoints = pairing(fibration.value(left.functor), fibration.value(right.functor),
                            target=pullback(u, u).groupoid)
        return PulledBackFibration(path.p, endpoints)

    # Terms

    def term(self, scope, expr):
        """ :return: the SemSection interpreting the term expr, over the fibration of its type """
        if isinstance(expr, Var):
            section = scope.variable(expr.name)
            if section is None:
                raise EnvironmentException("unbound variable {}".format(expr.name))
            return section
        if isinstance(expr, ConstApp):
            return self._constant(scope, expr)
        if isinstance(expr, App):
            return self._application(scope, expr)
        if isinstance(expr, Lam):
            raise UnsupportedFormerException("lambda abstractions have no interpretation in the groupoid backend")
        if isinstance(expr, Pair):
            fibration = self.type(scope, expr.annotation)
            first = self.check_term(scope, expr.first, fibration.first)
            second = self.check_term(scope, expr.second, fibration.second.substitute(first.functor))
            return SemSection(fibration, compose(fibration.second.lift(first.functor), second.functor))
        if isinstance(expr, (Fst, Snd)):
            pair = self.term(scope, expr.term)
            fibration = pair.fibration
            if not isinstance(fibration, SigmaFibration):
                raise EnvironmentException("projection out of a term that is not a pair")
            first = compose(fibration.second.projection, pair.functor)
            if isinstance(expr, Fst):
                return SemSection(fibration.first, first)
            return SemSection(fibration.second.substitute(first), fibration.second.factor(first, pair.functor))
        if isinstance(expr, Refl):
            fibration = self.type(scope, expr.type)
            point = self.check_term(scope, expr.term, fibration)
            identity = self._identity_type(fibration, point, point)
            path = self._env.path_structure(fibration.generic())
            return SemSection(identity, pairing(identity_functor(scope.total),
                                                compose(path.r, fibration.value(point.functor)),
                                                target=identity.total))
        if isinstance(expr, J):
            return self._eliminate(scope, expr)
        if isinstance(expr, SuspSub):
            return self._suspended(scope, expr)
        raise EnvironmentException("not a term: {!r}".format(expr))

    def check_term(self, scope, expr, fibration):
        """ Interprets expr and requires its section to lie over fibration """
        section = self.term(scope, expr)
        if section.fibration != fibration:
            raise UnsupportedFormerException(
                "the interpretation of {!r} does not lie strictly over the expected fibration".format(expr))
        return section

    def _extend(self, m, fibration, section):
        """ Extends the map m: X -> base of fibration by a section of fibration.substitute(m) """
        if section.fibration != fibration.substitute(m):
            raise UnsupportedFormerException("an argument does not lie strictly over the expected fibration")
        return compose(fibration.lift(m), section.functor)

    def _arguments(self, scope, telescope, args):
        """ :return: the map from scope.total to telescope.total given by the interpreted arguments """
        m = terminal_map(scope.total)
        for (_, fibration), arg in zip(telescope.entries, args):
            m = self._extend(m, fibration, self.term(scope, arg))
        return m

    def _constant(self, scope, expr):
        decl = self._signature.get(expr.name)
        if isinstance(decl, DefDecl):
            return self._definition(decl).substitute(terminal_map(scope.total))
        if not isinstance(decl, TermConstDecl):
            raise EnvironmentException("{} is not a term constant".format(expr.name))
        constant = self._env.constant(expr.name)
        m = self._arguments(scope, constant.telescope, expr.args)
        return SemSection(constant.result.substitute(m), constant.result.factor(m, compose(constant.section, m)))

    def _definition(self, decl):
        if decl.name not in self._definitions:
            empty = SemContext()
            self._definitions[decl.name] = self.check_term(empty, decl.body, self.type(empty, decl.type))
        return self._definitions[decl.name]

    def _application(self, scope, expr):
        fn = expr.fn
        while isinstance(fn, ConstApp) and not fn.args and isinstance(self._signature.get(fn.name), DefDecl):
            fn = self._signature.get(fn.name).body
        if not isinstance(fn, Lam):
            raise UnsupportedFormerException("only applications of lambda abstractions can be interpreted")
        domain = self.type(scope, fn.dom)
        arg = self.check_term(scope, expr.arg, domain)
        body = self.term(scope.extend(fn.var, domain), fn.body)
        return body.substitute(arg.functor)

    def _eliminate(self, scope, expr):
        A = self.type(scope, expr.type)
        with_w = scope.extend(expr.w, A)
        with_x = scope.extend(expr.x, A)
        with_xy = with_x.extend(expr.y, self.type(with_x, expr.type))
        with_id = with_xy.extend(expr.z, self.type(with_xy, Id(expr.type, Var(expr.x), Var(expr.y))))
        D = self.type(with_id, expr.family)

        w = Var(expr.w)
        R = self._extend_from(A.projection, with_w, with_id, len(scope), [w, w, Refl(expr.type, w)])
        base = self.check_term(with_w, expr.base, D.substitute(R))
        h = compose(D.lift(R), base.functor)
        problem = LiftingProblem(R, D.projection, h, identity_functor(with_id.total))
        filler = self._cache.filler((A, D, h), problem)

        sigma = self._extend_from(identity_functor(scope.total), scope, with_id, len(scope),
                                  [expr.left, expr.right, expr.path])
        return SemSection(D.substitute(sigma), D.factor(sigma, compose(filler, sigma)))

    def _extend_from(self, m, source, target, start, terms):
        """
        :param m: a map from source.total to the total of the first `start` entries of target
        :return: m extended by the interpretations in source of terms, one per remaining entry of target
        """
        for (_, fibration), expr in zip(target.entries[start:], terms):
            m = self._extend(m, fibration, self.term(source, expr))
        return m

    def _suspended(self, scope, expr):
        inner = scope
        m = identity_functor(scope.total)
        for var, expected in substitution_telescope(expr, self._signature):
            value = expr.mapping[var]
            if expected is not None and free_vars(expected) <= set(inner.names()):
                fibration = self.type(inner, expected)
                section = self.check_term(scope, value, fibration.substitute(m))
            else:
                section = self.term(scope, value)
                fibration = section.fibration.substitute(inner.to_prefix(len(scope)))
            inner = inner.extend(var, fibration)
            m = self._extend(m, fibration, section)
        return self.term(inner, expr.term).substitute(m)

    # Judgements

    def judgement(self, judgement):
        """ :return: an InterpretedGoal. Unsupported formers give the status "unsupported" """
        name = goal_name(judgement)
        logger = get_goal_logger(name)
        try:
            scope = self.context(judgement.context)
            if isinstance(judgement, IsType):
                fibration = self.type(scope, judgement.type)
                return InterpretedGoal(name, fibration.violation(), fibration.to_json())
            if isinstance(judgement, HasType):
                section = self.term(scope, judgement.term)
                problem = section.violation()
                if problem is None and section.fibration != self.type(scope, judgement.type):
                    problem = "the section does not lie over the interpretation of the type"
                return InterpretedGoal(name, problem, section.to_json())
            if isinstance(judgement, TypeEq):
                left, right = self.type(scope, judgement.left), self.type(scope, judgement.right)
                problem = None if left == right else "the two types have different interpretations"
                return InterpretedGoal(name, problem, left.to_json())
            if isinstance(judgement, TermEq):
                left, right = self.term(scope, judgement.left), self.term(scope, judgement.right)
                problem = None if left == right else "the two terms have different interpretations"
                return InterpretedGoal(name, problem, left.to_json())
            raise EnvironmentException("unknown judgement {!r}".format(judgement))
        except UnsupportedFormerException as e:
            logger.info("unsupported: %s", e)
            return InterpretedGoal(name, str(e), None, status="unsupported")
        except EnvironmentException:
            raise
        except PathcheckException as e:
            logger.error("interpretation failed: %s", e)
            return InterpretedGoal(name, str(e), None, status="error")


class InterpretedGoal(object):
    """ The outcome of interpreting one goal """

    def __init__(self, name, error, witness, status=None):
        self.name = name
        self.error = error
        self.witness = witness
        self.status = status if status is not None else ("ok" if error is None else "failed")

    @property
    def passed(self):
        return self.status == "ok"

    def to_json(self):
        data = OrderedDict([("name", self.name), ("status", self.status)])
        if self.witness is not None:
            data["witness"] = self.witness
        if self.error is not None:
            data["error"] = self.error
        return data


def interp_context(env, context):
    return Interpreter(env).context(context)


def interp_type(env, context, type_expr):
    interpreter = Interpreter(env)
    return interpreter.type(interpreter.context(context), type_expr)


def interp_term(env, context, term, type_expr=None):
    """ :return: the SemSection of term. When type_expr is given, the section must lie over its interpretation """
    interpreter = Interpreter(env)
    scope = interpreter.context(context)
    if type_expr is None:
        return interpreter.term(scope, term)
    return interpreter.check_term(scope, term, interpreter.type(scope, type_expr))


def interpret_program(env, goals, cache=None):
    """ :return: one InterpretedGoal per goal, in order, sharing one FillerCache """
    interpreter = Interpreter(env, cache)
    results = [interpreter.judgement(goal) for goal in goals]
    _logger.info("%d/%d goals interpreted (%s backend)", sum(1 for r in results if r.passed), len(results),
                 env.backend)
    return results
