# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Directed reduction to normal form: beta, projections, J on refl, unfolding of definitions.
    A suspended substitution on a J-term is a normal form, unless strict_j is set, in which case it is pushed
    inside the J components.
"""
from pathcheck.common.exceptions import NormalizationLimitException
from pathcheck.common.log import get_logger
from pathcheck.syntax.substitution import substitute, push_substitution
from pathcheck.syntax.terms import BaseApp, Pi, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, \
    SuspSub, DefDecl, alpha_key, free_vars

DEFAULT_MAX_REDUCTION_STEPS = 100000

_logger = get_logger("kernel.reduction")


class Normalizer(object):
    """ Normalizes types and terms over a signature. `on_rule` is called with the name of each rule fired """

    def __init__(self, signature, strict_j=False, max_steps=DEFAULT_MAX_REDUCTION_STEPS, on_rule=None):
        self._signature = signature
        self._strict_j = strict_j
        self._max_steps = max_steps
        self._on_rule = on_rule
        self._steps = 0

    def normalize(self, expr):
        self._steps = 0
        result = self._nf(expr)
        if self._steps:
            _logger.debug("normalized in %d steps", self._steps)
        return result

    def _step(self, rule):
        self._steps += 1
        if self._steps > self._max_steps:
            raise NormalizationLimitException("reduction exceeded {} steps".format(self._max_steps))
        if self._on_rule is not None:
            self._on_rule(rule)

    def _substitute(self, expr, subst):
        if self._on_rule is not None:
            for rule in beck_chevalley_rules(expr, subst):
                self._on_rule(rule)
        return substitute(expr, subst)

    def _nf(self, expr):
        if isinstance(expr, Var):
            return expr
        if isinstance(expr, ConstApp):
            decl = self._signature.get(expr.name)
            if isinstance(decl, DefDecl) and not expr.args:
                self._step("delta")
                return self._nf(decl.body)
            return ConstApp(expr.name, tuple(self._nf(a) for a in expr.args))
        if isinstance(expr, BaseApp):
            return BaseApp(expr.name, tuple(self._nf(a) for a in expr.args))
        if isinstance(expr, (Pi, Sigma)):
            return type(expr)(expr.var, self._nf(expr.dom), self._nf(expr.cod))
        if isinstance(expr, Lam):
            return Lam(expr.var, self._nf(expr.dom), self._nf(expr.body))
        if isinstance(expr, Id):
            return Id(self._nf(expr.type), self._nf(expr.left), self._nf(expr.right))
        if isinstance(expr, App):
            fn = self._nf(expr.fn)
            arg = self._nf(expr.arg)
            if isinstance(fn, Lam):
                self._step("Π conv.")
                return self._nf(self._substitute(fn.body, {fn.var: arg}))
            return App(fn, arg)
        if isinstance(expr, Pair):
            return Pair(self._nf(expr.first), self._nf(expr.second), self._nf(expr.annotation))
        if isinstance(expr, (Fst, Snd)):
            term = self._nf(expr.term)
            if isinstance(term, Pair):
                self._step("Σ conv.")
                return term.first if isinstance(expr, Fst) else term.second
            return type(expr)(term)
        if isinstance(expr, Refl):
            return Refl(self._nf(expr.type), self._nf(expr.term))
        if isinstance(expr, J):
            path = self._nf(expr.path)
            if isinstance(path, Refl):
                self._step("Id conv.")
                return self._nf(self._substitute(expr.base, {expr.w: path.term}))
            return J(self._nf(expr.type), expr.x, expr.y, expr.z, self._nf(expr.family), expr.w,
                     self._nf(expr.base), self._nf(expr.left), self._nf(expr.right), path)
        if isinstance(expr, SuspSub):
            if self._strict_j:
                self._step("subst")
                return self._nf(push_substitution(expr.term, expr.mapping))
            inner = self._nf(expr.term)
            values = {var: self._nf(value) for var, value in expr.subst}
            result = substitute(inner, values)
            if isinstance(result, SuspSub) and result.term == inner:
                return result
            if result is inner:
                return inner
            return self._nf(result)
        raise TypeError("not an expression: {!r}".format(expr))


def beck_chevalley_rules(expr, subst):
    """ :return: the names of the substitution rules for Id and refl used when applying subst to expr """
    keys = set(subst)
    rules = set()
    stack = [expr]
    while stack and len(rules) < 2:
        node = stack.pop()
        if isinstance(node, (Id, Refl)) and free_vars(node) & keys:
            rules.add("Id B.-C." if isinstance(node, Id) else "r B.-C.")
        stack.extend(_children(node))
    return sorted(rules)


def _children(expr):
    if isinstance(expr, (ConstApp, BaseApp)):
        return list(expr.args)
    if isinstance(expr, (Pi, Sigma)):
        return [expr.dom, expr.cod]
    if isinstance(expr, Lam):
        return [expr.dom, expr.body]
    if isinstance(expr, Id):
        return [expr.type, expr.left, expr.right]
    if isinstance(expr, App):
        return [expr.fn, expr.arg]
    if isinstance(expr, Pair):
        return [expr.first, expr.second, expr.annotation]
    if isinstance(expr, (Fst, Snd)):
        return [expr.term]
    if isinstance(expr, Refl):
        return [expr.type, expr.term]
    if isinstance(expr, SuspSub):
        return [value for _, value in expr.subst]
    return []


def rewrite_subterms(expr, replace, bound=()):
    """
    Rebuilds expr top-down: for each subterm s (with the enclosing binders `bound`), replace(s, bound) returns a
    replacement or None to descend into s. J-terms and suspended substitutions are replaced as a whole or kept.
    """
    new = replace(expr, bound)
    if new is not None:
        return new

    def rec(sub, extra=()):
        return rewrite_subterms(sub, replace, bound + tuple(extra))

    if isinstance(expr, ConstApp):
        return ConstApp(expr.name, tuple(rec(a) for a in expr.args))
    if isinstance(expr, BaseApp):
        return BaseApp(expr.name, tuple(rec(a) for a in expr.args))
    if isinstance(expr, (Pi, Sigma)):
        return type(expr)(expr.var, rec(expr.dom), rec(expr.cod, (expr.var,)))
    if isinstance(expr, Lam):
        return Lam(expr.var, rec(expr.dom), rec(expr.body, (expr.var,)))
    if isinstance(expr, Id):
        return Id(rec(expr.type), rec(expr.left), rec(expr.right))
    if isinstance(expr, App):
        return App(rec(expr.fn), rec(expr.arg))
    if isinstance(expr, Pair):
        return Pair(rec(expr.first), rec(expr.second), rec(expr.annotation))
    if isinstance(expr, (Fst, Snd)):
        return type(expr)(rec(expr.term))
    if isinstance(expr, Refl):
        return Refl(rec(expr.type), rec(expr.term))
    if isinstance(expr, J):
        return J(rec(expr.type), expr.x, expr.y, expr.z, rec(expr.family, (expr.x, expr.y, expr.z)), expr.w,
                 rec(expr.base, (expr.w,)), rec(expr.left), rec(expr.right), rec(expr.path))
    return expr


def key_under(expr, bound):
    """ alpha_key of a subterm, or None when it mentions one of the enclosing binders """
    if free_vars(expr) & set(bound):
        return None
    return alpha_key(expr)
