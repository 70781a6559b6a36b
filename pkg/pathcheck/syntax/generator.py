# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Seeded generator of well-scoped (not necessarily well-typed) expressions over a small fixed signature.
    Used by the round-trip tests and by the kernel termination smoke test.
"""
import random

from pathcheck.syntax.parser import parse
from pathcheck.syntax.substitution import substitute
from pathcheck.syntax.terms import BaseApp, Pi, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, \
    Context, HasType, TermEq, IsType

GENERATOR_SIGNATURE_SOURCE = """
assume A : Type
assume B : (x : A) Type
assume a0 : A
assume a1 : A
assume f : (x : A) A
assume b0 : B a0
"""

BINDER_NAMES = ["x", "y", "z", "w", "u"]


def generator_signature():
    return parse(GENERATOR_SIGNATURE_SOURCE)[0]


class ExprGenerator(object):
    """ Random types and terms of bounded depth, with free variables among a given scope """

    def __init__(self, seed=0, max_depth=4):
        self._rng = random.Random(seed)
        self._max_depth = max_depth

    def context(self):
        """ A context declaring p : Id A a0 a1 and some variables of type A """
        entries = [("p", Id(BaseApp("A"), ConstApp("a0"), ConstApp("a1")))]
        entries += [(name, BaseApp("A")) for name in ["c", "d"][:self._rng.randint(0, 2)]]
        return Context(tuple(entries))

    def type(self, scope, depth=0):
        rng = self._rng
        choice = rng.randrange(5) if depth < self._max_depth else rng.randrange(2)
        if choice == 0:
            return BaseApp("A")
        if choice == 1:
            return BaseApp("B", (self.term(scope, depth + 1),))
        if choice == 2:
            var = rng.choice(BINDER_NAMES)
            return Pi(var, self.type(scope, depth + 1), self.type(scope + [var], depth + 1))
        if choice == 3:
            var = rng.choice(BINDER_NAMES)
            return Sigma(var, self.type(scope, depth + 1), self.type(scope + [var], depth + 1))
        return Id(self.type(scope, depth + 1), self.term(scope, depth + 1), self.term(scope, depth + 1))

    def term(self, scope, depth=0):
        rng = self._rng
        if depth >= self._max_depth:
            if scope and rng.random() < 0.6:
                return Var(rng.choice(scope))
            return ConstApp(rng.choice(["a0", "a1"]))
        choice = rng.randrange(11)
        if choice == 0 and scope:
            return Var(rng.choice(scope))
        if choice <= 1:
            return ConstApp("f", (self.term(scope, depth + 1),))
        if choice == 2:
            var = rng.choice(BINDER_NAMES)
            return Lam(var, self.type(scope, depth + 1), self.term(scope + [var], depth + 1))
        if choice == 3:
            return App(self.term(scope, depth + 1), self.term(scope, depth + 1))
        if choice == 4:
            var = rng.choice(BINDER_NAMES)
            annotation = Sigma(var, BaseApp("A"), self.type(scope + [var], depth + 1))
            return Pair(self.term(scope, depth + 1), self.term(scope, depth + 1), annotation)
        if choice == 5:
            return Fst(self.term(scope, depth + 1))
        if choice == 6:
            return Snd(self.term(scope, depth + 1))
        if choice == 7:
            return Refl(self.type(scope, depth + 1), self.term(scope, depth + 1))
        if choice == 8:
            return self.j_term(scope, depth)
        if choice == 9:
            # a suspended substitution: J over a fresh variable, instantiated
            var = "v" if "v" not in scope else "v'"
            j_term = self.j_term(scope + [var], depth, left=Var(var))
            return substitute(j_term, {var: self.term(scope, depth + 1)})
        return ConstApp(rng.choice(["a0", "a1"]))

    def j_term(self, scope, depth, left=None):
        rng = self._rng
        x, y, z = rng.sample(BINDER_NAMES, 3)
        w = rng.choice(BINDER_NAMES)
        return J(self.type(scope, depth + 1), x, y, z, self.type(scope + [x, y, z], depth + 1), w,
                 self.term(scope + [w], depth + 1),
                 left if left is not None else self.term(scope, depth + 1),
                 self.term(scope, depth + 1), self.term(scope, depth + 1))

    def goal(self, line=0):
        """ A random judgement, mostly built from the well-typed templates the kernel accepts """
        context = self.context()
        scope = context.names()
        kind = self._rng.randrange(3)
        if kind == 0:
            return IsType(context, self.type(scope), line)
        if kind == 1:
            return HasType(context, self.term(scope), self.type(scope), line)
        return TermEq(context, self.term(scope), self.term(scope), self.type(scope), line)
