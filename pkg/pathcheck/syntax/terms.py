# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Abstract syntax of types, terms, contexts, signatures and judgements """
from dataclasses import dataclass, field
from typing import Tuple

from pathcheck.common.exceptions import SignatureException


# Types

@dataclass(frozen=True)
class BaseApp(object):
    """ A declared type family applied to its arguments """
    name: str
    args: Tuple = ()


@dataclass(frozen=True)
class Pi(object):
    var: str
    dom: object
    cod: object


@dataclass(frozen=True)
class Sigma(object):
    var: str
    dom: object
    cod: object


@dataclass(frozen=True)
class Id(object):
    type: object
    left: object
    right: object


# Terms

@dataclass(frozen=True)
class Var(object):
    name: str


@dataclass(frozen=True)
class ConstApp(object):
    """ A declared term constant (or a definition, with no arguments) applied to its arguments """
    name: str
    args: Tuple = ()


@dataclass(frozen=True)
class Lam(object):
    var: str
    dom: object
    body: object


@dataclass(frozen=True)
class App(object):
    fn: object
    arg: object


@dataclass(frozen=True)
class Pair(object):
    first: object
    second: object
    annotation: object


@dataclass(frozen=True)
class Fst(object):
    term: object


@dataclass(frozen=True)
class Snd(object):
    term: object


@dataclass(frozen=True)
class Refl(object):
    type: object
    term: object


@dataclass(frozen=True)
class J(object):
    """
    J A [x y z => family] [w => base] left right path.
    `family` binds x, y and z, `base` binds w.
    """
    type: object
    x: str
    y: str
    z: str
    family: object
    w: str
    base: object
    left: object
    right: object
    path: object


@dataclass(frozen=True)
class SuspSub(object):
    """
    A substitution suspended on a J-rooted term. `subst` is a tuple of (variable, term) pairs, ordered by the first
    occurrence of the variable in `term`, with every variable free in `term`.
    """
    term: object
    subst: Tuple

    @property
    def mapping(self):
        return dict(self.subst)

    @property
    def variables(self):
        return tuple(v for v, _ in self.subst)


TYPE_NODES = (BaseApp, Pi, Sigma, Id)
TERM_NODES = (Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, SuspSub)


def is_type(expr):
    return isinstance(expr, TYPE_NODES)


def is_j_rooted(expr):
    """ True for J nodes, possibly under suspended substitutions """
    while isinstance(expr, SuspSub):
        expr = expr.term
    return isinstance(expr, J)


# Contexts and signatures

@dataclass(frozen=True)
class Context(object):
    """ An ordered list of (variable name, type) declarations """
    entries: Tuple = ()

    def extend(self, name, type_expr):
        return Context(self.entries + ((name, type_expr),))

    def concat(self, other):
        return Context(self.entries + tuple(other.entries))

    def lookup(self, name):
        """ :return: the type of the innermost declaration of name, or None """
        for var, type_expr in reversed(self.entries):
            if var == name:
                return type_expr
        return None

    def names(self):
        return [var for var, _ in self.entries]

    def prefix(self, length):
        return Context(self.entries[:length])

    def __contains__(self, name):
        return any(var == name for var, _ in self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class TypeFamilyDecl(object):
    name: str
    telescope: Context = Context()


@dataclass(frozen=True)
class TermConstDecl(object):
    name: str
    telescope: Context
    result: object


@dataclass(frozen=True)
class DefDecl(object):
    """ A closed definition, unfolded by the kernel """
    name: str
    type: object
    body: object


@dataclass(frozen=True)
class Signature(object):
    """ Ordered declarations. Each declaration may only refer to the ones before it """
    declarations: Tuple = ()
    _index: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        index = {}
        for pos, decl in enumerate(self.declarations):
            if decl.name in index:
                raise SignatureException("duplicate declaration of {}".format(decl.name))
            index[decl.name] = pos
        object.__setattr__(self, "_index", index)

    def declare(self, decl):
        """ :return: a new Signature with decl appended. Raises SignatureException on a duplicate name """
        if decl.name in self._index:
            raise SignatureException("duplicate declaration of {}".format(decl.name))
        return Signature(self.declarations + (decl,))

    def get(self, name):
        pos = self._index.get(name)
        return None if pos is None else self.declarations[pos]

    def position(self, name):
        return self._index.get(name)

    def prefix(self, length):
        return Signature(self.declarations[:length])

    def type_families(self):
        return [d for d in self.declarations if isinstance(d, TypeFamilyDecl)]

    def term_constants(self):
        return [d for d in self.declarations if isinstance(d, TermConstDecl)]

    def __contains__(self, name):
        return name in self._index

    def __iter__(self):
        return iter(self.declarations)

    def __len__(self):
        return len(self.declarations)


# Judgements

@dataclass(frozen=True)
class IsType(object):
    context: Context
    type: object
    line: int = field(default=0, compare=False)
    kind = "checktype"


@dataclass(frozen=True)
class HasType(object):
    context: Context
    term: object
    type: object
    line: int = field(default=0, compare=False)
    kind = "check"


@dataclass(frozen=True)
class TypeEq(object):
    context: Context
    left: object
    right: object
    line: int = field(default=0, compare=False)
    kind = "eqtype"


@dataclass(frozen=True)
class TermEq(object):
    context: Context
    left: object
    right: object
    type: object
    line: int = field(default=0, compare=False)
    kind = "eq"


def goal_name(judgement):
    """ Name of a goal in reports: kind@line """
    return "{}@{}".format(judgement.kind, judgement.line)


# Free variables and alpha-equivalence

def _iter_free(expr, bound):
    """ Yields the free variables of expr in traversal order, with repetitions """
    if isinstance(expr, Var):
        if expr.name not in bound:
            yield expr.name
    elif isinstance(expr, (ConstApp, BaseApp)):
        for arg in expr.args:
            yield from _iter_free(arg, bound)
    elif isinstance(expr, (Pi, Sigma)):
        yield from _iter_free(expr.dom, bound)
        yield from _iter_free(expr.cod, bound | {expr.var})
    elif isinstance(expr, Lam):
        yield from _iter_free(expr.dom, bound)
        yield from _iter_free(expr.body, bound | {expr.var})
    elif isinstance(expr, Id):
        yield from _iter_free(expr.type, bound)
        yield from _iter_free(expr.left, bound)
        yield from _iter_free(expr.right, bound)
    elif isinstance(expr, App):
        yield from _iter_free(expr.fn, bound)
        yield from _iter_free(expr.arg, bound)
    elif isinstance(expr, Pair):
        yield from _iter_free(expr.first, bound)
        yield from _iter_free(expr.second, bound)
        yield from _iter_free(expr.annotation, bound)
    elif isinstance(expr, (Fst, Snd)):
        yield from _iter_free(expr.term, bound)
    elif isinstance(expr, Refl):
        yield from _iter_free(expr.type, bound)
        yield from _iter_free(expr.term, bound)
    elif isinstance(expr, J):
        yield from _iter_free(expr.type, bound)
        yield from _iter_free(expr.family, bound | {expr.x, expr.y, expr.z})
        yield from _iter_free(expr.base, bound | {expr.w})
        yield from _iter_free(expr.left, bound)
        yield from _iter_free(expr.right, bound)
        yield from _iter_free(expr.path, bound)
    elif isinstance(expr, SuspSub):
        mapping = expr.mapping
        for var in _iter_free(expr.term, frozenset()):
            if var in mapping:
                yield from _iter_free(mapping[var], bound)
            elif var not in bound:
                yield var
    else:
        raise TypeError("not an expression: {!r}".format(expr))


def free_vars_ordered(expr):
    """ :return: the list of free variables of expr, in order of first occurrence """
    seen = []
    for var in _iter_free(expr, frozenset()):
        if var not in seen:
            seen.append(var)
    return seen


def free_vars(expr):
    return set(_iter_free(expr, frozenset()))


def _var_key(name, bound):
    for pos in range(len(bound) - 1, -1, -1):
        if bound[pos] == name:
            return "b", len(bound) - 1 - pos
    return "f", name


def alpha_key(expr, bound=()):
    """
    Locally nameless rendering of expr: bound variables become de Bruijn indices. Two expressions are
    alpha-equivalent iff their keys are equal. `bound` lists the enclosing binders, innermost last.
    """
    if isinstance(expr, Var):
        return _var_key(expr.name, bound)
    elif isinstance(expr, ConstApp):
        return "c", expr.name, tuple(alpha_key(a, bound) for a in expr.args)
    elif isinstance(expr, BaseApp):
        return "B", expr.name, tuple(alpha_key(a, bound) for a in expr.args)
    elif isinstance(expr, Pi):
        return "Pi", alpha_key(expr.dom, bound), alpha_key(expr.cod, bound + (expr.var,))
    elif isinstance(expr, Sigma):
        return "Sig", alpha_key(expr.dom, bound), alpha_key(expr.cod, bound + (expr.var,))
    elif isinstance(expr, Lam):
        return "lam", alpha_key(expr.dom, bound), alpha_key(expr.body, bound + (expr.var,))
    elif isinstance(expr, Id):
        return "Id", alpha_key(expr.type, bound), alpha_key(expr.left, bound), alpha_key(expr.right, bound)
    elif isinstance(expr, App):
        return "app", alpha_key(expr.fn, bound), alpha_key(expr.arg, bound)
    elif isinstance(expr, Pair):
        return "pair", alpha_key(expr.first, bound), alpha_key(expr.second, bound), \
            alpha_key(expr.annotation, bound)
    elif isinstance(expr, Fst):
        return "fst", alpha_key(expr.term, bound)
    elif isinstance(expr, Snd):
        return "snd", alpha_key(expr.term, bound)
    elif isinstance(expr, Refl):
        return "refl", alpha_key(expr.type, bound), alpha_key(expr.term, bound)
    elif isinstance(expr, J):
        return ("J", alpha_key(expr.type, bound),
                alpha_key(expr.family, bound + (expr.x, expr.y, expr.z)),
                alpha_key(expr.base, bound + (expr.w,)),
                alpha_key(expr.left, bound), alpha_key(expr.right, bound), alpha_key(expr.path, bound))
    elif isinstance(expr, SuspSub):
        # the substituted variables are binders over the wrapped term
        return ("sub", alpha_key(expr.term, bound + expr.variables),
                tuple(alpha_key(c, bound) for _, c in expr.subst))
    raise TypeError("not an expression: {!r}".format(expr))


def alpha_eq(e1, e2):
    """ Equality up to renaming of bound variables """
    return alpha_key(e1) == alpha_key(e2)


def expr_size(expr):
    """ Number of nodes of expr, used to pick small representatives """
    key = alpha_key(expr)
    stack, count = [key], 0
    while stack:
        item = stack.pop()
        if isinstance(item, tuple):
            count += 1
            stack.extend(item)
    return count
