# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Capture-avoiding substitution.

    Substitution is pushed through every constructor, Id and refl included, so that their compatibility with
    substitution holds as a syntactic identity. On J-rooted terms it is suspended instead: the result is a SuspSub
    node, and substituting into a SuspSub composes the two substitutions.
"""
import re

from pathcheck.syntax.terms import BaseApp, Pi, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, \
    SuspSub, free_vars, free_vars_ordered

SUSPEND = "suspend"
PUSH = "push"
RENAME = "rename"


def fresh_name(base, avoid):
    """ :return: base itself if it is not in avoid, otherwise base_N for the smallest N not in avoid """
    if base not in avoid:
        return base
    root = re.sub(r"_\d+$", "", base)
    count = 1
    while "{}_{}".format(root, count) in avoid:
        count += 1
    return "{}_{}".format(root, count)


def substitute(expr, subst):
    """
    Simultaneous capture-avoiding substitution of the variables of the dict `subst` in expr.
    J-rooted subterms receive a suspended substitution.
    """
    subst = _clean(subst)
    if not subst:
        return expr
    return _subst(expr, subst, SUSPEND)


def push_substitution(expr, subst):
    """ Like substitute, but pushes through J components too and resolves every SuspSub it meets """
    subst = _clean(subst)
    return _subst(expr, subst, PUSH)


def rename(expr, old, new):
    """ Renames the free variable `old` into `new`. An alpha operation: suspended substitutions are kept """
    if old == new:
        return expr
    return _subst(expr, {old: Var(new)}, RENAME)


def _clean(subst):
    return {var: term for var, term in subst.items() if not (isinstance(term, Var) and term.name == var)}


def _under(binders, body, subst, mode):
    """ Substitutes under `binders`, renaming those that would capture a variable of the replacement terms """
    inner = {k: v for k, v in subst.items() if k not in binders}
    if not inner:
        return list(binders), body
    body_fv = free_vars(body)
    inner = {k: v for k, v in inner.items() if k in body_fv}
    if not inner:
        return list(binders), body
    danger = set()
    for term in inner.values():
        danger |= free_vars(term)
    binders = list(binders)
    for pos, var in enumerate(binders):
        if var in danger:
            avoid = danger | body_fv | set(inner) | set(binders)
            new = fresh_name(var, avoid)
            body = rename(body, var, new)
            body_fv = free_vars(body)
            binders[pos] = new
    return binders, _subst(body, inner, mode)


def _subst(expr, subst, mode):
    if isinstance(expr, Var):
        return subst.get(expr.name, expr)
    elif isinstance(expr, ConstApp):
        return ConstApp(expr.name, tuple(_subst(a, subst, mode) for a in expr.args))
    elif isinstance(expr, BaseApp):
        return BaseApp(expr.name, tuple(_subst(a, subst, mode) for a in expr.args))
    elif isinstance(expr, (Pi, Sigma, Lam)):
        dom = _subst(expr.dom, subst, mode)
        body = expr.body if isinstance(expr, Lam) else expr.cod
        (var,), body = _under([expr.var], body, subst, mode)
        return type(expr)(var, dom, body)
    elif isinstance(expr, Id):
        return Id(_subst(expr.type, subst, mode), _subst(expr.left, subst, mode), _subst(expr.right, subst, mode))
    elif isinstance(expr, App):
        return App(_subst(expr.fn, subst, mode), _subst(expr.arg, subst, mode))
    elif isinstance(expr, Pair):
        return Pair(_subst(expr.first, subst, mode), _subst(expr.second, subst, mode),
                    _subst(expr.annotation, subst, mode))
    elif isinstance(expr, Fst):
        return Fst(_subst(expr.term, subst, mode))
    elif isinstance(expr, Snd):
        return Snd(_subst(expr.term, subst, mode))
    elif isinstance(expr, Refl):
        return Refl(_subst(expr.type, subst, mode), _subst(expr.term, subst, mode))
    elif isinstance(expr, J):
        if mode == SUSPEND:
            return _suspend(expr, subst)
        return _push_j(expr, subst, mode)
    elif isinstance(expr, SuspSub):
        if mode == SUSPEND:
            return _suspend(expr.term, _merge(expr, subst))
        elif mode == PUSH:
            return _subst(expr.term, _clean(_merge(expr, subst)), PUSH)
        return _rename_susp(expr, subst)
    raise TypeError("not an expression: {!r}".format(expr))


def _suspend(j_term, subst):
    """ SuspSub of j_term restricted to its free variables, in order of first occurrence """
    entries = tuple((var, subst[var]) for var in free_vars_ordered(j_term) if var in subst)
    entries = tuple((var, term) for var, term in entries if not (isinstance(term, Var) and term.name == var))
    if not entries:
        return j_term
    return SuspSub(j_term, entries)


def _merge(susp, subst):
    """ The substitution equivalent to applying susp.subst and then subst, on the variables of susp.term """
    inner = susp.mapping
    merged = {}
    for var in free_vars_ordered(susp.term):
        if var in inner:
            merged[var] = substitute(inner[var], subst) if subst else inner[var]
        elif var in subst:
            merged[var] = subst[var]
    return merged


def _push_j(expr, subst, mode):
    (x, y, z), family = _under([expr.x, expr.y, expr.z], expr.family, subst, mode)
    (w,), base = _under([expr.w], expr.base, subst, mode)
    return J(_subst(expr.type, subst, mode), x, y, z, family, w, base,
             _subst(expr.left, subst, mode), _subst(expr.right, subst, mode), _subst(expr.path, subst, mode))


def _rename_susp(expr, subst):
    keys = expr.variables
    entries = [(var, _subst(term, subst, RENAME)) for var, term in expr.subst]
    term = expr.term
    inner = {k: v for k, v in subst.items() if k not in keys}
    danger = set()
    for value in inner.values():
        danger |= free_vars(value)
    for pos, (var, value) in enumerate(entries):
        if var in danger:
            new = fresh_name(var, danger | free_vars(term) | set(keys) | set(inner))
            term = rename(term, var, new)
            entries[pos] = (new, value)
    if inner:
        term = _subst(term, inner, RENAME)
    return SuspSub(term, tuple(entries))


def substitution_telescope(susp, signature=None):
    """
    Reads the suspended substitution of susp as a telescope.

    :return: the list of (var, expected type) in the order of susp.subst. The expected type of a variable comes from
             its first occurrence in a checking position of the wrapped term (an endpoint or the path of J, the term
             of refl, an argument of a constant, a component of an annotated pair, the argument of a lambda) and may
             mention the context and the variables before it. It is None when no such occurrence exists.
    """
    order = list(susp.variables)
    found = {}
    _requirements(susp.term, None, frozenset(), order, found, signature)
    telescope = []
    for pos, var in enumerate(order):
        expected = found.get(var)
        if expected is not None and free_vars(expected) & set(order[pos:]):
            expected = None
        telescope.append((var, expected))
    return telescope


def _requirements(expr, expected, bound, wanted, found, signature):
    """ Records in found the first expected type of each variable of wanted met in expr outside of bound """
    def visit(sub, sub_expected=None, binders=()):
        _requirements(sub, sub_expected, bound | set(binders), wanted, found, signature)

    if isinstance(expr, Var):
        if expr.name in wanted and expr.name not in bound and expr.name not in found and expected is not None \
                and not free_vars(expected) & bound:
            found[expr.name] = expected
    elif isinstance(expr, (ConstApp, BaseApp)):
        decl = signature.get(expr.name) if signature is not None else None
        telescope = getattr(decl, "telescope", None)
        if telescope is None or len(telescope) != len(expr.args):
            for arg in expr.args:
                visit(arg)
            return
        subst = {}
        for (var, var_type), arg in zip(telescope, expr.args):
            visit(arg, substitute(var_type, subst))
            subst[var] = arg
    elif isinstance(expr, (Pi, Sigma)):
        visit(expr.dom)
        visit(expr.cod, binders=[expr.var])
    elif isinstance(expr, Lam):
        visit(expr.dom)
        visit(expr.body, binders=[expr.var])
    elif isinstance(expr, Id):
        visit(expr.type)
        visit(expr.left, expr.type)
        visit(expr.right, expr.type)
    elif isinstance(expr, App):
        visit(expr.fn)
        visit(expr.arg, expr.fn.dom if isinstance(expr.fn, Lam) else None)
    elif isinstance(expr, Pair):
        visit(expr.annotation)
        if isinstance(expr.annotation, Sigma):
            visit(expr.first, expr.annotation.dom)
            visit(expr.second, substitute(expr.annotation.cod, {expr.annotation.var: expr.first}))
        else:
            visit(expr.first)
            visit(expr.second)
    elif isinstance(expr, (Fst, Snd)):
        visit(expr.term)
    elif isinstance(expr, Refl):
        visit(expr.type)
        visit(expr.term, expr.type)
    elif isinstance(expr, J):
        visit(expr.type)
        visit(expr.family, binders=[expr.x, expr.y, expr.z])
        visit(expr.base, binders=[expr.w])
        visit(expr.left, expr.type)
        visit(expr.right, expr.type)
        visit(expr.path, Id(expr.type, expr.left, expr.right))
    elif isinstance(expr, SuspSub):
        for _, value in expr.subst:
            visit(value)
        visit(expr.term, binders=expr.variables)
