# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Printer producing surface syntax that the parser reads back """
from pathcheck.syntax.substitution import fresh_name, rename
from pathcheck.syntax.terms import BaseApp, Pi, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, \
    SuspSub, TypeFamilyDecl, TermConstDecl, DefDecl, IsType, HasType, TypeEq, TermEq, Context, free_vars


def pretty(expr):
    """ Surface syntax of a type, a term, a judgement, a declaration or a context """
    if isinstance(expr, (BaseApp, Pi, Sigma, Id)):
        return _type(expr)
    if isinstance(expr, (IsType, HasType, TypeEq, TermEq)):
        return _judgement(expr)
    if isinstance(expr, (TypeFamilyDecl, TermConstDecl, DefDecl)):
        return _declaration(expr)
    if isinstance(expr, Context):
        return _telescope(expr)
    return _term(expr)


def print_signature(signature):
    return "\n".join(_declaration(decl) for decl in signature)


def print_program(signature, goals):
    lines = [_declaration(decl) for decl in signature] + [_judgement(goal) for goal in goals]
    return "\n".join(lines) + "\n"


def _telescope(context):
    return " ".join("({} : {})".format(name, _type(type_expr)) for name, type_expr in context)


def _declaration(decl):
    if isinstance(decl, DefDecl):
        return "def {} : {} := {}".format(decl.name, _type(decl.type), _term(decl.body))
    tele = _telescope(decl.telescope)
    result = "Type" if isinstance(decl, TypeFamilyDecl) else _type(decl.result)
    return "assume {} : {}".format(decl.name, (tele + " " + result) if tele else result)


def _judgement(goal):
    if isinstance(goal, IsType):
        text = "checktype {}".format(_type(goal.type))
    elif isinstance(goal, HasType):
        text = "check {} : {}".format(_term(goal.term), _type(goal.type))
    elif isinstance(goal, TypeEq):
        text = "eqtype {} = {}".format(_type(goal.left), _type(goal.right))
    else:
        text = "eq {} = {} : {}".format(_term(goal.left), _term(goal.right), _type(goal.type))
    if len(goal.context):
        text += " given " + _telescope(goal.context)
    return text


def _type(expr):
    if isinstance(expr, BaseApp):
        return " ".join([expr.name] + [_aterm(arg) for arg in expr.args])
    if isinstance(expr, Pi):
        return "Pi ({} : {}) {}".format(expr.var, _type(expr.dom), _type(expr.cod))
    if isinstance(expr, Sigma):
        return "Sig ({} : {}) {}".format(expr.var, _type(expr.dom), _type(expr.cod))
    if isinstance(expr, Id):
        return "Id {} {} {}".format(_atype(expr.type), _aterm(expr.left), _aterm(expr.right))
    raise TypeError("not a type: {!r}".format(expr))


def _atype(expr):
    if isinstance(expr, BaseApp) and not expr.args:
        return expr.name
    return "(" + _type(expr) + ")"


def _aterm(expr):
    if isinstance(expr, Var) or (isinstance(expr, ConstApp) and not expr.args):
        return _term(expr)
    return "(" + _term(expr) + ")"


def _term(expr):
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, ConstApp):
        return " ".join([expr.name] + [_aterm(arg) for arg in expr.args])
    if isinstance(expr, Lam):
        return "lam ({} : {}) {}".format(expr.var, _type(expr.dom), _term(expr.body))
    if isinstance(expr, App):
        return "app {} {}".format(_aterm(expr.fn), _aterm(expr.arg))
    if isinstance(expr, Pair):
        return "pair {} {} as {}".format(_aterm(expr.first), _aterm(expr.second), _type(expr.annotation))
    if isinstance(expr, Fst):
        return "fst " + _aterm(expr.term)
    if isinstance(expr, Snd):
        return "snd " + _aterm(expr.term)
    if isinstance(expr, Refl):
        return "refl {} {}".format(_atype(expr.type), _aterm(expr.term))
    if isinstance(expr, J):
        return "J {} [{} {} {} => {}] [{} => {}] {} {} {}".format(
            _atype(expr.type), expr.x, expr.y, expr.z, _type(expr.family), expr.w, _term(expr.base),
            _aterm(expr.left), _aterm(expr.right), _aterm(expr.path))
    if isinstance(expr, SuspSub):
        return _suspended(expr)
    raise TypeError("not a term: {!r}".format(expr))


def _suspended(expr):
    """
    e[c1/v1][c2/v2] reads as a sequence of substitutions. When some v_j occurs in an earlier c_i, the variables
    are renamed apart first so that the sequence means the simultaneous substitution.
    """
    term, entries = expr.term, list(expr.subst)
    clash = any(entries[j][0] in free_vars(entries[i][1])
                for i in range(len(entries)) for j in range(i + 1, len(entries)))
    if clash:
        avoid = free_vars(term) | {v for v, _ in entries}
        for _, value in entries:
            avoid |= free_vars(value)
        for pos, (var, value) in enumerate(entries):
            new = fresh_name(var + "_s", avoid)
            avoid.add(new)
            term = rename(term, var, new)
            entries[pos] = (new, value)
    return "(" + _term(term) + ")" + "".join("[{}/{}]".format(_term(value), var) for var, value in entries)
