# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    The kernel: checks the four forms of judgement.

    Every term former of the theory carries enough annotations for its type to be inferred, so checking a term
    against a type is inference followed by a conversion check. Conversion is decided by comparing normal forms
    (see pathcheck.kernel.reduction), modulo the equations given by identity proofs found in the context or the
    signature when the kernel runs in extensional mode.
"""
from pathcheck.common.exceptions import KernelException, NormalizationLimitException
from pathcheck.common.log import get_logger, get_goal_logger
from pathcheck.kernel.reduction import Normalizer, DEFAULT_MAX_REDUCTION_STEPS, beck_chevalley_rules, \
    rewrite_subterms, key_under
from pathcheck.kernel.verdict import KernelMode, Verdict, TraceStep
from pathcheck.syntax.printer import pretty
from pathcheck.syntax.substitution import substitute, substitution_telescope, rename, fresh_name
from pathcheck.syntax.terms import BaseApp, Pi, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, \
    SuspSub, Context, TypeFamilyDecl, TermConstDecl, DefDecl, IsType, HasType, TypeEq, TermEq, alpha_key, \
    free_vars, expr_size, goal_name

_logger = get_logger("kernel")

# rounds of the extensional rewriting before giving up
MAX_EXTENSIONAL_ROUNDS = 64


class _Derivation(object):
    """ Collects the trace of a derivation """

    def __init__(self):
        self.steps = []

    def add(self, rule, judgement):
        self.steps.append(TraceStep(rule, judgement))


class Kernel(object):
    """ A checker over a fixed signature """

    def __init__(self, signature, mode=None, parameterized_j=True, max_reduction_steps=DEFAULT_MAX_REDUCTION_STEPS):
        """
        :param signature: the Signature of declared constants
        :param mode: a KernelMode, intensional and non-strict by default
        :param parameterized_j: check "Id elim." in its open form followed by a substitution
        :param max_reduction_steps: fuel of a single normalization
        """
        self._signature = signature
        self._mode = mode if mode is not None else KernelMode()
        self._parameterized_j = parameterized_j
        self._max_steps = max_reduction_steps

    def get_signature(self):
        return self._signature

    def get_mode(self):
        return self._mode

    # Entry points

    def validate_signature(self):
        """ Checks every declaration against the declarations before it """
        steps = []
        for pos, decl in enumerate(self._signature):
            kernel = Kernel(self._signature.prefix(pos), self._mode, self._parameterized_j, self._max_steps)
            d = _Derivation()
            try:
                if isinstance(decl, DefDecl):
                    kernel._check_type(Context(), decl.type, d)
                    kernel._check(Context(), decl.body, decl.type, d)
                else:
                    kernel._check_context(decl.telescope, d)
                    if isinstance(decl, TermConstDecl):
                        kernel._check_type(decl.telescope, decl.result, d)
            except (KernelException, NormalizationLimitException) as e:
                return Verdict(False, tuple(steps + d.steps), "declaration {}: {}".format(decl.name, e))
            steps += d.steps
        return Verdict(True, tuple(steps))

    def check_type(self, context, type_expr):
        return self._run(lambda d: self._check_type(context, type_expr, d))

    def check_term(self, context, term, type_expr):
        return self._run(lambda d: self._check(context, term, type_expr, d))

    def def_equal(self, context, left, right, type_expr=None):
        """ :return: True iff left and right are definitionally equal (both are assumed to check against type_expr) """
        try:
            return self._convertible(context, left, right, _Derivation())
        except NormalizationLimitException:
            return False

    def check_judgement(self, judgement):
        def run(d):
            self._check_context(judgement.context, d)
            ctx = judgement.context
            if isinstance(judgement, IsType):
                self._check_type(ctx, judgement.type, d)
            elif isinstance(judgement, HasType):
                self._check_type(ctx, judgement.type, d)
                self._check(ctx, judgement.term, judgement.type, d)
            elif isinstance(judgement, TypeEq):
                self._check_type(ctx, judgement.left, d)
                self._check_type(ctx, judgement.right, d)
                self._require_convertible(ctx, judgement.left, judgement.right, judgement, d)
            elif isinstance(judgement, TermEq):
                self._check_type(ctx, judgement.type, d)
                self._check(ctx, judgement.left, judgement.type, d)
                self._check(ctx, judgement.right, judgement.type, d)
                self._require_convertible(ctx, judgement.left, judgement.right, judgement, d)
            else:
                raise KernelException("ctx", "not a judgement: {!r}".format(judgement))

        verdict = self._run(run)
        logger = get_goal_logger(goal_name(judgement))
        if verdict.accepted:
            logger.debug("accepted with %d steps", len(verdict.trace))
        else:
            logger.debug("rejected: %s", verdict.reason)
        return verdict

    def check_program(self, goals):
        """ :return: one Verdict per goal, in order """
        verdicts = [self.check_judgement(goal) for goal in goals]
        _logger.info("%d/%d goals accepted (%s)", sum(1 for v in verdicts if v.accepted), len(verdicts),
                     self._mode.describe())
        return verdicts

    def infer(self, context, term):
        """ :return: the inferred type of term. Raises KernelException """
        return self._infer(context, term, _Derivation())

    def normalize(self, expr):
        return self._normalizer().normalize(expr)

    def _run(self, fn):
        d = _Derivation()
        try:
            fn(d)
        except (KernelException, NormalizationLimitException) as e:
            return Verdict(False, tuple(d.steps), str(e))
        return Verdict(True, tuple(d.steps))

    def _normalizer(self, on_rule=None):
        return Normalizer(self._signature, self._mode.strict_j, self._max_steps, on_rule)

    # Contexts and types

    def _check_context(self, context, d):
        seen = set()
        for pos, (name, type_expr) in enumerate(context):
            if name in seen:
                raise KernelException("ctx", "variable {} declared twice".format(name))
            seen.add(name)
            prefix = context.prefix(pos)
            self._check_type(prefix, type_expr, d)
            d.add("ctx", IsType(prefix, type_expr))

    def _fresh_binder(self, context, var, body):
        """ Renames the binder var of body when it is already declared in context """
        if var not in context:
            return var, body
        new = fresh_name(var, set(context.names()) | free_vars(body))
        return new, rename(body, var, new)

    def _check_type(self, ctx, type_expr, d):
        if isinstance(type_expr, BaseApp):
            decl = self._signature.get(type_expr.name)
            if not isinstance(decl, TypeFamilyDecl):
                raise KernelException("const", "{} is not a declared type family".format(type_expr.name))
            self._check_args(ctx, decl, type_expr.args, d)
            d.add("const", IsType(ctx, type_expr))
        elif isinstance(type_expr, (Pi, Sigma)):
            self._check_type(ctx, type_expr.dom, d)
            var, cod = self._fresh_binder(ctx, type_expr.var, type_expr.cod)
            self._check_type(ctx.extend(var, type_expr.dom), cod, d)
            d.add("Π form." if isinstance(type_expr, Pi) else "Σ form.", IsType(ctx, type_expr))
        elif isinstance(type_expr, Id):
            self._check_type(ctx, type_expr.type, d)
            self._check(ctx, type_expr.left, type_expr.type, d)
            self._check(ctx, type_expr.right, type_expr.type, d)
            d.add("Id form.", IsType(ctx, type_expr))
        else:
            raise KernelException("ctx", "not a type: {}".format(pretty(type_expr)))

    def _check_args(self, ctx, decl, args, d):
        """ Checks args against the telescope of decl. :return: the substitution telescope -> args """
        if len(args) != len(decl.telescope):
            raise KernelException("const", "{} expects {} arguments, got {}".format(
                decl.name, len(decl.telescope), len(args)))
        subst = {}
        for (var, var_type), arg in zip(decl.telescope, args):
            self._check(ctx, arg, self._substitute(var_type, subst, d, ctx), d)
            subst[var] = arg
        return subst

    def _substitute(self, expr, subst, d, ctx):
        for rule in beck_chevalley_rules(expr, subst):
            d.add(rule, IsType(ctx, expr))
        return substitute(expr, subst)

    # Terms

    def _check(self, ctx, term, type_expr, d):
        inferred = self._infer(ctx, term, d)
        if alpha_key(inferred) == alpha_key(type_expr):
            return
        if not self._convertible(ctx, inferred, type_expr, d):
            raise KernelException("conv", "{} has type {}, expected {}".format(
                pretty(term), pretty(inferred), pretty(type_expr)))
        d.add("conv", HasType(ctx, term, type_expr))

    def _infer(self, ctx, term, d):
        if isinstance(term, Var):
            type_expr = ctx.lookup(term.name)
            if type_expr is None:
                raise KernelException("var", "unbound variable {}".format(term.name))
            d.add("var", HasType(ctx, term, type_expr))
            return type_expr

        if isinstance(term, ConstApp):
            decl = self._signature.get(term.name)
            if isinstance(decl, DefDecl):
                if term.args:
                    raise KernelException("delta", "definition {} takes no arguments".format(term.name))
                d.add("delta", HasType(ctx, term, decl.type))
                return decl.type
            if not isinstance(decl, TermConstDecl):
                raise KernelException("const", "{} is not a declared term constant".format(term.name))
            subst = self._check_args(ctx, decl, term.args, d)
            result = self._substitute(decl.result, subst, d, ctx)
            d.add("const", HasType(ctx, term, result))
            return result

        if isinstance(term, Lam):
            self._check_type(ctx, term.dom, d)
            var, body = self._fresh_binder(ctx, term.var, term.body)
            cod = self._infer(ctx.extend(var, term.dom), body, d)
            result = Pi(var, term.dom, cod)
            d.add("Π intro.", HasType(ctx, term, result))
            return result

        if isinstance(term, App):
            fn_type = self.normalize(self._infer(ctx, term.fn, d))
            if not isinstance(fn_type, Pi):
                raise KernelException("Π elim.", "{} is not a function, its type is {}".format(
                    pretty(term.fn), pretty(fn_type)))
            self._check(ctx, term.arg, fn_type.dom, d)
            result = self._substitute(fn_type.cod, {fn_type.var: term.arg}, d, ctx)
            d.add("Π elim.", HasType(ctx, term, result))
            return result

        if isinstance(term, Pair):
            annotation = term.annotation
            if not isinstance(annotation, Sigma):
                raise KernelException("Σ intro.", "pair annotation {} is not a Sig type".format(pretty(annotation)))
            self._check_type(ctx, annotation, d)
            self._check(ctx, term.first, annotation.dom, d)
            self._check(ctx, term.second, substitute(annotation.cod, {annotation.var: term.first}), d)
            d.add("Σ intro.", HasType(ctx, term, annotation))
            return annotation

        if isinstance(term, (Fst, Snd)):
            pair_type = self.normalize(self._infer(ctx, term.term, d))
            if not isinstance(pair_type, Sigma):
                raise KernelException("Σ elim.", "{} is not a pair, its type is {}".format(
                    pretty(term.term), pretty(pair_type)))
            if isinstance(term, Fst):
                result = pair_type.dom
            else:
                result = substitute(pair_type.cod, {pair_type.var: Fst(term.term)})
            d.add("Σ elim.", HasType(ctx, term, result))
            return result

        if isinstance(term, Refl):
            self._check_type(ctx, term.type, d)
            self._check(ctx, term.term, term.type, d)
            result = Id(term.type, term.term, term.term)
            d.add("Id intro.", HasType(ctx, term, result))
            return result

        if isinstance(term, J):
            return self._infer_j(ctx, term, d)

        if isinstance(term, SuspSub):
            extended, values = ctx, {}
            for var, expected in substitution_telescope(term, self._signature):
                value = term.mapping[var]
                if var in ctx:
                    raise KernelException("subst", "substituted variable {} shadows the context".format(var))
                if expected is not None and free_vars(expected) <= set(extended.names()):
                    self._check_type(extended, expected, d)
                    self._check(ctx, value, substitute(expected, values), d)
                else:
                    expected = self._infer(ctx, value, d)
                extended = extended.extend(var, expected)
                values[var] = value
            inner = self._infer(extended, term.term, d)
            result = self._substitute(inner, term.mapping, d, ctx)
            d.add("subst", HasType(ctx, term, result))
            return result

        raise KernelException("ctx", "not a term: {!r}".format(term))

    def _infer_j(self, ctx, term, d):
        """ "Id elim.": family over x y z, base case over w, then the instance at (left, right, path) """
        if len({term.x, term.y, term.z}) != 3:
            raise KernelException("Id elim.", "the family binders must be distinct")
        base_type = term.type
        self._check_type(ctx, base_type, d)

        avoid = set(ctx.names()) | free_vars(term.family) | {term.x, term.y, term.z}
        family = term.family
        names = []
        for var in (term.x, term.y, term.z):
            new = var if var not in ctx else fresh_name(var, avoid)
            avoid.add(new)
            if new != var:
                family = rename(family, var, new)
            names.append(new)
        x, y, z = names
        family_ctx = ctx.extend(x, base_type).extend(y, base_type).extend(z, Id(base_type, Var(x), Var(y)))
        self._check_type(family_ctx, family, d)

        w, base = self._fresh_binder(ctx, term.w, term.base)
        base_ctx = ctx.extend(w, base_type)
        at_refl = self._substitute(family, {x: Var(w), y: Var(w), z: Refl(base_type, Var(w))}, d, base_ctx)
        self._check(base_ctx, base, at_refl, d)

        if self._parameterized_j:
            generic = J(base_type, term.x, term.y, term.z, term.family, term.w, term.base, Var(x), Var(y), Var(z))
            d.add("Id elim.", HasType(family_ctx, generic, family))
        self._check(ctx, term.left, base_type, d)
        self._check(ctx, term.right, base_type, d)
        self._check(ctx, term.path, Id(base_type, term.left, term.right), d)
        result = self._substitute(family, {x: term.left, y: term.right, z: term.path}, d, ctx)
        d.add("subst" if self._parameterized_j else "Id elim.", HasType(ctx, term, result))
        return result

    # Conversion

    def _require_convertible(self, ctx, left, right, judgement, d):
        fired = []
        if not self._convertible(ctx, left, right, d, fired):
            raise KernelException("conv", "{} and {} are not definitionally equal".format(pretty(left),
                                                                                            pretty(right)))
        for rule in sorted(set(fired)):
            d.add(rule, judgement)
        d.add("conv", judgement)

    def _convertible(self, ctx, left, right, d, fired=None):
        if alpha_key(left) == alpha_key(right):
            return True
        on_rule = fired.append if fired is not None else None
        normalizer = self._normalizer(on_rule)
        left_nf = normalizer.normalize(left)
        right_nf = normalizer.normalize(right)
        if alpha_key(left_nf) == alpha_key(right_nf):
            return True
        if not self._mode.extensional:
            return False
        equations = self._hypotheses(ctx, normalizer)
        if not equations:
            return False
        if _equal_modulo(left_nf, right_nf, equations, normalizer):
            if fired is not None:
                fired.append("Id refl.")
            return True
        return False

    def _hypotheses(self, ctx, normalizer):
        """ Equations a = b for every proof of Id A a b declared in the context or closed in the signature """
        equations = []
        types = [type_expr for _, type_expr in ctx]
        for decl in self._signature:
            if isinstance(decl, TermConstDecl) and not len(decl.telescope):
                types.append(decl.result)
            elif isinstance(decl, DefDecl):
                types.append(decl.type)
        for type_expr in types:
            type_nf = normalizer.normalize(type_expr)
            if isinstance(type_nf, Id):
                equations.append((type_nf.left, type_nf.right))
        return equations


class _UnionFind(object):
    def __init__(self):
        self._parent = {}
        self._terms = {}

    def add(self, term):
        key = alpha_key(term)
        if key not in self._parent:
            self._parent[key] = key
            self._terms[key] = term
        return key

    def find(self, key):
        while self._parent[key] != key:
            self._parent[key] = self._parent[self._parent[key]]
            key = self._parent[key]
        return key

    def union(self, left, right):
        a, b = self.find(self.add(left)), self.find(self.add(right))
        if a != b:
            self._parent[a] = b

    def terms(self):
        return list(self._terms.values())

    def same_class(self, left, right):
        a, b = alpha_key(left), alpha_key(right)
        if a == b:
            return True
        if a not in self._parent or b not in self._parent:
            return False
        return self.find(a) == self.find(b)

    def representatives(self):
        """ :return: dict key -> smallest term of its class, for the keys that are not their representative """
        classes = {}
        for key in self._parent:
            classes.setdefault(self.find(key), []).append(key)
        result = {}
        for members in classes.values():
            best = min(members, key=lambda k: (expr_size(self._terms[k]), repr(k)))
            for key in members:
                if key != best:
                    result[key] = self._terms[best]
        return result


def _equal_modulo(left, right, equations, normalizer):
    """
    Congruence closure of the equations over normal forms. Members of a class are rewritten inside (their proper
    subterms replaced by class representatives) until no new equation appears, then both sides are rewritten
    to representatives and compared.
    """
    pairs = list(equations)
    for _ in range(MAX_EXTENSIONAL_ROUNDS):
        classes = _UnionFind()
        for a, b in pairs:
            classes.union(a, b)
        reps = classes.representatives()
        added = []
        for term in classes.terms():
            inner = normalizer.normalize(rewrite_subterms(
                term, lambda s, bound: None if s is term else reps.get(key_under(s, bound))))
            if not classes.same_class(term, inner):
                added.append((term, inner))
        if not added:
            return alpha_key(_canon(left, reps, normalizer)) == alpha_key(_canon(right, reps, normalizer))
        pairs += added
    raise NormalizationLimitException("extensional rewriting does not stabilize")


def _canon(expr, reps, normalizer):
    for _ in range(MAX_EXTENSIONAL_ROUNDS):
        rewritten = normalizer.normalize(rewrite_subterms(expr, lambda s, bound: reps.get(key_under(s, bound))))
        if alpha_key(rewritten) == alpha_key(expr):
            return expr
        expr = rewritten
    raise NormalizationLimitException("extensional rewriting does not stabilize")


# Functional entry points

def validate_signature(signature, mode=None):
    return Kernel(signature, mode).validate_signature()


def check_type(signature, context, type_expr, mode=None):
    return Kernel(signature, mode).check_type(context, type_expr)


def check_term(signature, context, term, type_expr, mode=None):
    return Kernel(signature, mode).check_term(context, term, type_expr)


def def_equal(signature, context, left, right, type_expr=None, mode=None):
    return Kernel(signature, mode).def_equal(context, left, right, type_expr)


def check_program(signature, goals, mode=None):
    return Kernel(signature, mode).check_program(goals)
