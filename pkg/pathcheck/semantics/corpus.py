# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Seeded instances for the checks of the interpretation: definitional equalities for the soundness check,
    J-terms under substitution for the coherence probe, and fibrations with base changes for the stability check.
"""
import random
from collections import namedtuple

from pathcheck.common.exceptions import EnvironmentException
from pathcheck.common.hook_manager import HookManager
from pathcheck.common.log import get_logger
from pathcheck.groupoid import random_functor
from pathcheck.groupoid.families import random_fibration, random_groupoid
from pathcheck.semantics.environment import env_from_preset
from pathcheck.syntax.parser import parse
from pathcheck.syntax.substitution import substitute
from pathcheck.syntax.terms import BaseApp, Sigma, Id, Var, ConstApp, Lam, App, Pair, Fst, Snd, Refl, J, Context, \
    TermEq

_logger = get_logger("semantics.corpus")

SOUNDNESS_SIGNATURE_SOURCE = """
assume A : Type
assume B : (x : A) Type
assume a0 : A
assume a1 : A
assume f : (x : A) A
assume b0 : B a0
assume D : (x : A) (y : A) (z : Id A x y) Type
assume d : (x : A) D x x (refl A x)
"""

EQUALITY_KINDS = ["pi-conv", "pi-conv-refl", "id-conv", "id-conv-nondependent", "id-conv-suspended", "sigma-fst",
                  "sigma-snd", "reflexive"]

COHERENCE_SOURCE = """
assume A : Type
assume a0 : A
assume a1 : A
assume K : (x : A) (y : A) (z : Id A x y) Type
assume k : (x : A) K x x (refl A x)
assume pu : Id A {left} {right}
check (J A [x y z => {family}] [w => {base}] {left} {right} v)[pu/v] : {result}
"""

COHERENCE_FAMILIES = [
    ("K x y z", "k w", "K {left} {right} pu"),
    ("A", "w", "A"),
    ("Id A x y", "refl A w", "Id A {left} {right}"),
]

COHERENCE_SETTINGS = [("interval", "groupoid"), ("z2", "groupoid"), ("discrete-1", "groupoid"),
                      ("discrete-2", "groupoid"), ("discrete-2", "discrete"), ("discrete-3", "discrete")]

CoherenceInstance = namedtuple("CoherenceInstance", ["name", "env", "context", "term", "hook_manager"])

A = BaseApp("A")
SIGMA_B = Sigma("x", A, BaseApp("B", (Var("x"),)))


def soundness_signature():
    return parse(SOUNDNESS_SIGNATURE_SOURCE)[0]


def _closed_term(rng, depth):
    """ A random closed term of type A """
    choice = rng.randrange(5) if depth > 0 else rng.randrange(2)
    if choice == 0:
        return ConstApp("a0")
    if choice == 1:
        return ConstApp("a1")
    if choice == 2:
        return ConstApp("f", (_closed_term(rng, depth - 1),))
    if choice == 3:
        return App(Lam("u", A, ConstApp("f", (Var("u"),))), _closed_term(rng, depth - 1))
    return Fst(Pair(ConstApp("a0"), ConstApp("b0"), SIGMA_B))


def _equality(kind, t, rng):
    """ :return: (left, right, type) for an equality of the given kind about the closed term t """
    refl = Refl(A, t)
    if kind == "pi-conv":
        body = rng.choice([ConstApp("f", (Var("x"),)), Var("x"), ConstApp("f", (ConstApp("f", (Var("x"),)),))])
        return App(Lam("x", A, body), t), substitute(body, {"x": t}), A
    if kind == "pi-conv-refl":
        return App(Lam("x", A, Refl(A, Var("x"))), t), refl, Id(A, t, t)
    if kind == "id-conv":
        family = BaseApp("D", (Var("x"), Var("y"), Var("z")))
        base = ConstApp("d", (Var("w"),))
        return J(A, "x", "y", "z", family, "w", base, t, t, refl), ConstApp("d", (t,)), BaseApp("D", (t, t, refl))
    if kind == "id-conv-nondependent":
        base = ConstApp("f", (Var("w"),))
        return J(A, "x", "y", "z", A, "w", base, t, t, refl), ConstApp("f", (t,)), A
    if kind == "id-conv-suspended":
        v = Var("v")
        family = BaseApp("D", (Var("x"), Var("y"), Var("z")))
        suspended = substitute(J(A, "x", "y", "z", family, "w", ConstApp("d", (Var("w"),)), v, v, Refl(A, v)),
                               {"v": t})
        return suspended, ConstApp("d", (t,)), BaseApp("D", (t, t, refl))
    if kind == "sigma-fst":
        return Fst(Pair(ConstApp("a0"), ConstApp("b0"), SIGMA_B)), ConstApp("a0"), A
    if kind == "sigma-snd":
        return Snd(Pair(ConstApp("a0"), ConstApp("b0"), SIGMA_B)), ConstApp("b0"), BaseApp("B", (ConstApp("a0"),))
    return t, t, A


def generate_equalities(seed=0, count=30, max_depth=2):
    """
    :return: (signature, equalities): count closed TermEq judgements over soundness_signature(), each kind of
             EQUALITY_KINDS appearing at least once when count allows it. Lines number the equalities from 1
    """
    rng = random.Random(seed)
    equalities = []
    for position in range(count):
        kind = EQUALITY_KINDS[position] if position < len(EQUALITY_KINDS) else rng.choice(EQUALITY_KINDS)
        left, right, type_expr = _equality(kind, _closed_term(rng, max_depth), rng)
        equalities.append(TermEq(Context(), left, right, type_expr, line=position + 1))
    return soundness_signature(), equalities


def last_filler_hook():
    """ :return: a HookManager whose "filler_choice" hook picks the last candidate filler """
    hook_manager = HookManager()
    hook_manager.add_hook("filler_choice", lambda problem, candidates: len(candidates) - 1)
    return hook_manager


def coherence_instances(with_hook=True):
    """
    :return: the CoherenceInstances over every setting of COHERENCE_SETTINGS where the path pu can be interpreted,
             plus, with_hook, the interval instances again with the last filler chosen for the pushed form
    """
    instances = []
    for preset, backend in COHERENCE_SETTINGS:
        for family, base, result in COHERENCE_FAMILIES:
            for left, right in (("a0", "a1"), ("a0", "a0")):
                source = COHERENCE_SOURCE.format(family=family, base=base, left=left, right=right,
                                                 result=result.format(left=left, right=right))
                signature, goals = parse(source)
                try:
                    env = env_from_preset(signature, preset, backend)
                except EnvironmentException:
                    _logger.debug("no path from %s to %s in %s", left, right, preset)
                    continue
                name = "{}/{}/{}/{}-{}".format(preset, backend, family.split()[0], left, right)
                instances.append(CoherenceInstance(name, env, goals[0].context, goals[0].term, None))
                if with_hook and preset == "interval":
                    instances.append(CoherenceInstance(name + "/last-filler", env, goals[0].context, goals[0].term,
                                                       last_filler_hook()))
    return instances


def stability_instances(seed=0, count=50, max_objects=3):
    """ :return: count pairs (g, sigma) of a random fibration g and a random map sigma into its base """
    rng = random.Random(seed)
    instances = []
    while len(instances) < count:
        g = random_fibration(rng, max_objects=max_objects, max_order=2)
        X = random_groupoid(rng, max_objects=max_objects, max_order=2, min_objects=1 if g.cod.n_objects else 0)
        if g.cod.n_objects == 0 and X.n_objects:
            continue
        sigma = random_functor(rng, X, g.cod)
        if sigma is not None:
            instances.append((g, sigma))
    return instances
