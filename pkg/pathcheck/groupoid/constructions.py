# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Constructions on finite groupoids: small groupoids, finite limits and coproducts, exponentials, and path objects.

    Labels of constructed groupoids are built from the ids of their inputs: the object (a, b) of a product or a
    pullback is labelled (a, b), the object of an arrow groupoid standing for the morphism f is labelled f, and so on.
"""
from collections import namedtuple
from functools import lru_cache
from itertools import permutations, product as cartesian

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.common.log import get_logger
from pathcheck.groupoid.classify import is_fibration
from pathcheck.groupoid.enumeration import enumerate_functors, generating_morphisms
from pathcheck.groupoid.functor import GFunctor, functor_by_labels
from pathcheck.groupoid.groupoid import FinGroupoid, build_groupoid

_logger = get_logger("groupoid.constructions")

# A limit or colimit with its two legs
Cone = namedtuple("Cone", ["groupoid", "first", "second"])

# A factorization of a diagonal: r is an acyclic cofibration, p a fibration
PathObject = namedtuple("PathObject", ["groupoid", "r", "p"])


# Small groupoids

def terminal():
    return _terminal()


@lru_cache(maxsize=None)
def _terminal():
    return FinGroupoid(1, [0], [0], [0], {(0, 0): 0}, [0], ["*"], ["*"])


def empty():
    return FinGroupoid(0, [], [], [], {}, [])


@lru_cache(maxsize=64)
def chaotic(n):
    """ n objects and exactly one morphism between any two of them. The morphism i -> j has id i * n + j """
    objects = list(range(n))
    return build_groupoid(objects, [(i, j) for i in objects for j in objects],
                          lambda m: m[0], lambda m: m[1], lambda g, f: (f[0], g[1]), lambda a: (a, a),
                          lambda m: (m[1], m[0]))


@lru_cache(maxsize=64)
def discrete(n):
    """ n objects and their identities only. The identity of i is labelled (i, i), as in chaotic(n) """
    objects = list(range(n))
    return build_groupoid(objects, [(i, i) for i in objects], lambda m: m[0], lambda m: m[1],
                          lambda g, f: f, lambda a: (a, a), lambda m: m)


def interval():
    """ The connected groupoid with two objects: morphisms id0, u: 0 -> 1, u^-1 and id1, with ids 0 to 3 """
    return chaotic(2)


@lru_cache(maxsize=64)
def cyclic(m):
    """ The cyclic group of order m as a groupoid with one object """
    if m < 1:
        raise GroupoidLawException("a cyclic group has a positive order")
    return build_groupoid([0], list(range(m)), lambda k: 0, lambda k: 0, lambda g, f: (g + f) % m,
                          lambda a: 0, lambda k: (-k) % m)


@lru_cache(maxsize=16)
def symmetric(n):
    """
    The symmetric group on n points as a groupoid with one object. Morphisms are the permutations in
    lexicographic order, so the identity has id 0; g o f sends i to g[f[i]]
    """
    if n < 1:
        raise GroupoidLawException("a symmetric group acts on at least one point")
    return build_groupoid([0], list(permutations(range(n))), lambda p: 0, lambda p: 0,
                          lambda g, f: tuple(g[i] for i in f), lambda a: tuple(range(n)),
                          lambda p: tuple(sorted(range(n), key=p.__getitem__)))


# Limits and colimits

def _pair_groupoid(object_pairs, morphism_pairs, A, B):
    return build_groupoid(object_pairs, morphism_pairs,
                          lambda m: (A.src[m[0]], B.src[m[1]]), lambda m: (A.dst[m[0]], B.dst[m[1]]),
                          lambda g, f: (A.compose(g[0], f[0]), B.compose(g[1], f[1])),
                          lambda a: (A.identity[a[0]], B.identity[a[1]]),
                          lambda m: (A.inverse(m[0]), B.inverse(m[1])))


def _projections(P, A, B):
    return (GFunctor(P, A, [a for a, _ in P.object_labels], [m for m, _ in P.morphism_labels]),
            GFunctor(P, B, [b for _, b in P.object_labels], [n for _, n in P.morphism_labels]))


@lru_cache(maxsize=256)
def product(A, B):
    """ :return: Cone(A x B, first projection, second projection). Objects and morphisms in lexicographic order """
    P = _pair_groupoid(list(cartesian(A.objects(), B.objects())), list(cartesian(A.morphisms(), B.morphisms())),
                       A, B)
    return Cone(P, *_projections(P, A, B))


@lru_cache(maxsize=256)
def pullback(f, g):
    """ :return: Cone(A x_C B, projection to A, projection to B) for f: A -> C and g: B -> C """
    if f.cod != g.cod:
        raise GroupoidLawException("a pullback needs a common codomain")
    A, B = f.dom, g.dom
    objects = [(a, b) for a in A.objects() for b in B.objects() if f.obj[a] == g.obj[b]]
    morphisms = [(m, n) for m in A.morphisms() for n in B.morphisms() if f.mor[m] == g.mor[n]]
    P = _pair_groupoid(objects, morphisms, A, B)
    return Cone(P, *_projections(P, A, B))


@lru_cache(maxsize=256)
def coproduct(A, B):
    """ :return: Cone(A + B, left injection, right injection). The objects of A come first """
    S = build_groupoid([(0, a) for a in A.objects()] + [(1, b) for b in B.objects()],
                       [(0, m) for m in A.morphisms()] + [(1, n) for n in B.morphisms()],
                       lambda m: (m[0], (A, B)[m[0]].src[m[1]]), lambda m: (m[0], (A, B)[m[0]].dst[m[1]]),
                       lambda g, f: (f[0], (A, B)[f[0]].compose(g[1], f[1])),
                       lambda a: (a[0], (A, B)[a[0]].identity[a[1]]),
                       lambda m: (m[0], (A, B)[m[0]].inverse(m[1])))
    left = GFunctor(A, S, list(A.objects()), list(A.morphisms()))
    right = GFunctor(B, S, [A.n_objects + b for b in B.objects()], [A.n_morphisms + n for n in B.morphisms()])
    return Cone(S, left, right)


def diagonal(A):
    """ The diagonal A -> A x A """
    P = product(A, A).groupoid
    return GFunctor(A, P, [P.object_index((a, a)) for a in A.objects()],
                    [P.morphism_index((m, m)) for m in A.morphisms()])


def pairing(f, g, target=None):
    """
    :return: the functor <f, g>: X -> target for f: X -> A and g: X -> B, where target is a groupoid whose objects
             and morphisms are labelled by pairs of ids of A and B (A x B by default, or a pullback)
    """
    if f.dom != g.dom:
        raise GroupoidLawException("a pairing needs a common domain")
    if target is None:
        target = product(f.cod, g.cod).groupoid
    X = f.dom
    return GFunctor(X, target, [target.object_index((f.obj[x], g.obj[x])) for x in X.objects()],
                    [target.morphism_index((f.mor[m], g.mor[m])) for m in X.morphisms()])


def terminal_map(A):
    return GFunctor(A, terminal(), [0] * A.n_objects, [0] * A.n_morphisms)


def point(A, a):
    """ The functor 1 -> A picking the object a """
    return GFunctor(terminal(), A, [a], [A.identity[a]])


# Exponentials

def _transformations(F, G):
    """ Every natural transformation F => G, as tuples of components, in lexicographic order of the root choices """
    A, B = F.dom, F.cod
    gens = generating_morphisms(A)
    per_root = []
    for root in gens.roots:
        per_root.append(B.hom(F.obj[root], G.obj[root]))
    result = []
    for choice in cartesian(*per_root):
        at_root = dict(zip(gens.roots, choice))
        components = []
        for a in A.objects():
            t = gens.tree[a]
            alpha = at_root[gens.root_of[a]]
            components.append(B.compose_all(G.mor[t], alpha, B.inverse(F.mor[t])))
        natural = all(B.compose(G.mor[m], components[A.src[m]]) == B.compose(components[A.dst[m]], F.mor[m])
                      for m in A.morphisms())
        if natural:
            result.append(tuple(components))
    return result


@lru_cache(maxsize=64)
def exponential(A, B):
    """
    B^A: objects are the functors A -> B (labelled by themselves, in enumeration order), morphisms F -> G are the
    natural transformations, labelled (F id, G id, components). Raises SearchLimitException beyond the size guard.
    """
    functors = enumerate_functors(A, B)
    morphisms = []
    for i, F in enumerate(functors):
        for j, G in enumerate(functors):
            morphisms.extend((i, j, components) for components in _transformations(F, G))
    _logger.debug("exponential with %d objects and %d morphisms", len(functors), len(morphisms))
    return build_groupoid(functors, morphisms,
                          lambda m: functors[m[0]], lambda m: functors[m[1]],
                          lambda g, f: (f[0], g[1], tuple(B.compose(b, a) for b, a in zip(g[2], f[2]))),
                          lambda F: (functors.index(F),) * 2 + (tuple(B.identity[b] for b in F.obj),),
                          lambda m: (m[1], m[0], tuple(B.inverse(alpha) for alpha in m[2])))


def evaluation(A, B):
    """ The evaluation functor B^A x A -> B """
    E = exponential(A, B)
    P = product(E, A).groupoid
    obj, mor = [], []
    for e, a in P.object_labels:
        obj.append(E.object_labels[e].obj[a])
    for t, m in P.morphism_labels:
        source = E.object_labels[E.src[t]]
        components = E.morphism_labels[t][2]
        mor.append(B.compose(components[A.dst[m]], source.mor[m]))
    return GFunctor(P, B, obj, mor)


# Path objects

@lru_cache(maxsize=256)
def arrow_groupoid(A):
    """
    A^I as the groupoid of arrows of A. Its object f is the morphism f of A. A morphism f -> g is labelled
    (f, phi, psi) with phi: src f -> src g, psi: dst f -> dst g and g = psi f phi^-1.
    :return: PathObject(A^I, r: A -> A^I, p: A^I -> A x A)
    """
    return _path_object(A, lambda m: True, product(A, A).groupoid, lambda phi, psi: True)


@lru_cache(maxsize=256)
def relative_path_object(g):
    """
    The path object of g: B -> Gamma in the slice over Gamma: the groupoid of vertical arrows of B (those sent to
    identities), with morphisms (v, phi, psi) such that g(phi) = g(psi).
    :return: PathObject(P, r_g: B -> P, p_g: P -> B x_Gamma B). Raises GroupoidLawException if g is not a fibration
    """
    if not is_fibration(g):
        raise GroupoidLawException("a relative path object needs a fibration")
    B = g.dom
    return _path_object(B, lambda m: g.cod.is_identity(g.mor[m]), pullback(g, g).groupoid,
                        lambda phi, psi: g.mor[phi] == g.mor[psi])


def _path_object(A, is_vertical, target, compatible):
    arrows = [m for m in A.morphisms() if is_vertical(m)]
    morphisms = [(f, phi, psi) for f in arrows for phi in A.outgoing(A.src[f]) for psi in A.outgoing(A.dst[f])
                 if compatible(phi, psi)]

    def dst(m):
        f, phi, psi = m
        return A.compose_all(psi, f, A.inverse(phi))

    P = build_groupoid(arrows, morphisms, lambda m: m[0], dst,
                       lambda h, k: (k[0], A.compose(h[1], k[1]), A.compose(h[2], k[2])),
                       lambda f: (f, A.identity[A.src[f]], A.identity[A.dst[f]]),
                       lambda m: (dst(m), A.inverse(m[1]), A.inverse(m[2])))
    r = GFunctor(A, P, [P.object_index(A.identity[a]) for a in A.objects()],
                 [P.morphism_index((A.identity[A.src[m]], m, m)) for m in A.morphisms()])
    p = GFunctor(P, target, [target.object_index((A.src[f], A.dst[f])) for f in P.object_labels],
                 [target.morphism_index((phi, psi)) for _, phi, psi in P.morphism_labels])
    return PathObject(P, r, p)


def arrow_functor(f):
    """ f^I: A^I -> B^I, acting by f on arrows and on the pairs (phi, psi) """
    P = arrow_groupoid(f.dom).groupoid
    Q = arrow_groupoid(f.cod).groupoid
    return functor_by_labels(P, Q, lambda m: f.mor[m], lambda m: (f.mor[m[0]], f.mor[m[1]], f.mor[m[2]]))
