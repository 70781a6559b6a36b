# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Families of small groupoids and random maps between them, used by the exhaustive and randomized checks.

    Every finite groupoid is equivalent to a disjoint union of groups; the families here are disjoint unions of
    components chaotic(k) x V where the vertex group V is cyclic, the Klein group Z/2 x Z/2 or the symmetric
    group S3. The last two need two generators and are the smallest non-cyclic and non-abelian cases.
"""
from functools import lru_cache

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.groupoid.constructions import arrow_groupoid, chaotic, coproduct, cyclic, empty, product, \
    symmetric, terminal_map
from pathcheck.groupoid.functor import GFunctor
from pathcheck.groupoid.groupoid import FinGroupoid, build_groupoid

# Vertex groups other than the cyclic ones, named as in component()
NONCYCLIC_GROUPS = ("z2xz2", "s3")


def vertex_group(m):
    """ The one-object groupoid of the vertex group m: cyclic of order m for an integer, or "z2xz2" or "s3" """
    if m == "z2xz2":
        return product(cyclic(2), cyclic(2)).groupoid
    if m == "s3":
        return symmetric(3)
    if not isinstance(m, int):
        raise GroupoidLawException("unknown vertex group {!r}".format(m))
    return cyclic(m)


def _generators(m):
    if m in NONCYCLIC_GROUPS:
        return 2
    return 1 if m > 1 else 0


def component(k, m):
    """ The connected groupoid with k objects whose vertex groups are vertex_group(m) """
    if m == 1:
        return chaotic(k)
    return product(chaotic(k), vertex_group(m)).groupoid


def disjoint_union(groupoids):
    result = empty()
    for groupoid in groupoids:
        result = coproduct(result, groupoid).groupoid
    return result


def _vertex_groups(max_order, noncyclic):
    return list(range(1, max_order + 1)) + (list(NONCYCLIC_GROUPS) if noncyclic else [])


def _shapes(max_objects, max_generators, groups, least):
    """ Non-decreasing sequences of component shapes (k, position of the vertex group) within the bounds """
    yield ()
    for k in range(1, max_objects + 1):
        for position, m in enumerate(groups):
            if (k, position) < least:
                continue
            generators = k - 1 + _generators(m)
            if generators > max_generators:
                continue
            for rest in _shapes(max_objects - k, max_generators - generators, groups, (k, position)):
                yield ((k, position),) + rest


@lru_cache(maxsize=16)
def small_groupoids(max_objects=3, max_generators=2, max_order=3, noncyclic=True):
    """
    :return: the tuple of disjoint unions of components with at most max_objects objects, at most max_generators
             non-identity generators in total and cyclic orders up to max_order, the non-cyclic vertex groups
             included when noncyclic is set. The empty groupoid comes first.
    """
    groups = _vertex_groups(max_order, noncyclic)
    return tuple(disjoint_union(component(k, groups[position]) for k, position in shape)
                 for shape in _shapes(max_objects, max_generators, groups, (0, 0)))


def relabel(groupoid, rng):
    """
    Shuffles the ids of groupoid.
    :return: (the shuffled copy, the isomorphism groupoid -> copy)
    """
    objects = list(groupoid.objects())
    morphisms = list(groupoid.morphisms())
    rng.shuffle(objects)
    rng.shuffle(morphisms)
    back = {new: old for old, new in enumerate(morphisms)}
    src = [objects[groupoid.src[back[n]]] for n in range(groupoid.n_morphisms)]
    dst = [objects[groupoid.dst[back[n]]] for n in range(groupoid.n_morphisms)]
    identity = [None] * groupoid.n_objects
    for a in groupoid.objects():
        identity[objects[a]] = morphisms[groupoid.identity[a]]
    comp = {(morphisms[g], morphisms[f]): morphisms[gf] for (g, f), gf in groupoid.comp.items()}
    inv = [morphisms[groupoid.inverse(back[n])] for n in range(groupoid.n_morphisms)]
    copy = FinGroupoid(groupoid.n_objects, src, dst, identity, comp, inv)
    return copy, GFunctor(groupoid, copy, objects, morphisms)


def random_groupoid(rng, max_objects=3, max_order=3, min_objects=0, shuffle=True, noncyclic=False):
    """
    A random disjoint union of components with between min_objects and max_objects objects. Vertex groups are
    cyclic of order up to max_order, or also non-cyclic when noncyclic is set
    """
    if min_objects > max_objects:
        raise GroupoidLawException("min_objects exceeds max_objects")
    total = rng.randint(min_objects, max_objects)
    parts = []
    while total > 0:
        k = rng.randint(1, total)
        m = rng.choice(_vertex_groups(max_order, True)) if noncyclic else rng.randint(1, max_order)
        parts.append(component(k, m))
        total -= k
    groupoid = disjoint_union(parts)
    if shuffle:
        groupoid = relabel(groupoid, rng)[0]
    return groupoid


def full_subgroupoid(groupoid, objects):
    """
    :return: (H, inclusion) where H is the full subgroupoid on the given objects, labelled by the ids of groupoid
    """
    objects = sorted(set(objects))
    chosen = set(objects)
    morphisms = [m for m in groupoid.morphisms() if groupoid.src[m] in chosen and groupoid.dst[m] in chosen]
    sub = build_groupoid(objects, morphisms, lambda m: groupoid.src[m], lambda m: groupoid.dst[m],
                         groupoid.compose, lambda a: groupoid.identity[a], groupoid.inverse)
    return sub, GFunctor(sub, groupoid, sub.object_labels, sub.morphism_labels)


def random_acyclic_cofibration(rng, max_objects=4, max_order=3, noncyclic=False):
    """ The inclusion of a full subgroupoid meeting every component of a random groupoid """
    B = random_groupoid(rng, max_objects=max_objects, max_order=max_order, min_objects=1, noncyclic=noncyclic)
    chosen = []
    for part in B.components():
        chosen.extend(rng.sample(part, rng.randint(1, len(part))))
    return full_subgroupoid(B, chosen)[1]


def random_fibration(rng, max_objects=4, max_order=3, noncyclic=False):
    """ A random map among projections of products, maps to the terminal groupoid, identities and path objects """
    kind = rng.randrange(4)
    if kind == 0:
        base = random_groupoid(rng, max_objects=2, max_order=max_order, min_objects=1, noncyclic=noncyclic)
        fiber = random_groupoid(rng, max_objects=max(1, max_objects // base.n_objects), max_order=max_order,
                                min_objects=1, shuffle=False, noncyclic=noncyclic)
        return product(base, fiber).first
    if kind == 1:
        return terminal_map(random_groupoid(rng, max_objects=max_objects, max_order=max_order, noncyclic=noncyclic))
    if kind == 2:
        groupoid = random_groupoid(rng, max_objects=max_objects, max_order=max_order, noncyclic=noncyclic)
        return GFunctor(groupoid, groupoid, groupoid.objects(), groupoid.morphisms())
    groupoid = random_groupoid(rng, max_objects=2, max_order=1, min_objects=1)
    return arrow_groupoid(groupoid).p
