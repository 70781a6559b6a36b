# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Enumeration of functors by backtracking.

    A functor out of a groupoid is fixed by its object map, its images of a spanning tree of each component (the
    least morphism from the root of the component to every other object) and a group homomorphism on the vertex
    group of each root, itself fixed by the images of a generating set. Choices are made in this order: objects,
    tree morphisms, then group generators, each time in increasing id order, so the enumeration order is
    lexicographic in the choices and does not depend on anything else.
"""
from collections import deque
from functools import lru_cache

from pathcheck.common.exceptions import SearchLimitException, GroupoidLawException
from pathcheck.common.log import get_logger
from pathcheck.groupoid.functor import GFunctor

DEFAULT_MAX_SEARCH = 10 ** 7

_logger = get_logger("groupoid.enumeration")
_search = {"limit": DEFAULT_MAX_SEARCH}


def set_search_limit(limit):
    """ Sets the size guard of every functor search of the process """
    if limit is None or int(limit) < 1:
        raise ValueError("the search limit must be a positive integer")
    _search["limit"] = int(limit)


def get_search_limit():
    return _search["limit"]


class GeneratingSet(object):
    """ Roots, spanning trees and vertex group generators of the components of a groupoid """

    def __init__(self, roots, root_of, tree, loops):
        self.roots = roots
        self.root_of = root_of
        self.tree = tree
        self.loops = loops

    def tree_objects(self):
        """ :return: the objects that are not roots, whose tree morphism has to be chosen """
        return [a for a in range(len(self.root_of)) if self.root_of[a] != a]

    def morphisms(self):
        """ :return: the generating morphisms, in choice order """
        return [self.tree[a] for a in self.tree_objects()] + [s for root in self.roots for s in self.loops[root]]

    def __len__(self):
        return len(self.tree_objects()) + sum(len(self.loops[root]) for root in self.roots)


def _closure(groupoid, generators, unit):
    span = {unit}
    queue = deque([unit])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = groupoid.compose(s, x)
            if y not in span:
                span.add(y)
                queue.append(y)
    return span


@lru_cache(maxsize=256)
def generating_morphisms(groupoid):
    """ :return: the GeneratingSet of groupoid. Vertex group generators are picked greedily in id order """
    n = groupoid.n_objects
    roots, root_of, tree, loops = [], [None] * n, [None] * n, {}
    for component in groupoid.components():
        root = component[0]
        roots.append(root)
        for a in component:
            root_of[a] = root
            tree[a] = groupoid.identity[root] if a == root else groupoid.hom(root, a)[0]
        unit = groupoid.identity[root]
        generators, span = [], {unit}
        for g in groupoid.hom(root, root):
            if g not in span:
                generators.append(g)
                span = _closure(groupoid, generators, unit)
        loops[root] = tuple(generators)
    return GeneratingSet(tuple(roots), tuple(root_of), tuple(tree), loops)


class FunctorConstraints(object):
    """
    Equations a functor F: A -> B must satisfy.
    :param pins: pairs (f, h) with f: X -> A and h: X -> B, meaning F o f = h
    :param over: pairs (g, k) with g: B -> D and k: A -> D, meaning g o F = k
    :param injective_objects: F must be injective on objects
    """

    def __init__(self, pins=(), over=(), injective_objects=False):
        self.pins = tuple(pins)
        self.over = tuple(over)
        self.injective_objects = injective_objects


class _FunctorSearch(object):
    def __init__(self, dom, cod, constraints, rng):
        self.dom = dom
        self.cod = cod
        self.constraints = constraints if constraints is not None else FunctorConstraints()
        self.rng = rng
        self.gens = generating_morphisms(dom)
        self.obj_fixed = {}
        self.mor_fixed = {}
        self.consistent = True
        self._resolve()
        self.obj_candidates = [[b for b in cod.objects() if self._object_allowed(a, b)] for a in dom.objects()]

    def _fix(self, table, key, value):
        if table.get(key, value) != value:
            self.consistent = False
        table[key] = value

    def _resolve(self):
        dom, cod = self.dom, self.cod
        for f, h in self.constraints.pins:
            if f.cod != dom or h.cod != cod or f.dom != h.dom:
                raise GroupoidLawException("pinned functors do not match the search")
            for x in f.dom.objects():
                self._fix(self.obj_fixed, f.obj[x], h.obj[x])
            for x in f.dom.morphisms():
                self._fix(self.mor_fixed, f.mor[x], h.mor[x])
        for m, n in list(self.mor_fixed.items()):
            self._fix(self.obj_fixed, dom.src[m], cod.src[n])
            self._fix(self.obj_fixed, dom.dst[m], cod.dst[n])
        for g, k in self.constraints.over:
            if g.dom != cod or k.dom != dom or g.cod != k.cod:
                raise GroupoidLawException("constraining functors do not match the search")

    def _object_allowed(self, a, b):
        if a in self.obj_fixed and self.obj_fixed[a] != b:
            return False
        return all(g.obj[b] == k.obj[a] for g, k in self.constraints.over)

    def morphism_allowed(self, m, n):
        if m in self.mor_fixed and self.mor_fixed[m] != n:
            return False
        return all(g.mor[n] == k.mor[m] for g, k in self.constraints.over)

    def bound(self):
        """
        Number of candidate choices before pruning: the object candidates, times, for each generator, the largest
        number of allowed images between candidate images of its endpoints
        """
        dom, cod = self.dom, self.cod
        total = 1
        for candidates in self.obj_candidates:
            total *= len(candidates)
        if total == 0:
            return 0
        for m in self.gens.morphisms():
            widest = 0
            for b in self.obj_candidates[dom.src[m]]:
                for c in self.obj_candidates[dom.dst[m]]:
                    widest = max(widest, sum(1 for n in cod.hom(b, c) if self.morphism_allowed(m, n)))
            total *= widest
        return total

    def _order(self, candidates):
        if self.rng is not None:
            candidates = list(candidates)
            self.rng.shuffle(candidates)
        return candidates

    def solutions(self):
        if not self.consistent:
            return
        yield from self._objects(0, [None] * self.dom.n_objects, set())

    def _objects(self, a, obj, used):
        if a == self.dom.n_objects:
            yield from self._tree(0, self.gens.tree_objects(), obj, {})
            return
        for b in self._order(self.obj_candidates[a]):
            if self.constraints.injective_objects and b in used:
                continue
            obj[a] = b
            used.add(b)
            yield from self._objects(a + 1, obj, used)
            used.discard(b)
        obj[a] = None

    def _tree(self, pos, tree_objects, obj, images):
        if pos == len(tree_objects):
            yield from self._loops(0, obj, images, {})
            return
        a = tree_objects[pos]
        m = self.gens.tree[a]
        for n in self._order(self.cod.hom(obj[self.gens.root_of[a]], obj[a])):
            if self.morphism_allowed(m, n):
                images[a] = n
                yield from self._tree(pos + 1, tree_objects, obj, images)
        images.pop(a, None)

    def _loops(self, pos, obj, tree_images, homs):
        if pos == len(self.gens.roots):
            functor = self._assemble(obj, tree_images, homs)
            if functor is not None:
                yield functor
            return
        root = self.gens.roots[pos]
        for images in self._generator_images(root, self.gens.loops[root], obj, []):
            phi = self._extend(root, images, obj)
            if phi is not None:
                homs[root] = phi
                yield from self._loops(pos + 1, obj, tree_images, homs)
        homs.pop(root, None)

    def _generator_images(self, root, loops, obj, chosen):
        if len(chosen) == len(loops):
            yield list(chosen)
            return
        s = loops[len(chosen)]
        b = obj[root]
        for n in self._order(self.cod.hom(b, b)):
            if self.morphism_allowed(s, n):
                chosen.append(n)
                yield from self._generator_images(root, loops, obj, chosen)
                chosen.pop()

    def _extend(self, root, images, obj):
        """ The homomorphism of vertex groups sending the generators to images, or None if there is none """
        dom, cod = self.dom, self.cod
        unit = dom.identity[root]
        phi = {unit: cod.identity[obj[root]]}
        queue = deque([unit])
        loops = self.gens.loops[root]
        while queue:
            x = queue.popleft()
            for s, t in zip(loops, images):
                y = dom.compose(s, x)
                value = cod.compose(t, phi[x])
                if y in phi:
                    if phi[y] != value:
                        return None
                else:
                    phi[y] = value
                    queue.append(y)
        return phi

    def _assemble(self, obj, tree_images, homs):
        dom, cod, gens = self.dom, self.cod, self.gens

        def tree_image(a):
            return tree_images[a] if a in tree_images else cod.identity[obj[a]]

        mor = []
        for m in dom.morphisms():
            a, b = dom.src[m], dom.dst[m]
            root = gens.root_of[a]
            loop = dom.compose_all(dom.inverse(gens.tree[b]), m, gens.tree[a])
            n = cod.compose_all(tree_image(b), homs[root][loop], cod.inverse(tree_image(a)))
            if not self.morphism_allowed(m, n):
                return None
            mor.append(n)
        return GFunctor(dom, cod, obj, mor)


def iter_functors(dom, cod, constraints=None, rng=None):
    """
    Iterates over the functors dom -> cod satisfying the constraints, in lexicographic order of the choices (or in
    a random order driven by rng). Raises SearchLimitException when the search space exceeds the size guard.
    """
    search = _FunctorSearch(dom, cod, constraints, rng)
    bound = search.bound()
    if bound > get_search_limit():
        raise SearchLimitException("functor search over {} candidates exceeds the limit of {}".format(
            bound, get_search_limit()))
    _logger.debug("functor search %r -> %r over %d candidates", dom, cod, bound)
    return search.solutions()


def enumerate_functors(dom, cod, constraints=None):
    """ :return: the list of every functor dom -> cod satisfying the constraints """
    return list(iter_functors(dom, cod, constraints))


def first_functor(dom, cod, constraints=None):
    """ :return: the first functor of the enumeration, or None """
    return next(iter_functors(dom, cod, constraints), None)


def random_functor(rng, dom, cod, constraints=None):
    """ :return: a functor dom -> cod drawn using rng, or None if there is none """
    return next(iter_functors(dom, cod, constraints, rng=rng), None)


def find_isomorphism(dom, cod, pins=(), over=()):
    """ :return: an isomorphism dom -> cod satisfying the given constraints, or None """
    if dom.n_objects != cod.n_objects or dom.n_morphisms != cod.n_morphisms:
        return None
    constraints = FunctorConstraints(pins, over, injective_objects=True)
    for functor in iter_functors(dom, cod, constraints):
        if len(set(functor.mor)) == dom.n_morphisms:
            return functor
    return None
