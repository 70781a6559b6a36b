# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Functors between finite groupoids and natural isomorphisms """
from collections import OrderedDict

from pathcheck.common.exceptions import GroupoidLawException


class GFunctor(object):
    """ A functor dom -> cod, given by its object map and its morphism map """

    def __init__(self, dom, cod, obj, mor):
        self.dom = dom
        self.cod = cod
        self.obj = tuple(obj)
        self.mor = tuple(mor)
        self._hash = hash((dom, cod, self.obj, self.mor))

    def violation(self):
        """ :return: a description of the first functor law that fails, or None """
        dom, cod = self.dom, self.cod
        if len(self.obj) != dom.n_objects or len(self.mor) != dom.n_morphisms:
            return "map sizes do not match the domain"
        if any(not 0 <= b < cod.n_objects for b in self.obj) or any(not 0 <= n < cod.n_morphisms for n in self.mor):
            return "map leaves the codomain"
        for m in dom.morphisms():
            n = self.mor[m]
            if cod.src[n] != self.obj[dom.src[m]] or cod.dst[n] != self.obj[dom.dst[m]]:
                return "morphism {} is not sent between the images of its endpoints".format(m)
        for a in dom.objects():
            if self.mor[dom.identity[a]] != cod.identity[self.obj[a]]:
                return "identity of object {} is not preserved".format(a)
        for (g, f), gf in dom.comp.items():
            if cod.comp[(self.mor[g], self.mor[f])] != self.mor[gf]:
                return "composite of {} and {} is not preserved".format(g, f)
        return None

    def is_valid(self):
        return self.violation() is None

    def is_identity(self):
        return self.dom == self.cod and self.obj == tuple(self.dom.objects()) \
            and self.mor == tuple(self.dom.morphisms())

    def to_json(self):
        return OrderedDict([("obj", list(self.obj)), ("mor", list(self.mor))])

    def __eq__(self, other):
        return isinstance(other, GFunctor) and self.obj == other.obj and self.mor == other.mor \
            and self.dom == other.dom and self.cod == other.cod

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        """ Functors between the same groupoids are ordered lexicographically, objects first """
        return (self.obj, self.mor) < (other.obj, other.mor)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "GFunctor(obj={}, mor={})".format(list(self.obj), list(self.mor))


def functor_from_json(data, dom, cod):
    """ Reads {"obj": [...], "mor": [...]} as a functor dom -> cod. Raises GroupoidLawException """
    try:
        functor = GFunctor(dom, cod, [int(b) for b in data["obj"]], [int(n) for n in data["mor"]])
    except (KeyError, TypeError, ValueError) as e:
        raise GroupoidLawException("malformed functor: {}".format(e))
    problem = functor.violation()
    if problem is not None:
        raise GroupoidLawException(problem)
    return functor


def functor_by_labels(dom, cod, on_object, on_morphism):
    """ Builds a functor from maps on labels: on_object(dom object label) is a cod object label, and so on """
    obj = [cod.object_index(on_object(label)) for label in dom.object_labels]
    mor = [cod.morphism_index(on_morphism(label)) for label in dom.morphism_labels]
    return GFunctor(dom, cod, obj, mor)


def identity_functor(groupoid):
    return GFunctor(groupoid, groupoid, groupoid.objects(), groupoid.morphisms())


def compose(g, f):
    """ :return: g o f. Raises GroupoidLawException when cod(f) is not dom(g) """
    if f.cod != g.dom:
        raise GroupoidLawException("functors are not composable")
    return GFunctor(f.dom, g.cod, [g.obj[b] for b in f.obj], [g.mor[n] for n in f.mor])


def constant(dom, cod, b):
    """ The functor dom -> cod sending everything to the object b and its identity """
    return GFunctor(dom, cod, [b] * dom.n_objects, [cod.identity[b]] * dom.n_morphisms)


def is_section(s, q):
    """ True iff q o s is the identity """
    return s.cod == q.dom and compose(q, s).is_identity()


class NatIso(object):
    """
    A natural isomorphism source => target between parallel functors A -> B. components[a] is a morphism
    source(a) -> target(a) of B.
    """

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = tuple(components)

    def violation(self):
        F, G = self.source, self.target
        if F.dom != G.dom or F.cod != G.cod:
            return "functors are not parallel"
        A, B = F.dom, F.cod
        if len(self.components) != A.n_objects:
            return "wrong number of components"
        for a in A.objects():
            alpha = self.components[a]
            if B.src[alpha] != F.obj[a] or B.dst[alpha] != G.obj[a]:
                return "component at {} has the wrong endpoints".format(a)
        for m in A.morphisms():
            a, b = A.src[m], A.dst[m]
            if B.compose(G.mor[m], self.components[a]) != B.compose(self.components[b], F.mor[m]):
                return "naturality fails at morphism {}".format(m)
        return None

    def is_natural(self):
        return self.violation() is None

    def is_vertical(self, q):
        """ True iff every component is sent to an identity by q """
        return all(q.cod.is_identity(q.mor[alpha]) for alpha in self.components)

    def is_identity(self):
        B = self.source.cod
        return self.source == self.target and all(B.is_identity(alpha) for alpha in self.components)

    def to_path_map(self, fibration=None):
        """
        :return: the map A -> B^I sending a to the component at a, or A -> P into the relative path object of the
                 given fibration when the components are vertical for it
        """
        from pathcheck.groupoid.constructions import arrow_groupoid, relative_path_object
        path = arrow_groupoid(self.source.cod) if fibration is None else relative_path_object(fibration)
        F, G, A = self.source, self.target, self.source.dom
        return functor_by_labels(A, path.groupoid, lambda a: self.components[a],
                                 lambda m: (self.components[A.src[m]], F.mor[m], G.mor[m]))

    def to_json(self):
        return OrderedDict([("source", self.source.to_json()), ("target", self.target.to_json()),
                            ("components", list(self.components))])

    def __eq__(self, other):
        return isinstance(other, NatIso) and self.source == other.source and self.target == other.target \
            and self.components == other.components

    def __hash__(self):
        return hash((self.source, self.target, self.components))

    def __repr__(self):
        return "NatIso(components={})".format(list(self.components))
