# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Finite groupoids given by full composition tables.

    Objects are 0..n-1 and morphisms 0..m-1. Every groupoid also carries object and morphism labels, which are not
    part of its identity: constructions use them to find elements again (the object (a, b) of a product, ...).
"""
from collections import OrderedDict, deque

from pathcheck.common.exceptions import GroupoidLawException


class FinGroupoid(object):
    """ A finite groupoid. Instances are immutable and hashable; equality compares the tables, not the labels """

    def __init__(self, n_objects, src, dst, identity, comp, inv, object_labels=None, morphism_labels=None):
        """
        :param n_objects: number of objects
        :param src: source object of each morphism
        :param dst: target object of each morphism
        :param identity: identity morphism of each object
        :param comp: dict (g, f) -> g o f, for every pair with dst(f) == src(g)
        :param inv: inverse of each morphism
        """
        self.n_objects = n_objects
        self.src = tuple(src)
        self.dst = tuple(dst)
        self.identity = tuple(identity)
        self.comp = dict(comp)
        self.inv = tuple(inv)
        self.object_labels = tuple(object_labels) if object_labels is not None else tuple(range(n_objects))
        self.morphism_labels = tuple(morphism_labels) if morphism_labels is not None \
            else tuple(range(len(self.src)))

        self._key = (n_objects, self.src, self.dst, self.identity, tuple(sorted(self.comp.items())), self.inv)
        self._hash = hash(self._key)
        self._object_index = None
        self._morphism_index = None
        self._hom = None
        self._outgoing = None

    # Structure

    @property
    def n_morphisms(self):
        return len(self.src)

    def objects(self):
        return range(self.n_objects)

    def morphisms(self):
        return range(len(self.src))

    def compose(self, g, f):
        """ :return: g o f. Raises GroupoidLawException when f and g are not composable """
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise GroupoidLawException("morphisms {} and {} are not composable".format(g, f))

    def compose_all(self, *morphisms):
        """ compose_all(h, g, f) is h o g o f """
        result = morphisms[-1]
        for m in reversed(morphisms[:-1]):
            result = self.compose(m, result)
        return result

    def inverse(self, m):
        return self.inv[m]

    def is_identity(self, m):
        return self.identity[self.src[m]] == m

    def is_discrete(self):
        return all(self.is_identity(m) for m in self.morphisms())

    def hom(self, a, b):
        """ :return: the sorted tuple of morphisms a -> b """
        if self._hom is None:
            hom = {}
            for m in self.morphisms():
                hom.setdefault((self.src[m], self.dst[m]), []).append(m)
            self._hom = {key: tuple(value) for key, value in hom.items()}
        return self._hom.get((a, b), ())

    def outgoing(self, a):
        """ :return: the sorted tuple of morphisms with source a """
        if self._outgoing is None:
            outgoing = [[] for _ in self.objects()]
            for m in self.morphisms():
                outgoing[self.src[m]].append(m)
            self._outgoing = tuple(tuple(ms) for ms in outgoing)
        return self._outgoing[a]

    def components(self):
        """ :return: the connected components, as sorted lists of objects, ordered by their least object """
        seen = [False] * self.n_objects
        result = []
        for root in self.objects():
            if seen[root]:
                continue
            seen[root] = True
            component, queue = [], deque([root])
            while queue:
                a = queue.popleft()
                component.append(a)
                for m in self.outgoing(a):
                    if not seen[self.dst[m]]:
                        seen[self.dst[m]] = True
                        queue.append(self.dst[m])
            result.append(sorted(component))
        return result

    # Labels

    def object_index(self, label):
        if self._object_index is None:
            self._object_index = {lbl: i for i, lbl in enumerate(self.object_labels)}
        try:
            return self._object_index[label]
        except KeyError:
            raise GroupoidLawException("no object labelled {!r}".format(label))

    def morphism_index(self, label):
        if self._morphism_index is None:
            self._morphism_index = {lbl: i for i, lbl in enumerate(self.morphism_labels)}
        try:
            return self._morphism_index[label]
        except KeyError:
            raise GroupoidLawException("no morphism labelled {!r}".format(label))

    def has_object_label(self, label):
        try:
            self.object_index(label)
        except GroupoidLawException:
            return False
        return True

    # Laws

    def violation(self):
        """ :return: a description of the first violated groupoid law, or None """
        n, m = self.n_objects, self.n_morphisms
        if len(self.dst) != m or len(self.inv) != m or len(self.identity) != n:
            return "table sizes do not match"
        for f in self.morphisms():
            if not (0 <= self.src[f] < n and 0 <= self.dst[f] < n):
                return "morphism {} has an unknown source or target".format(f)
        for a in self.objects():
            i = self.identity[a]
            if not 0 <= i < m or self.src[i] != a or self.dst[i] != a:
                return "identity of object {} is not an endomorphism of it".format(a)
        for f in self.morphisms():
            for g in self.outgoing(self.dst[f]):
                gf = self.comp.get((g, f))
                if gf is None:
                    return "composite of {} and {} is missing".format(g, f)
                if not 0 <= gf < m or self.src[gf] != self.src[f] or self.dst[gf] != self.dst[g]:
                    return "composite of {} and {} has the wrong endpoints".format(g, f)
        if len(self.comp) != sum(len(self.outgoing(self.dst[f])) for f in self.morphisms()):
            return "composition is defined on non-composable pairs"
        for f in self.morphisms():
            if self.comp[(self.identity[self.dst[f]], f)] != f or self.comp[(f, self.identity[self.src[f]])] != f:
                return "identity law fails for morphism {}".format(f)
        for f in self.morphisms():
            for g in self.outgoing(self.dst[f]):
                for h in self.outgoing(self.dst[g]):
                    if self.comp[(h, self.comp[(g, f)])] != self.comp[(self.comp[(h, g)], f)]:
                        return "composition of {}, {}, {} is not associative".format(h, g, f)
        for f in self.morphisms():
            g = self.inv[f]
            if not 0 <= g < m or self.src[g] != self.dst[f] or self.dst[g] != self.src[f] \
                    or self.comp[(g, f)] != self.identity[self.src[f]] \
                    or self.comp[(f, g)] != self.identity[self.dst[f]]:
                return "morphism {} has no two-sided inverse".format(f)
        return None

    def validate(self):
        """ :return: True iff the category and groupoid laws hold """
        return self.violation() is None

    # Serialization

    def to_json(self):
        return OrderedDict([
            ("objects", self.n_objects),
            ("morphisms", [OrderedDict([("id", m), ("src", self.src[m]), ("dst", self.dst[m])])
                           for m in self.morphisms()]),
            ("identity", list(self.identity)),
            ("comp", [[g, f, gf] for (g, f), gf in sorted(self.comp.items())]),
            ("inv", list(self.inv)),
        ])

    # Python protocol

    def __eq__(self, other):
        return isinstance(other, FinGroupoid) and (self is other or self._key == other._key)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "FinGroupoid({} objects, {} morphisms)".format(self.n_objects, self.n_morphisms)


def build_groupoid(object_labels, morphism_labels, src, dst, compose, identity, inverse):
    """
    Builds a groupoid from labels and operations on labels.
    :param object_labels: list of hashable object labels, in id order
    :param morphism_labels: list of hashable morphism labels, in id order
    :param src: morphism label -> object label (and dst likewise)
    :param compose: (g label, f label) -> label of g o f
    :param identity: object label -> morphism label
    :param inverse: morphism label -> morphism label
    """
    object_labels = list(object_labels)
    morphism_labels = list(morphism_labels)
    obj = {label: i for i, label in enumerate(object_labels)}
    mor = {label: i for i, label in enumerate(morphism_labels)}
    src_ids = [obj[src(label)] for label in morphism_labels]
    dst_ids = [obj[dst(label)] for label in morphism_labels]
    outgoing = [[] for _ in object_labels]
    for m, a in enumerate(src_ids):
        outgoing[a].append(m)
    comp = {}
    for f, f_label in enumerate(morphism_labels):
        for g in outgoing[dst_ids[f]]:
            comp[(g, f)] = mor[compose(morphism_labels[g], f_label)]
    return FinGroupoid(len(object_labels), src_ids, dst_ids, [mor[identity(label)] for label in object_labels],
                       comp, [mor[inverse(label)] for label in morphism_labels], object_labels, morphism_labels)


def groupoid_from_json(data):
    """ Reads the JSON form of a groupoid. Raises GroupoidLawException on malformed or invalid data """
    try:
        n = int(data["objects"])
        morphisms = sorted(data["morphisms"], key=lambda entry: int(entry["id"]))
        if [int(entry["id"]) for entry in morphisms] != list(range(len(morphisms))):
            raise GroupoidLawException("morphism ids must be dense and start at 0")
        src = [int(entry["src"]) for entry in morphisms]
        dst = [int(entry["dst"]) for entry in morphisms]
        identity = [int(i) for i in data["identity"]]
        comp = {}
        for entry in data["comp"]:
            g, f, gf = (int(x) for x in entry)
            if (g, f) in comp:
                raise GroupoidLawException("composite of {} and {} given twice".format(g, f))
            comp[(g, f)] = gf
        inv = [int(i) for i in data["inv"]]
    except GroupoidLawException:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise GroupoidLawException("malformed groupoid: {}".format(e))
    if n < 0:
        raise GroupoidLawException("negative object count")
    groupoid = FinGroupoid(n, src, dst, identity, comp, inv)
    problem = groupoid.violation()
    if problem is not None:
        raise GroupoidLawException(problem)
    return groupoid
