# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" The three classes of maps of the model structure on groupoids, decided by exhaustive checks """
from collections import OrderedDict
from dataclasses import dataclass


@dataclass(frozen=True)
class MapClass(object):
    injective_on_objects: bool
    grothendieck_fibration: bool
    equivalence: bool

    @property
    def cofibration(self):
        return self.injective_on_objects

    @property
    def fibration(self):
        return self.grothendieck_fibration

    @property
    def weak_equivalence(self):
        return self.equivalence

    @property
    def acyclic_cofibration(self):
        return self.cofibration and self.weak_equivalence

    @property
    def acyclic_fibration(self):
        return self.fibration and self.weak_equivalence

    def to_json(self):
        return OrderedDict([(name, getattr(self, name)) for name in (
            "injective_on_objects", "grothendieck_fibration", "equivalence", "cofibration", "fibration",
            "weak_equivalence", "acyclic_cofibration", "acyclic_fibration")])


def is_injective_on_objects(f):
    return len(set(f.obj)) == len(f.obj)


def is_fibration(f):
    """ Every morphism of the codomain out of f(e) lifts to a morphism out of e """
    A, B = f.dom, f.cod
    for e in A.objects():
        lifted = {f.mor[m] for m in A.outgoing(e)}
        if any(beta not in lifted for beta in B.outgoing(f.obj[e])):
            return False
    return True


def is_fully_faithful(f):
    A, B = f.dom, f.cod
    for a in A.objects():
        for b in A.objects():
            images = [f.mor[m] for m in A.hom(a, b)]
            if len(set(images)) != len(images) or len(images) != len(B.hom(f.obj[a], f.obj[b])):
                return False
    return True


def is_essentially_surjective(f):
    B = f.cod
    hit = set(f.obj)
    return all(any(b in hit for b in component) for component in B.components())


def is_equivalence(f):
    return is_fully_faithful(f) and is_essentially_surjective(f)


def classify(f):
    """ :return: the MapClass of the functor f """
    return MapClass(is_injective_on_objects(f), is_fibration(f), is_equivalence(f))
