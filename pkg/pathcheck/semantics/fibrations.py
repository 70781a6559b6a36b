# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

"""
    Interpreted types and terms.

    A type over a base groupoid G is a fibration into G. It is kept either as the pullback of a generic fibration
    u: E -> U along a classifying map c: G -> U, or as a dependent sum of two such types. Substitution along
    sigma: G' -> G precomposes the classifying maps, so (T[sigma])[tau] and T[sigma o tau] are the same object.
    Terms are sections of the fibration of their type.
"""
from collections import OrderedDict

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.groupoid import compose, identity_functor, pairing, pullback, is_fibration


class SemFibration(object):
    """ A fibration projection: total -> base, with its substitution structure """

    base = None
    total = None
    projection = None

    def substitute(self, sigma):
        """ :return: the pullback of this fibration along sigma: G' -> base """
        raise NotImplementedError()

    def lift(self, sigma):
        """ :return: the canonical map from the total of substitute(sigma) to the total of this fibration """
        raise NotImplementedError()

    def factor(self, sigma, m, base_map=None):
        """
        :param m: a map X -> total
        :param base_map: a map X -> dom(sigma) with sigma o base_map = projection o m, the identity by default
        :return: the unique map s: X -> total of substitute(sigma) with lift(sigma) o s = m and projection o s =
                 base_map
        """
        raise NotImplementedError()

    def generic(self):
        """ :return: the fibration whose relative path object interprets identity types over this type """
        raise NotImplementedError()

    def value(self, s):
        """ :return: the composite of the section s with the map from the total to generic().dom """
        raise NotImplementedError()

    def violation(self):
        if self.projection.cod != self.base:
            return "the projection does not land in the base"
        if not is_fibration(self.projection):
            return "the projection is not a fibration"
        return None

    def to_json(self):
        return OrderedDict([("base", self.base.to_json()), ("total", self.total.to_json()),
                            ("projection", self.projection.to_json()), ("fibration", self.violation() is None)])


class PulledBackFibration(SemFibration):
    """ The pullback of the generic fibration u: E -> U along the classifying map c: G -> U """

    def __init__(self, fibration, classifier):
        if fibration.cod != classifier.cod:
            raise GroupoidLawException("the classifying map does not land in the base of the generic fibration")
        self.fibration = fibration
        self.classifier = classifier
        self._cone = pullback(classifier, fibration)
        self.base = classifier.dom
        self.total = self._cone.groupoid
        self.projection = self._cone.first

    def substitute(self, sigma):
        return PulledBackFibration(self.fibration, compose(self.classifier, sigma))

    def lift(self, sigma):
        pulled = self.substitute(sigma)
        return pairing(compose(sigma, pulled.projection), pulled._cone.second, target=self.total)

    def factor(self, sigma, m, base_map=None):
        if base_map is None:
            base_map = identity_functor(sigma.dom)
        return pairing(base_map, compose(self._cone.second, m), target=self.substitute(sigma).total)

    def generic(self):
        return self.fibration

    def value(self, s):
        return compose(self._cone.second, s)

    def __eq__(self, other):
        return isinstance(other, PulledBackFibration) and self.fibration == other.fibration \
            and self.classifier == other.classifier

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.fibration, self.classifier))

    def __repr__(self):
        return "PulledBackFibration({!r}, {!r})".format(self.total, self.base)


class SigmaFibration(SemFibration):
    """ The dependent sum of `first` over G and `second` over the total of `first`: the composite fibration """

    def __init__(self, first, second):
        if second.base != first.total:
            raise GroupoidLawException("the second component does not lie over the first one")
        self.first = first
        self.second = second
        self.base = first.base
        self.total = second.total
        self.projection = compose(first.projection, second.projection)

    def substitute(self, sigma):
        return SigmaFibration(self.first.substitute(sigma), self.second.substitute(self.first.lift(sigma)))

    def lift(self, sigma):
        return self.second.lift(self.first.lift(sigma))

    def factor(self, sigma, m, base_map=None):
        below = self.first.factor(sigma, compose(self.second.projection, m), base_map)
        return self.second.factor(self.first.lift(sigma), m, below)

    def generic(self):
        # not generic: identity types over a dependent sum are only stable under substitution up to isomorphism
        return self.projection

    def value(self, s):
        return s

    def __eq__(self, other):
        return isinstance(other, SigmaFibration) and self.first == other.first and self.second == other.second

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.first, self.second))

    def __repr__(self):
        return "SigmaFibration({!r}, {!r})".format(self.first, self.second)


class SemSection(object):
    """ A term: a section s: base -> total of the fibration of its type """

    def __init__(self, fibration, functor):
        self.fibration = fibration
        self.functor = functor

    def violation(self):
        if self.functor.dom != self.fibration.base or self.functor.cod != self.fibration.total:
            return "the section does not go from the base to the total"
        if not compose(self.fibration.projection, self.functor).is_identity():
            return "projection o section is not the identity"
        return None

    def substitute(self, sigma):
        """ :return: the section of fibration.substitute(sigma) obtained by pulling this one back along sigma """
        return SemSection(self.fibration.substitute(sigma),
                          self.fibration.factor(sigma, compose(self.functor, sigma)))

    def to_json(self):
        return OrderedDict([("fibration", self.fibration.to_json()), ("section", self.functor.to_json())])

    def __eq__(self, other):
        return isinstance(other, SemSection) and self.fibration == other.fibration and self.functor == other.functor

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.fibration, self.functor))

    def __repr__(self):
        return "SemSection({!r})".format(self.functor)
