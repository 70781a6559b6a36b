# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Factorization of a functor into an acyclic cofibration followed by a fibration, through its mapping path space """
from collections import OrderedDict

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.groupoid import arrow_groupoid, classify, compose, identity_functor, pairing, product, pullback


class Factorization(object):
    """ f = p o i through the middle groupoid """

    def __init__(self, middle, i, p):
        self.middle = middle
        self.i = i
        self.p = p

    def violation(self, f):
        """ :return: why this is not a factorization of f into an acyclic cofibration and a fibration, or None """
        if self.i.cod != self.middle or self.p.dom != self.middle:
            return "maps do not pass through the middle groupoid"
        if compose(self.p, self.i) != f:
            return "p o i differs from the factored map"
        if not classify(self.i).acyclic_cofibration:
            return "left map is not an acyclic cofibration"
        if not classify(self.p).fibration:
            return "right map is not a fibration"
        return None

    def to_json(self):
        return OrderedDict([("middle", self.middle.to_json()), ("i", self.i.to_json()), ("p", self.p.to_json())])


def factorize(f):
    """
    Factors f: A -> B through the groupoid of pairs (a, beta) with beta a morphism of B out of f(a). A morphism
    (a, beta) -> (a', beta') is a pair (m, psi) with beta' f(m) = psi beta. Then i(a) = (a, id) and p(a, beta) is
    the target of beta.
    """
    A, B = f.dom, f.cod
    path = arrow_groupoid(B)
    ends = product(B, B)
    source = compose(ends.first, path.p)
    cone = pullback(f, source)
    i = pairing(identity_functor(A), compose(path.r, f), target=cone.groupoid)
    p = compose(compose(ends.second, path.p), cone.second)
    factorization = Factorization(cone.groupoid, i, p)
    if compose(p, i) != f:
        raise GroupoidLawException("mapping path space does not recompose to the factored map")
    return factorization
