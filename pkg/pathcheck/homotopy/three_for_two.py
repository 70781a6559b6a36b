# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" The two-out-of-three property of weak equivalences on a composable pair """
from collections import OrderedDict
from dataclasses import dataclass

from pathcheck.groupoid import compose, is_equivalence


@dataclass(frozen=True)
class ThreeForTwo(object):
    f: bool
    g: bool
    gf: bool

    @property
    def holds(self):
        """ No triple has exactly two weak equivalences and a third map that is not one """
        return [self.f, self.g, self.gf].count(True) != 2

    def to_json(self):
        return OrderedDict([("f", self.f), ("g", self.g), ("gf", self.gf), ("holds", self.holds)])


def three_for_two(f, g):
    """ :return: the equivalence flags of f, g and g o f. Raises GroupoidLawException if f and g do not compose """
    gf = compose(g, f)
    return ThreeForTwo(is_equivalence(f), is_equivalence(g), is_equivalence(gf))
