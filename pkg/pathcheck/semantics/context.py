# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Interpreted contexts: chains of fibrations over the terminal groupoid """
from collections import OrderedDict

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.groupoid import compose, identity_functor, terminal
from pathcheck.semantics.fibrations import SemSection


class SemContext(object):
    """
    The chain 1 <- G_1 <- ... <- G_n of the fibrations interpreting the entries of a context. The entry i is a
    fibration over G_i and G_{i+1} is its total.
    """

    def __init__(self, entries=()):
        self.entries = tuple(entries)
        self.total = self.entries[-1][1].total if self.entries else terminal()

    def extend(self, name, fibration):
        if fibration.base != self.total:
            raise GroupoidLawException("{} is not interpreted over the context".format(name))
        return SemContext(self.entries + ((name, fibration),))

    def names(self):
        return [name for name, _ in self.entries]

    def to_prefix(self, length):
        """ :return: the composite projection from the total to the total of the first `length` entries """
        result = identity_functor(self.total)
        for _, fibration in reversed(self.entries[length:]):
            result = compose(fibration.projection, result)
        return result

    def variable(self, name):
        """ :return: the section interpreting the innermost variable called name, or None """
        for position in range(len(self.entries) - 1, -1, -1):
            if self.entries[position][0] == name:
                fibration = self.entries[position][1]
                weakening = self.to_prefix(position + 1)
                sigma = compose(fibration.projection, weakening)
                return SemSection(fibration.substitute(sigma), fibration.factor(sigma, weakening))
        return None

    def violation(self):
        """ :return: the first link of the chain that is not a fibration, or None """
        for name, fibration in self.entries:
            problem = fibration.violation()
            if problem is not None:
                return "{}: {}".format(name, problem)
        return None

    def to_json(self):
        return OrderedDict([("names", self.names()), ("total", self.total.to_json())])

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "SemContext({})".format(self.names())
