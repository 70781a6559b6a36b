# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Right homotopies between parallel functors, found as maps into a path object """
from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.groupoid import FunctorConstraints, NatIso, arrow_groupoid, compose, first_functor, pairing, \
    relative_path_object


def right_homotopy(f, g, fibration=None):
    """
    :param fibration: when given, f and g must agree after it (sections of it, typically) and the homotopy is
                      searched among the vertical ones
    :return: a natural isomorphism f => g, or None if f and g are not homotopic. It is the identity one when
             f == g and otherwise the one whose list of components is lexicographically least: the objects of the
             path object follow the id order of the arrows they stand for, so the first map of the enumeration into
             the path object over (f, g) gives it. Raises SearchLimitException
    """
    if f.dom != g.dom or f.cod != g.cod:
        raise GroupoidLawException("a homotopy needs parallel maps")
    if fibration is not None:
        if fibration.dom != f.cod:
            raise GroupoidLawException("the fibration does not start at the codomain of the maps")
        if compose(fibration, f) != compose(fibration, g):
            return None
    B = f.cod
    if f == g:
        return NatIso(f, g, [B.identity[b] for b in f.obj])
    path = arrow_groupoid(B) if fibration is None else relative_path_object(fibration)
    ends = pairing(f, g, target=path.p.cod)
    h = first_functor(f.dom, path.groupoid, FunctorConstraints(over=[(path.p, ends)]))
    if h is None:
        return None
    return NatIso(f, g, [path.groupoid.object_labels[x] for x in h.obj])
