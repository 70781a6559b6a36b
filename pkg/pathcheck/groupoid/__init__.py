# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

""" Finite groupoids, functors between them, their constructions and the classes of the model structure """

from pathcheck.groupoid.groupoid import FinGroupoid, build_groupoid, groupoid_from_json
from pathcheck.groupoid.functor import GFunctor, NatIso, functor_from_json, functor_by_labels, identity_functor, \
    compose, constant, is_section
from pathcheck.groupoid.enumeration import FunctorConstraints, iter_functors, enumerate_functors, first_functor, \
    random_functor, find_isomorphism, generating_morphisms, set_search_limit, get_search_limit, DEFAULT_MAX_SEARCH
from pathcheck.groupoid.classify import MapClass, classify, is_fibration, is_equivalence, is_injective_on_objects
from pathcheck.groupoid.constructions import Cone, PathObject, terminal, empty, chaotic, discrete, interval, cyclic, \
    symmetric, product, pullback, coproduct, diagonal, pairing, terminal_map, point, exponential, evaluation, \
    arrow_groupoid, relative_path_object, arrow_functor
