# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import random

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.groupoid import interval, discrete, chaotic, cyclic, terminal, empty, product, pullback, coproduct, \
    diagonal, pairing, terminal_map, point, exponential, evaluation, arrow_groupoid, relative_path_object, \
    arrow_functor, compose, identity_functor, enumerate_functors, find_isomorphism, random_functor, classify
from pathcheck.groupoid.families import random_groupoid

import pytest


class TestSmall(object):
    def test_terminal(self):
        T = terminal()
        assert (T.n_objects, T.n_morphisms) == (1, 1)
        assert T.validate()

    def test_empty(self):
        E = empty()
        assert E.validate()
        assert E.components() == []

    def test_chaotic_and_discrete_share_identity_labels(self):
        assert chaotic(3).morphism_labels[chaotic(3).identity[2]] == (2, 2)
        assert discrete(3).morphism_labels[discrete(3).identity[2]] == (2, 2)
        assert chaotic(3).validate()


class TestLimits(object):
    def test_product(self):
        cone = product(interval(), interval())
        assert cone.groupoid.n_objects == 4
        assert cone.groupoid.n_morphisms == 16
        assert cone.groupoid.validate()
        assert cone.first.is_valid() and cone.second.is_valid()

    def test_product_universal_property(self):
        I, D = interval(), discrete(2)
        P = product(I, D)
        into_product = enumerate_functors(I, P.groupoid)
        assert len(into_product) == len(enumerate_functors(I, I)) * len(enumerate_functors(I, D))
        for h in into_product:
            assert pairing(compose(P.first, h), compose(P.second, h)) == h

    def test_diagonal(self):
        I = interval()
        delta = diagonal(I)
        P = product(I, I).groupoid
        assert delta.is_valid()
        assert P.morphism_labels[delta.mor[1]] == (1, 1)
        assert pairing(identity_functor(I), identity_functor(I)) == delta

    def test_pullback_of_diagonal_along_itself(self):
        I = interval()
        cone = pullback(diagonal(I), diagonal(I))
        assert cone.groupoid.validate()
        assert cone.groupoid.n_objects == 2
        assert find_isomorphism(I, cone.groupoid) is not None
        assert compose(diagonal(I), cone.first) == compose(diagonal(I), cone.second)

    def test_pullback_along_identity(self):
        rng = random.Random(11)
        for _ in range(10):
            A = random_groupoid(rng, max_objects=3, max_order=2)
            C = random_groupoid(rng, max_objects=2, max_order=2, min_objects=1)
            f = random_functor(rng, A, C)
            cone = pullback(f, identity_functor(C))
            assert cone.groupoid.n_objects == A.n_objects
            assert find_isomorphism(A, cone.groupoid) is not None

    def test_pullback_needs_common_codomain(self):
        with pytest.raises(GroupoidLawException):
            pullback(point(interval(), 0), point(cyclic(2), 0))

    def test_fiber_of_path_object(self):
        I = interval()
        path = arrow_groupoid(I)
        over = point(product(I, I).groupoid, product(I, I).groupoid.object_index((0, 1)))
        fiber = pullback(over, path.p).groupoid
        assert fiber.n_objects == 1

    def test_coproduct(self):
        cone = coproduct(interval(), terminal())
        S = cone.groupoid
        assert (S.n_objects, S.n_morphisms) == (3, 5)
        assert S.components() == [[0, 1], [2]]
        assert cone.left.is_valid() and cone.right.is_valid()
        assert cone.right.obj == (2,)

    def test_terminal_map(self):
        assert terminal_map(chaotic(3)).is_valid()
        assert terminal_map(empty()).is_valid()


class TestExponential(object):
    def test_interval_to_interval(self):
        E = exponential(interval(), interval())
        assert E.n_objects == 4
        assert E.n_morphisms == 16
        assert E.validate()

    def test_into_discrete(self):
        E = exponential(interval(), discrete(2))
        assert E.n_objects == 2
        assert E.is_discrete()

    def test_from_terminal(self):
        for B in (cyclic(3), interval(), discrete(2)):
            assert find_isomorphism(B, exponential(terminal(), B)) is not None

    def test_evaluation(self):
        ev = evaluation(interval(), interval())
        assert ev.is_valid()
        E = exponential(interval(), interval())
        P = product(E, interval()).groupoid
        for e in E.objects():
            F = E.object_labels[e]
            for a in interval().objects():
                assert ev.obj[P.object_index((e, a))] == F.obj[a]

    def test_currying(self):
        I, Z2 = interval(), cyclic(2)
        E = exponential(I, Z2)
        assert E.validate()
        # functors I x I -> Z2 correspond to functors I -> Z2^I
        assert len(enumerate_functors(product(I, I).groupoid, Z2)) == len(enumerate_functors(I, E))


class TestPathObjects(object):
    def test_interval(self):
        I = interval()
        path = arrow_groupoid(I)
        assert path.groupoid.n_objects == 4
        assert path.groupoid.validate()
        assert path.r.is_valid() and path.p.is_valid()
        assert path.r.obj == tuple(path.groupoid.object_index(i) for i in I.identity)
        assert compose(path.p, path.r) == diagonal(I)

    def test_random_factor_diagonal(self):
        rng = random.Random(1)
        for _ in range(50):
            A = random_groupoid(rng, max_objects=3, max_order=2)
            path = arrow_groupoid(A)
            assert compose(path.p, path.r) == diagonal(A)

    def test_discrete(self):
        A = discrete(3)
        path = arrow_groupoid(A)
        assert path.groupoid.n_objects == 3
        assert path.groupoid.is_discrete()
        assert classify(path.r).equivalence
        assert find_isomorphism(A, path.groupoid, over=[(path.p, diagonal(A))]) is not None

    def test_arrow_functor(self):
        I = interval()
        assert arrow_functor(identity_functor(I)).is_identity()
        rng = random.Random(4)
        for _ in range(10):
            A = random_groupoid(rng, max_objects=2, max_order=2)
            B = random_groupoid(rng, max_objects=2, max_order=2, min_objects=1)
            C = random_groupoid(rng, max_objects=2, max_order=2, min_objects=1)
            f, g = random_functor(rng, A, B), random_functor(rng, B, C)
            assert arrow_functor(f).is_valid()
            assert arrow_functor(compose(g, f)) == compose(arrow_functor(g), arrow_functor(f))
            assert compose(arrow_functor(f), arrow_groupoid(A).r) == compose(arrow_groupoid(B).r, f)

    def test_relative_over_terminal(self):
        B = chaotic(2)
        assert relative_path_object(terminal_map(B)).groupoid == arrow_groupoid(B).groupoid

    def test_relative_over_projection(self):
        I, Gamma = interval(), cyclic(2)
        g = product(I, Gamma).second
        rel = relative_path_object(g)
        assert rel.groupoid.validate()
        assert compose(rel.p, rel.r).is_valid()
        assert classify(rel.p).fibration
        assert classify(rel.r).acyclic_cofibration
        expected = product(arrow_groupoid(I).groupoid, Gamma).groupoid
        assert find_isomorphism(expected, rel.groupoid) is not None

    def test_relative_over_discrete(self):
        B = discrete(2)
        rel = relative_path_object(identity_functor(B))
        assert rel.groupoid.is_discrete()
        assert rel.groupoid.n_objects == 2

    def test_relative_rejects_non_fibration(self):
        with pytest.raises(GroupoidLawException):
            relative_path_object(diagonal(interval()))
