# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import random

from pathcheck.common.exceptions import SearchLimitException
from pathcheck.groupoid import interval, discrete, chaotic, cyclic, terminal, empty, product, point, compose, \
    FunctorConstraints, iter_functors, enumerate_functors, first_functor, random_functor, find_isomorphism, \
    generating_morphisms, set_search_limit, get_search_limit, DEFAULT_MAX_SEARCH, exponential, identity_functor
from pathcheck.groupoid.families import relabel, random_groupoid

import pytest


class TestGenerators(object):
    def test_chaotic(self):
        gens = generating_morphisms(chaotic(3))
        assert gens.roots == (0,)
        assert gens.tree_objects() == [1, 2]
        assert gens.morphisms() == [1, 2]
        assert len(gens) == 2

    def test_cyclic(self):
        gens = generating_morphisms(cyclic(6))
        assert gens.loops[0] == (1,)
        assert len(gens) == 1

    def test_klein_four(self):
        gens = generating_morphisms(product(cyclic(2), cyclic(2)).groupoid)
        assert gens.loops[0] == (1, 2)

    def test_discrete(self):
        gens = generating_morphisms(discrete(3))
        assert gens.roots == (0, 1, 2)
        assert len(gens) == 0


class TestEnumerate(object):
    def test_counts(self):
        I = interval()
        assert len(enumerate_functors(terminal(), I)) == 2
        assert len(enumerate_functors(I, terminal())) == 1
        assert len(enumerate_functors(I, I)) == 4
        assert len(enumerate_functors(I, I)) == exponential(I, I).n_objects

    def test_groups(self):
        assert len(enumerate_functors(cyclic(2), cyclic(3))) == 1
        assert len(enumerate_functors(cyclic(3), cyclic(3))) == 3
        assert len(enumerate_functors(cyclic(4), cyclic(2))) == 2
        assert len(enumerate_functors(cyclic(6), product(cyclic(2), cyclic(3)).groupoid)) == 6

    def test_empty(self):
        assert len(enumerate_functors(empty(), interval())) == 1
        assert enumerate_functors(interval(), empty()) == []

    def test_all_valid_and_distinct(self):
        rng = random.Random(2)
        for _ in range(15):
            A = random_groupoid(rng, max_objects=3, max_order=2)
            B = random_groupoid(rng, max_objects=3, max_order=3)
            functors = enumerate_functors(A, B)
            assert all(F.is_valid() for F in functors)
            assert len(set(functors)) == len(functors)

    def test_lexicographic_order(self):
        functors = enumerate_functors(interval(), chaotic(3))
        assert [F.obj for F in functors] == sorted(F.obj for F in functors)
        assert functors == sorted(functors)

    def test_deterministic(self):
        A, B = chaotic(2), product(chaotic(2), cyclic(2)).groupoid
        assert enumerate_functors(A, B) == enumerate_functors(A, B)


class TestConstraints(object):
    def test_pins(self):
        I = interval()
        pinned = FunctorConstraints(pins=[(point(I, 0), point(I, 1))])
        functors = enumerate_functors(I, I, pinned)
        assert len(functors) == 2
        assert all(F.obj[0] == 1 for F in functors)

    def test_contradictory_pins(self):
        I, D = interval(), discrete(2)
        pins = [(point(I, 0), point(D, 0)), (point(I, 1), point(D, 1))]
        assert first_functor(I, D, FunctorConstraints(pins)) is None
        clash = [(point(I, 0), point(D, 0)), (point(I, 0), point(D, 1))]
        assert first_functor(I, D, FunctorConstraints(clash)) is None

    def test_over(self):
        I = interval()
        P = product(I, I)
        # functors I -> I x I lying over the identity through the first projection
        functors = enumerate_functors(I, P.groupoid, FunctorConstraints(over=[(P.first, identity_functor(I))]))
        assert len(functors) == 4
        assert all(compose(P.first, F) == identity_functor(I) for F in functors)

    def test_injective(self):
        assert len(enumerate_functors(chaotic(2), chaotic(3), FunctorConstraints(injective_objects=True))) == 6


class TestIsomorphism(object):
    def test_relabelled(self):
        rng = random.Random(9)
        for _ in range(10):
            G = random_groupoid(rng, max_objects=3, max_order=3, shuffle=False)
            copy, _ = relabel(G, rng)
            iso = find_isomorphism(G, copy)
            assert iso is not None
            assert len(set(iso.obj)) == G.n_objects

    def test_not_isomorphic(self):
        assert find_isomorphism(cyclic(4), product(cyclic(2), cyclic(2)).groupoid) is None
        assert find_isomorphism(interval(), discrete(2)) is None
        assert find_isomorphism(interval(), chaotic(3)) is None


class TestSearchLimit(object):
    def setup_method(self):
        self.limit = get_search_limit()

    def teardown_method(self):
        set_search_limit(self.limit)

    def test_default(self):
        assert DEFAULT_MAX_SEARCH == 10 ** 7

    def test_guard(self):
        set_search_limit(10)
        with pytest.raises(SearchLimitException):
            enumerate_functors(chaotic(3), chaotic(3))
        with pytest.raises(SearchLimitException):
            exponential(chaotic(3), discrete(3))
        assert len(enumerate_functors(terminal(), interval())) == 2

    def test_invalid(self):
        with pytest.raises(ValueError):
            set_search_limit(0)
        with pytest.raises(ValueError):
            set_search_limit(None)


class TestRandom(object):
    def test_random_functor(self):
        rng = random.Random(3)
        for _ in range(20):
            A = random_groupoid(rng, max_objects=3, max_order=2)
            B = random_groupoid(rng, max_objects=3, max_order=3, min_objects=1)
            F = random_functor(rng, A, B)
            assert F is not None
            assert F.is_valid()

    def test_none(self):
        assert random_functor(random.Random(0), interval(), empty()) is None

    def test_iter_is_lazy(self):
        functors = iter_functors(chaotic(2), chaotic(3))
        assert next(functors).is_valid()
