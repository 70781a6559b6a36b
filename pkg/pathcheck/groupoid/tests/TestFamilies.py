# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import random

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.groupoid import chaotic, cyclic, enumerate_functors, find_isomorphism, generating_morphisms, symmetric
from pathcheck.groupoid.families import small_groupoids, random_groupoid, full_subgroupoid, component, \
    disjoint_union, vertex_group

import pytest


class TestFamilies(object):
    def test_small_groupoids_are_valid(self):
        family = small_groupoids(max_objects=3, max_generators=2)
        assert family[0].n_objects == 0
        for G in family:
            assert G.validate()
            assert G.n_objects <= 3

    def test_generator_bound(self):
        # components chaotic(2) x Z/2 need two generators
        family = small_groupoids(max_objects=2, max_generators=1, max_order=2)
        assert all(G.n_morphisms <= 4 for G in family)
        assert any(G.n_morphisms == 4 and G.n_objects == 2 for G in family)

    def test_component(self):
        G = component(2, 3)
        assert (G.n_objects, G.n_morphisms) == (2, 12)
        assert component(3, 1) == chaotic(3)

    def test_disjoint_union(self):
        G = disjoint_union([cyclic(2), chaotic(2)])
        assert G.components() == [[0], [1, 2]]
        assert G.n_morphisms == 6

    def test_random_groupoid_bounds(self):
        rng = random.Random(0)
        for _ in range(50):
            G = random_groupoid(rng, max_objects=4, max_order=3, min_objects=2)
            assert 2 <= G.n_objects <= 4
            assert G.validate()
        with pytest.raises(GroupoidLawException):
            random_groupoid(rng, max_objects=1, min_objects=2)

    def test_random_groupoid_is_shuffled_copy(self):
        rng = random.Random(4)
        G = random_groupoid(rng, max_objects=3, max_order=2, min_objects=3)
        canonical = random_groupoid(random.Random(4), max_objects=3, max_order=2, min_objects=3, shuffle=False)
        assert find_isomorphism(canonical, G) is not None

    def test_full_subgroupoid(self):
        sub, inclusion = full_subgroupoid(chaotic(3), [2, 0])
        assert sub.object_labels == (0, 2)
        assert (sub.n_objects, sub.n_morphisms) == (2, 4)
        assert sub.validate()
        assert inclusion.is_valid()
        assert inclusion.obj == (0, 2)


class TestVertexGroups(object):
    def test_noncyclic_groups_in_the_family(self):
        family = small_groupoids(max_objects=3, max_generators=2)
        assert len(family) == len(small_groupoids(max_objects=3, max_generators=2, noncyclic=False)) + 6
        klein = [G for G in family if (G.n_objects, G.n_morphisms) == (1, 4)]
        s3 = [G for G in family if (G.n_objects, G.n_morphisms) == (1, 6)]
        assert len(klein) == 1 and len(s3) == 1
        assert all(klein[0].inverse(m) == m for m in klein[0].morphisms())
        G = s3[0]
        assert any(G.compose(g, f) != G.compose(f, g) for f in G.morphisms() for g in G.morphisms())

    def test_noncyclic_groups_need_two_generators(self):
        family = small_groupoids(max_objects=3, max_generators=1)
        assert all(G.n_morphisms not in (4, 6) or G.n_objects > 1 for G in family)
        assert len(generating_morphisms(vertex_group("s3"))) == 2
        assert len(generating_morphisms(vertex_group("z2xz2"))) == 2

    def test_homomorphisms(self):
        S3, V = vertex_group("s3"), vertex_group("z2xz2")
        assert S3 == symmetric(3)
        assert len(enumerate_functors(S3, S3)) == 10
        assert len(enumerate_functors(V, V)) == 16
        assert len(enumerate_functors(S3, cyclic(2))) == 2
        assert len(enumerate_functors(cyclic(3), S3)) == 3

    def test_noncyclic_component(self):
        G = component(2, "s3")
        assert (G.n_objects, G.n_morphisms) == (2, 24)
        assert G.validate()
        with pytest.raises(GroupoidLawException):
            vertex_group("q8")

    def test_random_noncyclic(self):
        rng = random.Random(0)
        sizes = set()
        for _ in range(100):
            G = random_groupoid(rng, max_objects=1, min_objects=1, noncyclic=True)
            assert G.validate()
            sizes.add(G.n_morphisms)
        assert sizes == {1, 2, 3, 4, 6}
