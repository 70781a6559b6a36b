# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import random

from pathcheck.common.exceptions import GroupoidLawException
from pathcheck.groupoid import FinGroupoid, GFunctor, NatIso, groupoid_from_json, functor_from_json, interval, \
    discrete, chaotic, cyclic, terminal, point, compose, identity_functor, constant, is_section, arrow_groupoid
from pathcheck.groupoid.families import relabel

import pytest


def monoid_with_idempotent():
    """ One object, an identity and an idempotent e with e o e = e """
    return FinGroupoid(1, [0, 0], [0, 0], [0], {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}, [0, 1])


class TestValidate(object):
    def test_discrete(self):
        assert discrete(2).validate()
        assert discrete(2).is_discrete()

    def test_interval(self):
        I = interval()
        assert I.validate()
        assert I.n_objects == 2
        assert I.n_morphisms == 4
        assert I.hom(0, 1) == (1,)
        assert I.inverse(1) == 2
        assert not I.is_discrete()

    def test_non_invertible(self):
        G = monoid_with_idempotent()
        assert not G.validate()
        assert "inverse" in G.violation()

    def test_missing_composite(self):
        I = interval()
        comp = dict(I.comp)
        del comp[(1, 0)]
        G = FinGroupoid(2, I.src, I.dst, I.identity, comp, I.inv)
        assert "missing" in G.violation()

    def test_bad_identity(self):
        G = FinGroupoid(2, [0, 1], [0, 1], [1, 0], {(0, 0): 0, (1, 1): 1}, [0, 1])
        assert "identity" in G.violation()

    def test_cyclic(self):
        Z3 = cyclic(3)
        assert Z3.validate()
        assert Z3.compose(1, 2) == 0
        assert Z3.inverse(1) == 2
        assert Z3.compose_all(1, 1, 1) == 0
        with pytest.raises(GroupoidLawException):
            cyclic(0)

    def test_not_composable(self):
        with pytest.raises(GroupoidLawException):
            interval().compose(1, 1)

    def test_components(self):
        assert discrete(3).components() == [[0], [1], [2]]
        assert chaotic(3).components() == [[0, 1, 2]]
        assert chaotic(3).outgoing(1) == (3, 4, 5)


class TestLabels(object):
    def test_labels_not_in_equality(self):
        I = interval()
        copy = FinGroupoid(I.n_objects, I.src, I.dst, I.identity, I.comp, I.inv)
        assert copy == I
        assert hash(copy) == hash(I)
        assert copy.object_labels == (0, 1)
        assert I.morphism_labels[1] == (0, 1)

    def test_lookup(self):
        I = interval()
        assert I.morphism_index((1, 0)) == 2
        assert I.has_object_label(1)
        assert not I.has_object_label(5)
        with pytest.raises(GroupoidLawException):
            I.morphism_index((2, 2))


class TestJson(object):
    def test_groupoid(self):
        I = interval()
        data = I.to_json()
        assert data["objects"] == 2
        assert data["morphisms"][1] == {"id": 1, "src": 0, "dst": 1}
        assert groupoid_from_json(data) == I

    def test_malformed(self):
        with pytest.raises(GroupoidLawException):
            groupoid_from_json({"objects": 1})
        with pytest.raises(GroupoidLawException):
            groupoid_from_json({"objects": "x", "morphisms": [], "identity": [], "comp": [], "inv": []})

    def test_sparse_ids(self):
        data = terminal().to_json()
        data["morphisms"][0]["id"] = 3
        with pytest.raises(GroupoidLawException):
            groupoid_from_json(data)

    def test_invalid_laws(self):
        with pytest.raises(GroupoidLawException):
            groupoid_from_json(monoid_with_idempotent().to_json())

    def test_functor(self):
        I = interval()
        swap = GFunctor(I, I, [1, 0], [3, 2, 1, 0])
        assert functor_from_json(swap.to_json(), I, I) == swap
        with pytest.raises(GroupoidLawException):
            functor_from_json({"obj": [0, 0], "mor": [0, 1, 2, 3]}, I, I)
        with pytest.raises(GroupoidLawException):
            functor_from_json({"obj": [0]}, I, I)


class TestFunctor(object):
    def test_laws(self):
        I = interval()
        assert GFunctor(I, I, [1, 0], [3, 2, 1, 0]).is_valid()
        assert "endpoints" in GFunctor(I, I, [0, 0], [1, 1, 1, 1]).violation()
        assert "sizes" in GFunctor(I, I, [0], [0]).violation()
        assert "leaves" in GFunctor(I, I, [0, 7], [0, 0, 0, 0]).violation()

    def test_composition_not_preserved(self):
        Z2, Z3 = cyclic(2), cyclic(3)
        assert "composite" in GFunctor(Z3, Z2, [0], [0, 1, 1]).violation()

    def test_compose(self):
        I = interval()
        swap = GFunctor(I, I, [1, 0], [3, 2, 1, 0])
        assert compose(swap, swap).is_identity()
        assert compose(identity_functor(I), swap) == swap
        with pytest.raises(GroupoidLawException):
            compose(swap, point(cyclic(2), 0))

    def test_constant_and_section(self):
        I = interval()
        c = constant(I, I, 1)
        assert c.is_valid()
        assert c.mor == (3, 3, 3, 3)
        path = arrow_groupoid(I)
        assert not is_section(path.r, path.p)
        assert is_section(identity_functor(I), identity_functor(I))

    def test_order(self):
        I = interval()
        assert GFunctor(I, I, [0, 0], [0, 0, 0, 0]) < GFunctor(I, I, [0, 1], [0, 1, 2, 3])

    def test_relabel(self):
        rng = random.Random(5)
        for _ in range(10):
            G = chaotic(2) if rng.random() < 0.5 else cyclic(4)
            copy, iso = relabel(G, rng)
            assert copy.validate()
            assert iso.is_valid()
            assert len(set(iso.mor)) == G.n_morphisms


class TestNatIso(object):
    def test_points_of_interval(self):
        I = interval()
        alpha = NatIso(point(I, 0), point(I, 1), [1])
        assert alpha.is_natural()
        assert not alpha.is_identity()
        assert "endpoints" in NatIso(point(I, 0), point(I, 1), [0]).violation()

    def test_naturality_fails(self):
        Z3 = cyclic(3)
        F = identity_functor(Z3)
        G = GFunctor(Z3, Z3, [0], [0, 2, 1])
        assert "naturality" in NatIso(F, G, [1]).violation()
        assert NatIso(F, F, [1]).is_natural()

    def test_not_parallel(self):
        I = interval()
        assert NatIso(point(I, 0), identity_functor(I), [0]).violation() == "functors are not parallel"

    def test_to_path_map(self):
        I = interval()
        alpha = NatIso(point(I, 0), point(I, 1), [1])
        h = alpha.to_path_map()
        path = arrow_groupoid(I)
        assert h.is_valid()
        assert h.cod == path.groupoid
        assert path.groupoid.object_labels[h.obj[0]] == 1
        p_h = compose(path.p, h)
        assert p_h.obj == (path.p.cod.object_index((0, 1)),)

    def test_identity_transformation(self):
        I = interval()
        alpha = NatIso(identity_functor(I), identity_functor(I), [0, 3])
        assert alpha.is_identity()
        assert alpha.to_path_map() == arrow_groupoid(I).r
        assert alpha.to_json()["components"] == [0, 3]
