# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import pytest

from pathcheck.common.exceptions import QueryException
from pathcheck.cli.queries import QueryContext, answer, split_queries
from pathcheck.groupoid import arrow_groupoid, cyclic, diagonal, discrete, interval, product


class TestQueryContext(object):
    def setup_method(self):
        self.context = QueryContext({"Z": cyclic(3).to_json()})

    def test_presets(self):
        assert self.context.groupoid("interval") == interval()
        assert self.context.groupoid("discrete-2") == discrete(2)
        assert self.context.groupoid("terminal").n_objects == 1
        assert self.context.groupoid("empty").n_objects == 0

    def test_named(self):
        assert self.context.groupoid("Z").n_morphisms == 3

    def test_derived(self):
        I = interval()
        assert self.context.groupoid({"product": ["interval", "interval"]}) == product(I, I).groupoid
        assert self.context.groupoid({"path": "interval"}) == arrow_groupoid(I).groupoid

    def test_unknown(self):
        with pytest.raises(QueryException):
            self.context.groupoid("circle")
        with pytest.raises(QueryException):
            self.context.groupoid({"sum": ["interval"]})

    def test_maps(self):
        I = interval()
        assert self.context.map({"diagonal": "interval"}) == diagonal(I)
        assert self.context.map({"path-r": "interval"}) == arrow_groupoid(I).r
        explicit = self.context.map({"dom": "terminal", "cod": "interval", "obj": [1], "mor": [3]})
        assert explicit.obj == (1,)

    def test_bad_maps(self):
        for ref in ({"dom": "terminal", "cod": "interval", "obj": [1], "mor": [0]},
                    {"obj": [0], "mor": [0]},
                    {"compose": [{"diagonal": "interval"}, {"diagonal": "interval"}]},
                    "interval"):
            with pytest.raises(QueryException):
                self.context.map(ref)

    def test_bad_groupoid_data(self):
        with pytest.raises(QueryException):
            QueryContext({"G": {"objects": 1}}).groupoid("G")


class TestAnswer(object):
    def test_path_object(self):
        passed, witness = answer({"query": "path-object", "of": "interval"})
        assert passed
        assert witness["groupoid"]["objects"] == 4
        assert witness["factors_diagonal"] is True

    def test_classify_diagonal(self):
        passed, witness = answer({"query": "classify", "f": {"diagonal": "interval"}})
        assert passed
        assert witness["fibration"] is False
        assert witness["cofibration"] is True

    def test_lift(self):
        r, p = {"path-r": "interval"}, {"path-p": "interval"}
        passed, witness = answer({"query": "lift", "f": r, "g": p, "h": r, "k": p})
        assert passed
        assert witness["filler"] is not None

    def test_lift_without_filler(self):
        query = {"query": "lift",
                 "f": {"dom": "terminal", "cod": "interval", "obj": [0], "mor": [0]},
                 "g": {"dom": "terminal", "cod": "interval", "obj": [0], "mor": [0]},
                 "h": {"identity": "terminal"},
                 "k": {"identity": "interval"}}
        passed, witness = answer(query)
        assert not passed
        assert witness["filler"] is None

    def test_square_must_commute(self):
        query = {"query": "lift",
                 "f": {"dom": "terminal", "cod": "interval", "obj": [0], "mor": [0]},
                 "g": {"identity": "interval"},
                 "h": {"dom": "terminal", "cod": "interval", "obj": [1], "mor": [3]},
                 "k": {"identity": "interval"}}
        with pytest.raises(QueryException):
            answer(query)

    def test_factor(self):
        passed, witness = answer({"query": "factor", "f": {"diagonal": "interval"}})
        assert passed
        assert "violation" not in witness

    def test_llp(self):
        passed, witness = answer({"query": "llp", "f": {"path-r": "interval"}, "g": {"path-p": "interval"}})
        assert passed
        assert witness["counterexample"] is None

    def test_llp_fails(self):
        passed, witness = answer({"query": "llp", "f": {"diagonal": "discrete-2"}, "g": {"diagonal": "discrete-2"}})
        assert not passed
        assert witness["counterexample"] is not None

    def test_homotopy(self):
        identity = {"identity": "interval"}
        passed, witness = answer({"query": "homotopy", "f": identity, "g": identity})
        assert passed
        assert witness["homotopy"] is not None

    def test_three_for_two(self):
        passed, witness = answer({"query": "three-for-two",
                                  "f": {"dom": "terminal", "cod": "interval", "obj": [0], "mor": [0]},
                                  "g": {"terminal": "interval"}})
        assert passed
        assert (witness["f"], witness["g"], witness["gf"]) == (True, True, True)

    def test_malformed(self):
        for query in ({"query": "unify"}, ["lift"], {"query": "classify"}, {"query": "lift", "f": {"identity": "z2"}}):
            with pytest.raises(QueryException):
                answer(query)


class TestSplitQueries(object):
    def test_single(self):
        assert split_queries({"query": "classify"}) == [("classify#1", {"query": "classify"})]

    def test_list(self):
        named = split_queries({"queries": [{"query": "classify", "name": "delta"}, {"query": "factor"}]})
        assert [name for name, _ in named] == ["delta", "factor#2"]

    def test_shared_groupoids(self):
        Z = cyclic(3).to_json()
        named = split_queries({"groupoids": {"Z": Z, "I": "unused"},
                               "queries": [{"query": "classify", "f": {"identity": "Z"}},
                                           {"query": "classify", "f": {"identity": "I"}, "groupoids": {"I": Z}}]})
        assert named[0][1]["groupoids"]["Z"] == Z
        assert named[1][1]["groupoids"]["I"] == Z
        passed, witness = answer(named[1][1])
        assert passed
        assert witness["weak_equivalence"] is True

    def test_bad_list(self):
        with pytest.raises(QueryException):
            split_queries({"queries": "classify"})
