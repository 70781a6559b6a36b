# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import tempfile
import shutil
import os
from collections import OrderedDict

import pathcheck.common.custom_yaml as yaml


class TestCustomLoad(object):
    def setup_method(self):
        self.dir_path = tempfile.mkdtemp()

    def teardown_method(self):
        shutil.rmtree(self.dir_path)

    def test_load_ordereddict(self):
        with open(os.path.join(self.dir_path, "env.yaml"), "w") as f:
            f.write("""
            types:
                A: {}
                B: {}
                Aardvark: {}
            """)
        with open(os.path.join(self.dir_path, "env.yaml"), "r") as f:
            loaded = yaml.load(f)
        assert type(loaded["types"]) == OrderedDict
        assert list(loaded["types"].keys()) == ["A", "B", "Aardvark"]

    def test_load_string(self):
        loaded = yaml.load("""
        z: 1
        a: 2
        """)
        assert list(loaded.keys()) == ["z", "a"]


class TestCustomWrite(object):
    def test_write_ordereddict(self):
        d = OrderedDict([("goals", 1), ("tool", 2), ("version", 3)])
        assert yaml.dump(d).splitlines() == ["goals: 1", "tool: 2", "version: 3"]

    def test_write_dict_keeps_insertion_order(self):
        d = {"z": 1, "a": 2}
        assert yaml.load(yaml.dump(d)) == d
        assert yaml.dump(d).startswith("z:")

    def test_write_tuple(self):
        assert yaml.load(yaml.dump({"mor": (0, 1)})) == {"mor": [0, 1]}

    def test_write_nested(self):
        env = OrderedDict([("types", OrderedDict([("A", {"preset": "interval"})])), ("terms", {"a": (0,)})])
        dumped = yaml.dump(env)
        assert dumped.splitlines()[0] == "types:"
        assert "a: [0]" in dumped
        assert yaml.load(dumped) == {"types": {"A": {"preset": "interval"}}, "terms": {"a": [0]}}
