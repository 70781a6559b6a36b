# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import os
import shutil
import tempfile

import pytest

from pathcheck.common.base import write_json_or_yaml
from pathcheck.common.exceptions import EnvironmentException
from pathcheck.groupoid import cyclic, discrete, interval, terminal_map
from pathcheck.semantics import SemEnv, build_env, env_from_preset, load_env, preset_groupoid
from pathcheck.syntax import parse

SIGNATURE = """
assume A : Type
assume a : A
assume b : A
assume c : A
"""


class TestPresets(object):
    def test_interval(self):
        assert preset_groupoid("interval") == interval()

    def test_z2(self):
        assert preset_groupoid("z2") == cyclic(2)

    def test_discrete(self):
        assert preset_groupoid("discrete-4") == discrete(4)
        assert preset_groupoid("discrete-0").n_objects == 0

    def test_unknown(self):
        for name in ("circle", "discrete-", "discrete-x", None):
            with pytest.raises(EnvironmentException):
                preset_groupoid(name)

    def test_constants_take_the_sections_in_order(self):
        signature, _ = parse(SIGNATURE)
        env = env_from_preset(signature, "interval")
        assert env.constant("a").section.obj == (0,)
        assert env.constant("b").section.obj == (1,)
        assert env.constant("c").section.obj == (0,)

    def test_indexed_family_is_a_product(self):
        signature, _ = parse("assume A : Type\nassume B : (x : A) Type\n")
        env = env_from_preset(signature, "z2")
        fibration = env.family("B").fibration
        assert fibration.dom.n_objects == 1
        assert len(fibration.dom.morphisms()) == 4

    def test_discrete_backend_rejects_the_interval(self):
        signature, _ = parse(SIGNATURE)
        with pytest.raises(EnvironmentException):
            env_from_preset(signature, "interval", "discrete")

    def test_discrete_backend(self):
        signature, _ = parse(SIGNATURE)
        env = env_from_preset(signature, "discrete-3", "discrete")
        assert env.backend == "discrete"
        assert [env.constant(name).section.obj for name in "abc"] == [(0,), (1,), (2,)]

    def test_no_section(self):
        signature, _ = parse(SIGNATURE)
        with pytest.raises(EnvironmentException):
            env_from_preset(signature, "discrete-0")


class TestBuildEnv(object):
    def setup_method(self):
        self.signature, _ = parse("assume A : Type\nassume a : A\n")

    def test_unknown_backend(self):
        with pytest.raises(EnvironmentException):
            SemEnv(self.signature, "simplicial")

    def test_nothing_given(self):
        with pytest.raises(EnvironmentException):
            build_env(self.signature)

    def test_not_a_mapping(self):
        with pytest.raises(EnvironmentException):
            build_env(self.signature, ["interval"])

    def test_explicit(self):
        env = build_env(self.signature, {"types": {"A": interval().to_json()}, "terms": {"a": {"obj": [1], "mor": [3]}}})
        assert env.family("A").fibration == terminal_map(interval())
        assert env.constant("a").section.obj == (1,)

    def test_explicit_overrides_preset(self):
        env = build_env(self.signature, {"preset": "interval", "terms": {"a": {"obj": [1], "mor": [3]}}})
        assert env.constant("a").section.obj == (1,)

    def test_not_a_functor(self):
        with pytest.raises(EnvironmentException):
            build_env(self.signature, {"types": {"A": interval().to_json()}, "terms": {"a": {"obj": [1], "mor": [0]}}})

    def test_malformed(self):
        with pytest.raises(EnvironmentException):
            build_env(self.signature, {"types": {"A": interval().to_json()}, "terms": {"a": {"obj": [1]}}})

    def test_missing_constant(self):
        with pytest.raises(EnvironmentException):
            build_env(self.signature, {"types": {"A": interval().to_json()}})

    def test_unknown_lookup(self):
        env = env_from_preset(self.signature, "interval")
        with pytest.raises(EnvironmentException):
            env.family("B")
        with pytest.raises(EnvironmentException):
            env.constant("b")

    def test_path_structure_is_cached(self):
        env = env_from_preset(self.signature, "interval")
        u = env.family("A").fibration
        assert env.path_structure(u) is env.path_structure(u)
        assert env.path_structure(u).groupoid.n_objects == 4

    def test_discrete_path_structure(self):
        env = env_from_preset(self.signature, "discrete-2", "discrete")
        path = env.path_structure(env.family("A").fibration)
        assert path.groupoid.n_objects == 2

    def test_to_json(self):
        data = env_from_preset(self.signature, "interval").to_json()
        assert data["backend"] == "groupoid"
        assert list(data["types"]) == ["A"]
        assert data["terms"]["a"] == {"obj": [0], "mor": [0]}


class TestLoadEnv(object):
    def setup_method(self):
        self.dir_path = tempfile.mkdtemp()
        self.signature, _ = parse(SIGNATURE)

    def teardown_method(self):
        shutil.rmtree(self.dir_path)

    def test_yaml(self):
        path = os.path.join(self.dir_path, "env.yaml")
        write_json_or_yaml(path, {"backend": "discrete", "preset": "discrete-2"})
        env = load_env(path, self.signature)
        assert env.backend == "discrete"
        assert env.constant("c").section.obj == (0,)

    def test_json(self):
        path = os.path.join(self.dir_path, "env.json")
        write_json_or_yaml(path, {"preset": "interval"})
        assert load_env(path, self.signature).backend == "groupoid"

    def test_backend_override(self):
        path = os.path.join(self.dir_path, "env.json")
        write_json_or_yaml(path, {"backend": "groupoid", "preset": "discrete-2"})
        assert load_env(path, self.signature, "discrete").backend == "discrete"

    def test_missing_file(self):
        with pytest.raises(EnvironmentException):
            load_env(os.path.join(self.dir_path, "nothing.yaml"), self.signature)

    def test_bad_yaml(self):
        path = os.path.join(self.dir_path, "env.yaml")
        with open(path, "w") as f:
            f.write("preset: [interval\n")
        with pytest.raises(EnvironmentException):
            load_env(path, self.signature)
