# -*- coding: utf-8 -*-
#
# This file is part of pathcheck. See the LICENSE file for more information
# about the licensing of this file.

import io
import json
import os
import shutil
import tempfile

from pathcheck import get_samples_path, __version__
from pathcheck.common.base import write_json_or_yaml
from pathcheck.cli import RunConfig, main
from pathcheck.cli.demos import demo_wfs
from pathcheck.groupoid import DEFAULT_MAX_SEARCH, get_search_limit

ID_PROGRAM = """
assume A : Type
checktype Id A x y given (x : A) (y : A)
"""


def run(*argv, environ=None):
    """ :return: (exit code, printed report) """
    stream = io.StringIO()
    code = main(list(argv), environ=environ if environ is not None else {}, stream=stream)
    return code, stream.getvalue()


def run_json(*argv):
    code, output = run(*argv, "--json")
    return code, json.loads(output) if output else None


class TestCheck(object):
    def test_idconv(self):
        code, report = run_json("check", get_samples_path("idconv.mltt"))
        assert code == 0
        assert report["tool"] == "pathcheck"
        assert report["version"] == __version__
        assert all(goal["status"] == "accepted" for goal in report["goals"])
        assert all(goal["trace"] for goal in report["goals"])

    def test_rules(self):
        code, report = run_json("check", get_samples_path("rules.mltt"))
        assert code == 0
        assert len(report["goals"]) >= 20

    def test_reflection(self):
        code, report = run_json("check", get_samples_path("reflection.mltt"))
        assert code == 1
        assert report["goals"][0]["status"] == "rejected"
        assert "error" in report["goals"][0]
        code, _ = run_json("check", "--extensional", get_samples_path("reflection.mltt"))
        assert code == 0

    def test_strict_j(self):
        assert run("check", get_samples_path("coherence.mltt"))[0] == 1
        assert run("check", "--strict-j", get_samples_path("coherence.mltt"))[0] == 0

    def test_empty(self):
        code, report = run_json("check", get_samples_path("empty.mltt"))
        assert code == 0
        assert report["goals"] == []

    def test_several_files(self):
        code, report = run_json("check", get_samples_path("idconv.mltt"), get_samples_path("sigma.mltt"))
        assert code == 0
        assert report["goals"][0]["name"].startswith(get_samples_path("idconv.mltt") + ":")

    def test_human(self):
        code, output = run("check", get_samples_path("pi.mltt"))
        assert code == 0
        assert output.splitlines()[-1] == "2/2 goals passed"

    def test_deterministic(self):
        first = run("check", "--json", get_samples_path("rules.mltt"))
        assert run("check", "--json", get_samples_path("rules.mltt")) == first


class TestErrors(object):
    def setup_method(self):
        self.dir_path = tempfile.mkdtemp()

    def teardown_method(self):
        shutil.rmtree(self.dir_path)

    def test_parse_error(self):
        path = os.path.join(self.dir_path, "bad.mltt")
        with open(path, "w") as f:
            f.write("assume A : Type\ncheck ( : A\n")
        assert run("check", path)[0] == 2

    def test_missing_file(self):
        assert run("check", os.path.join(self.dir_path, "nothing.mltt"))[0] == 2

    def test_bad_config(self):
        path = os.path.join(self.dir_path, "configuration.yaml")
        write_json_or_yaml(path, {"backend": "cubical"})
        assert run("check", "--config", path, get_samples_path("empty.mltt"))[0] == 2

    def test_bad_environment_variable(self):
        code, _ = run("check", get_samples_path("empty.mltt"), environ={"PATHCHECK_MAX_SEARCH": "-3"})
        assert code == 2

    def test_usage(self):
        assert run()[0] == 2
        assert run("demo", "sorcery")[0] == 2
        assert run("interpret", get_samples_path("idconv.mltt"), "--env", "a.yaml", "--preset", "z2")[0] == 2

    def test_search_limit_is_restored(self):
        run("check", "--max-search", "1000", get_samples_path("empty.mltt"))
        assert get_search_limit() == DEFAULT_MAX_SEARCH

    def test_output_file(self):
        path = os.path.join(self.dir_path, "report.json")
        code, printed = run("check", "--json", "--output", path, get_samples_path("idconv.mltt"))
        assert code == 0
        assert printed == ""
        with open(path) as f:
            assert json.load(f)["tool"] == "pathcheck"


class TestInterpret(object):
    def setup_method(self):
        self.dir_path = tempfile.mkdtemp()

    def teardown_method(self):
        shutil.rmtree(self.dir_path)

    def test_identity_type(self):
        path = os.path.join(self.dir_path, "id.mltt")
        with open(path, "w") as f:
            f.write(ID_PROGRAM)
        code, report = run_json("interpret", path)
        assert code == 0
        witness = report["goals"][0]["witness"]
        assert witness["total"]["objects"] == 4
        assert witness["fibration"] is True

    def test_sigma(self):
        code, report = run_json("interpret", get_samples_path("sigma.mltt"))
        assert code == 0
        assert report["goals"][0]["status"] == "ok"

    def test_pi_is_unsupported(self):
        code, report = run_json("interpret", get_samples_path("pi.mltt"))
        assert code == 1
        assert report["goals"][0]["status"] == "unsupported"
        assert report["goals"][1]["status"] == "ok"

    def test_rejected_goals_are_not_interpreted(self):
        code, report = run_json("interpret", get_samples_path("reflection.mltt"))
        assert code == 1
        assert [goal["status"] for goal in report["goals"]] == ["rejected", "rejected"]

    def test_presets_and_backends(self):
        assert run("interpret", "--preset", "z2", get_samples_path("idconv.mltt"))[0] == 0
        assert run("interpret", "--preset", "discrete-2", "--backend", "discrete",
                   get_samples_path("idconv.mltt"))[0] == 0

    def test_environment_file(self):
        path = os.path.join(self.dir_path, "env.yaml")
        write_json_or_yaml(path, {"preset": "discrete-3"})
        assert run("interpret", "--env", path, get_samples_path("idconv.mltt"))[0] == 0

    def test_bad_environment(self):
        assert run("interpret", "--preset", "interval", "--backend", "discrete",
                   get_samples_path("idconv.mltt"))[0] == 2
        assert run("interpret", "--preset", "moebius", get_samples_path("idconv.mltt"))[0] == 2


class TestDemo(object):
    def test_countermodel(self):
        code, report = run_json("demo", "countermodel")
        assert code == 0
        witness = report["goals"][0]["witness"]
        assert witness["fiber_objects"] == 1
        assert witness["distinct"] is True

    def test_extensional_set(self):
        code, report = run_json("demo", "extensional-set")
        assert code == 0
        assert len(report["goals"]) == 5

    def test_coherence(self):
        code, report = run_json("demo", "coherence")
        assert code == 0
        assert len(report["goals"]) >= 20
        assert any(goal["witness"]["strict_equal"] is False for goal in report["goals"])

    def test_soundness(self):
        code, report = run_json("demo", "soundness", "--seed", "7")
        assert code == 0
        assert len(report["goals"]) == 60

    def test_stability(self):
        code, report = run_json("demo", "stability")
        assert code == 0
        assert len(report["goals"]) == 50

    def test_wfs(self):
        entries = demo_wfs(RunConfig(seed=1), squares=5, factorizations=5, pairs=10)
        assert [entry["name"] for entry in entries] == ["wfs/path-objects", "wfs/universe", "wfs/lifting",
                                                        "wfs/factorization", "wfs/three-for-two"]
        assert all(entry["status"] == "ok" for entry in entries)
        assert entries[2]["witness"]["squares"] == 5

    def test_same_seed_same_report(self):
        assert run("demo", "soundness", "--json", "--seed", "2") == run("demo", "soundness", "--json", "--seed", "2")


class TestHom(object):
    def setup_method(self):
        self.dir_path = tempfile.mkdtemp()

    def teardown_method(self):
        shutil.rmtree(self.dir_path)

    def query(self, data, name="query.json"):
        path = os.path.join(self.dir_path, name)
        write_json_or_yaml(path, data)
        return run_json("hom", path)

    def test_path_object(self):
        code, report = self.query({"query": "path-object", "of": "interval"})
        assert code == 0
        assert report["goals"][0]["witness"]["groupoid"]["objects"] == 4

    def test_classify(self):
        code, report = self.query({"query": "classify", "f": {"diagonal": "interval"}}, "query.yaml")
        assert code == 0
        assert report["goals"][0]["witness"]["fibration"] is False

    def test_several(self):
        r, p = {"path-r": "interval"}, {"path-p": "interval"}
        code, report = self.query({"queries": [{"query": "lift", "name": "square", "f": r, "g": p, "h": r, "k": p},
                                               {"query": "llp", "f": {"diagonal": "discrete-2"},
                                                "g": {"diagonal": "discrete-2"}}]})
        assert code == 1
        assert [goal["name"] for goal in report["goals"]] == ["square", "llp#2"]
        assert [goal["status"] for goal in report["goals"]] == ["ok", "failed"]

    def test_malformed(self):
        code, report = self.query({"query": "classify"})
        assert code == 2
        assert report is None

    def test_unreadable(self):
        path = os.path.join(self.dir_path, "query.json")
        with open(path, "w") as f:
            f.write("{")
        assert run("hom", path)[0] == 2
