import json

import pytest

from homdom.cli import main, parse_corpus_spec, parse_graph_arg
from homdom.graphs import complete_graph, cycle_graph, k4_minus_e, path_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestParsing:
    def test_graph_arg_shorthand(self):
        assert parse_graph_arg("K4-e") == k4_minus_e()
        assert parse_graph_arg("C5") == cycle_graph(5)
        assert parse_graph_arg("P13") == path_graph(13)

    def test_graph_arg_json_and_graph6(self):
        assert parse_graph_arg('{"n":3,"edges":[[0,1],[1,2],[0,2]]}') == \
            complete_graph(3)
        assert parse_graph_arg("Bw") == complete_graph(3)

    def test_graph_arg_file(self, tmp_path):
        f = tmp_path / "g.json"
        f.write_text('{"n":2,"edges":[[0,1]]}')
        assert parse_graph_arg(str(f)) == complete_graph(2)

    def test_corpus_spec(self):
        spec = parse_corpus_spec("exhaustive_n=4,gnp_count=3,gnp_seed=11")
        assert spec.exhaustive_n == 4 and spec.gnp_count == 3
        assert spec.gnp_seed == 11
        with pytest.raises(Exception):
            parse_corpus_spec("bogus_key=1")


class TestExponentCommand:
    def test_exact(self, capsys):
        code, out, _ = run(capsys, "exponent", "--g", "P5", "--h", "P13")
        assert code == 0
        doc = json.loads(out)
        assert doc["result"]["lower"] == "17/39"
        assert doc["result"]["exact"] is True
        assert doc["config"]["command"] == "exponent"

    def test_nonexistent_exit_3(self, capsys):
        code, out, _ = run(capsys, "exponent", "--g", "K3", "--h", "K2")
        assert code == 3
        assert json.loads(out)["result"]["lower"] == "nonexistent"

    def test_bounds(self, capsys):
        code, out, _ = run(capsys, "exponent", "--g", "C5", "--h", "C3")
        assert code == 0
        doc = json.loads(out)["result"]
        assert doc["lower"] == "15/7" and doc["upper"] == "11/5"


class TestVerifyCommand:
    def test_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--g", "C4", "--h", "K2",
                           "--c", "4", "--corpus-spec", "exhaustive_n=5")
        assert code == 0
        doc = json.loads(out)["result"]
        assert doc["ok"] is True and doc["complete"] is True

    def test_violation_exit_1(self, capsys):
        # the clique-plus-isolated-vertices targets in the constructions
        # corpus witness that c = 1/2 is too small for C(K_2, K_3)
        code, out, _ = run(capsys, "verify", "--g", "K2", "--h", "K3",
                           "--c", "1/2", "--corpus-spec", "constructions=1")
        assert code == 1
        doc = json.loads(out)["result"]
        assert doc["violations"]


class TestSearchP6Command:
    def test_no_counterexample(self, capsys):
        code, out, _ = run(capsys, "search-p6", "--i", "2", "--j", "1",
                           "--corpus-spec", "exhaustive_n=4")
        assert code == 0
        assert json.loads(out)["result"]["ok"] is True


class TestConstructCommand:
    def test_behrend(self, capsys):
        code, out, _ = run(capsys, "construct", "--family", "behrend",
                           "--size", "10")
        assert code == 0
        doc = json.loads(out)["result"]
        assert doc["target"]["n"] == 60

    def test_weighted_family(self, capsys):
        code, out, _ = run(capsys, "construct", "--family", "path_blowup",
                           "--params", "k=1,l=1,m=1", "--size", "10")
        assert code == 0
        doc = json.loads(out)["result"]
        assert doc["target"]["format"] == "weighted"
        assert doc["target"]["weights"] == ["1000", "10", "10", "1000"]

    def test_unknown_family_exit_2(self, capsys):
        code, _, err = run(capsys, "construct", "--family", "nope",
                           "--size", "4")
        assert code == 2 and "error" in err


class TestConeCommand:
    def test_even(self, capsys):
        code, out, _ = run(capsys, "cone", "--even", "3")
        assert code == 0
        doc = json.loads(out)["result"]
        assert doc["rays_ok"] is True and doc["equality"] is True

    def test_all(self, capsys):
        code, out, _ = run(capsys, "cone", "--all", "3")
        assert code == 0
        doc = json.loads(out)["result"]
        assert doc["rays_ok"] is True
        assert "conjectured" in doc["equality"]


class TestLpCommand:
    def test_kr(self, capsys):
        code, out, _ = run(capsys, "lp", "--kr", "3")
        assert code == 0
        doc = json.loads(out)["result"]
        assert doc["optimum"] == "5" and doc["certificate_checked"] is True

    def test_file(self, capsys, tmp_path):
        from homdom.ratlp import kr_lp, lp_to_json
        f = tmp_path / "lp.json"
        f.write_text(lp_to_json(kr_lp(2)))
        code, out, _ = run(capsys, "lp", "--file", str(f))
        assert code == 0
        assert json.loads(out)["result"]["optimum"] == "3"


class TestEstimateCommand:
    def test_ratio(self, capsys):
        code, out, _ = run(capsys, "estimate", "--g", "K2", "--h", "K3",
                           "--family", "clique_plus_isolated",
                           "--sizes", "4,8,16")
        assert code == 0
        doc = json.loads(out)["result"]
        assert len(doc["ratios"]) == 3
        assert doc["monotone"] is True


class TestConfigPlumbing:
    def test_seed_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("HOMDOM_SEED", "123")
        _, out, _ = run(capsys, "exponent", "--g", "K2", "--h", "K3")
        assert json.loads(out)["config"]["seed"] == 123

    def test_out_file(self, capsys, tmp_path):
        f = tmp_path / "result.json"
        code, out, _ = run(capsys, "--out", str(f), "exponent",
                           "--g", "P5", "--h", "P13")
        assert code == 0 and out == ""
        doc = json.loads(f.read_text())
        assert doc["result"]["lower"] == "17/39"

    def test_identical_config_identical_output(self, capsys):
        _, out1, _ = run(capsys, "verify", "--g", "C4", "--h", "K2",
                         "--c", "4", "--corpus-spec", "exhaustive_n=4,gnp_count=3")
        _, out2, _ = run(capsys, "verify", "--g", "C4", "--h", "K2",
                         "--c", "4", "--corpus-spec", "exhaustive_n=4,gnp_count=3")
        assert out1 == out2
