import csv
import io
import json

import pytest

from bei_lab import harness
from bei_lab.cli import analyze, main
from bei_lab.errors import ScaleGuardError
from bei_lab.graph import Graph, canonical_id, to_graph6, to_text

TRIANGLE_PENDANT = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])
TWO_TRIANGLES = Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


def one(name, G, fields=("p32003",)):
    (r,) = harness.run_campaign(name, fields=list(fields), graphs=[G])
    return r


class TestCampaignExamples:
    def test_closed_regularity(self):
        for G, value in [(Graph.path(5), 4), (Graph.complete(5), 1), (TRIANGLE_PENDANT, 2)]:
            r = one("closed_regularity", G)
            m = r.measured
            assert r.verdict and m["ell"] == [value]
            assert m["reg_JG_p32003"] == m["reg_inJG_p32003"] == value

    def test_closed_regularity_monomial_only_at_seven(self):
        r = one("closed_regularity", Graph.path(7))
        assert r.verdict and "reg_JG_p32003" not in r.measured and r.measured["reg_inJG_p32003"] == 6

    def test_mm_bounds(self):
        r = one("mm_bounds", Graph.cycle(4))
        assert r.verdict and 2 <= r.measured["reg_JG_p32003"] <= 3
        r = one("mm_bounds", Graph.path(2))
        assert r.verdict and r.measured["ell"] == [1] and r.measured["reg_JG_p32003"] == 1

    def test_mm_bounds_five_vertices(self):
        res = harness.run_campaign("mm_bounds", 5)
        five = [r for r in res if r.n == 5]
        assert len(five) == 21 and all(r.verdict for r in five)
        tops = [r for r in five if r.measured["reg_JG_p32003"] == 4]
        assert len(tops) == 1 and tops[0].measured["path"]

    def test_weakly_chordal_indmatch(self):
        r = one("weakly_chordal_indmatch", Graph.path(6))
        assert r.verdict and r.measured["weakly_chordal_H"] and r.measured["indmatch_H"] == 5
        r = one("weakly_chordal_indmatch", Graph.complete(6))
        assert r.verdict and r.measured["indmatch_H"] == 1

    def test_chordal_clique_bound(self):
        r = one("chordal_clique_bound", TWO_TRIANGLES)
        assert r.verdict and r.measured["r"] == 2 and r.measured["reg_JG_p32003"] <= 2

    def test_prime_decomposition(self):
        for G in [Graph.path(3), Graph.complete(4), Graph.star(3)]:
            r = one("prime_decomposition", G)
            assert r.verdict and r.measured["intersection_equal_p32003"]
        assert "q1_q2" in one("prime_decomposition", Graph.star(3)).measured

    def test_char_independence(self):
        r = one("char_independence", Graph.path(4))
        assert r.verdict
        assert r.measured["reg_JG_p2"] == r.measured["reg_JG_p32003"] == r.measured["reg_JG_Q"] == 3
        r = one("char_independence", Graph.complete(4))
        assert r.verdict and r.measured["reg_JG_Q"] == 1

    def test_gb_closedness(self):
        r = one("gb_closedness", Graph.path(3))
        assert r.verdict and r.measured == {"labelings": 6, "closed_labelings": 2, "closed": True, "chordal": True}

    def test_selection(self):
        graphs = harness.campaign_graphs("closed_regularity", 4)
        assert all(harness._is_closed(G) for G in graphs)
        assert len(harness.campaign_graphs("mm_bounds", 4)) == 1 + 1 + 2 + 6


class TestGuardsAndConfig:
    @pytest.mark.parametrize("name, bad", [("mm_bounds", 6), ("prime_decomposition", 7),
                                           ("closed_regularity", 8), ("char_independence", 0)])
    def test_guards(self, name, bad):
        with pytest.raises(ScaleGuardError):
            harness.run_campaign(name, bad)

    def test_explicit_graph_guard(self):
        with pytest.raises(ScaleGuardError):
            harness.run_campaign("mm_bounds", graphs=[Graph.path(6)])

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv(harness.CONFIG_ENV, raising=False)
        cfg = harness.CampaignConfig.load()
        assert cfg.fields == ["p32003"] and cfg.jobs == 1
        assert all(cfg.n_max[k] <= c.guard for k, c in harness.CAMPAIGNS.items())

    def test_env_overrides_config_path(self, tmp_path, monkeypatch):
        p = tmp_path / "cfg.json"
        p.write_text(json.dumps({"n_max": {"mm_bounds": 3}, "fields": ["Q"], "jobs": 2}))
        monkeypatch.setenv(harness.CONFIG_ENV, str(p))
        cfg = harness.CampaignConfig.load()
        assert cfg.n_max["mm_bounds"] == 3 and cfg.fields == ["Q"] and cfg.jobs == 2

    def test_bad_config(self, tmp_path):
        p = tmp_path / "cfg.json"
        p.write_text(json.dumps({"colour": "blue"}))
        with pytest.raises(ValueError):
            harness.CampaignConfig.load(p)


class TestReports:
    def test_columns_and_order(self):
        res = harness.run_campaign("mm_bounds", 4, ["p32003", "p2", "Q"])
        text = harness.report_csv(res)
        rows = list(csv.DictReader(io.StringIO(text)))
        assert list(rows[0]) == harness.CSV_COLUMNS
        keys = [(r.n, r.code) for r in res]
        assert keys == sorted(keys)
        path = next(r for r in rows if r["canonical_id"] == canonical_id(Graph.path(4)))
        assert path["edges"] and path["ell"] == "3" and path["reg_JG_Q"] == "3" and path["verdict"] == "pass"

    def test_parallel_output_is_identical(self):
        a = harness.run_campaign("mm_bounds", 5, ["p32003", "p2"], jobs=1)
        b = harness.run_campaign("mm_bounds", 5, ["p32003", "p2"], jobs=3)
        assert harness.report_csv(a) == harness.report_csv(b)
        sa = harness.summary_json(harness.summary("mm_bounds", a, 5, ["p32003", "p2"]))
        sb = harness.summary_json(harness.summary("mm_bounds", b, 5, ["p32003", "p2"]))
        assert sa == sb

    def test_summary_counts(self):
        res = harness.run_campaign("gb_closedness", 4)
        s = harness.summary("gb_closedness", res, 4, ["p32003"])
        assert s["graphs"] == 10 and s["passed"] == 10 and s["failed"] == 0
        assert s["by_n"]["4"] == {"graphs": 6, "passed": 6, "failed": 0}


class TestCLI:
    def test_campaign_pass(self, tmp_path, capsys):
        out = tmp_path / "report.csv"
        code = main(["campaign", "char_independence", "--n-max", "4", "--field", "p32003,p2,Q",
                     "--out", str(out), "--jobs", "2"])
        assert code == 0
        summary = json.loads(out.with_suffix(".json").read_text())
        assert summary["failed"] == 0 and summary["graphs"] == summary["passed"] > 0
        assert out.read_text().startswith(",".join(harness.CSV_COLUMNS))

    def test_campaign_fail_exit_code(self, tmp_path, monkeypatch):
        broken = harness.Campaign("broken", lambda G, fields: ({"n": G.n}, G.n != 3), 4, 4, "always fails on n = 3")
        monkeypatch.setitem(harness.CAMPAIGNS, "broken", broken)
        out = tmp_path / "r.csv"
        assert main(["campaign", "broken", "--out", str(out)]) == 1
        summary = json.loads(out.with_suffix(".json").read_text())
        assert summary["failed"] == 2
        # failures carry everything needed to reproduce them
        for f in summary["failures"]:
            assert f["n"] == 3 and f["canonical_id"] and f["edges"] and f["measured"] == {"n": 3}

    def test_guard_exit_code(self, capsys):
        assert main(["campaign", "mm_bounds", "--n-max", "9"]) == 2
        assert "n_max" in capsys.readouterr().err

    def test_unknown_campaign(self):
        assert main(["campaign", "nope"]) == 2

    def test_missing_config(self, tmp_path):
        assert main(["campaign", "mm_bounds", "--config", str(tmp_path / "none.json")]) == 2

    def test_analyze(self, tmp_path, capsys):
        f = tmp_path / "g.txt"
        f.write_text("# claw\n" + to_text(Graph.star(3)))
        assert main(["analyze", str(f), "--json"]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["closedness"]["closed"] is False
        assert info["closedness"]["obstruction"]["kind"] == "claw"
        assert info["ell"] == [2] and info["r"] == 3 and info["reg_JG_p32003"] == 2

    def test_analyze_graph6_argument(self, capsys):
        assert main(["analyze", to_graph6(Graph.path(4))]) == 0
        out = capsys.readouterr().out
        assert "reg_JG_p32003: 3" in out and "betti_JG:" in out

    def test_analyze_closed_graph(self):
        info = analyze(TRIANGLE_PENDANT)
        assert info["closedness"]["labeling"] and info["ini_graph"] == {"weakly_chordal": True, "indmatch": 2}

    def test_gb(self, tmp_path, capsys):
        f = tmp_path / "star.txt"
        f.write_text("3\n1 2\n1 3\n")
        assert main(["gb", str(f)]) == 0
        lines = [l for l in capsys.readouterr().out.splitlines() if not l.startswith("#")]
        assert lines == ["x1*y2 - x2*y1", "x1*y3 - x3*y1", "x2*y1*y3 - x3*y1*y2", "x1*y2", "x1*y3", "x2*y1*y3"]

    def test_gb_closed_relabel(self, capsys):
        assert main(["gb", to_graph6(Graph.star(2)), "--closed"]) == 0
        lines = [l for l in capsys.readouterr().out.splitlines() if not l.startswith("#")]
        assert lines == ["x1*y2 - x2*y1", "x2*y3 - x3*y2", "x1*y2", "x2*y3"]

    def test_bad_graph_input(self, capsys):
        assert main(["analyze", "not/a/file/or/graph6"]) == 2
