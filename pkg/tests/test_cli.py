"""그래프 DSL, 리포트 모델, 파이프라인, 표 재현, latticectl 하위 명령, 실행 기록"""
import io
import json

import pytest

from cli.dsl import grammar_help, parse_graph
from cli.pipeline import run_pipeline
from cli.reports import FrameReport, IdentificationReport, PipelineReport
from cli.tables import TABLE1, run_table, run_table1, run_table2, table2_rows
from database.recorder import ReportRecorder
from graphs.constructors import petersen
from latticectl import main
from utils.db import RunDB, get_run_db
from utils.errors import DSLParseError, ReportError, SpectralError

A3_GRAM = "3\n2 -1 0\n-1 2 -1\n0 -1 2\n"


class TestGraphDSL:
    def test_nested_expression(self):
        g = parse_graph("cartesian(complete(3), cycle(4))")
        assert g.n == 12
        assert g.label == "cartesian(complete(3),cycle(4))"

    def test_matches_constructor(self):
        assert parse_graph("petersen") == petersen()
        assert parse_graph("complement(clebsch(5))") == parse_graph("clebsch(10)")

    @pytest.mark.parametrize("text,position", [
        ("petersen(", 9),
        ("foo", 0),
        ("complete(3", 10),
        ("petersen 3", 9),
        ("complete(x)", 9),
        ("hamming(3)", 0),
        ("complete(3)$", 11),
    ])
    def test_errors_report_position(self, text, position):
        with pytest.raises(DSLParseError) as excinfo:
            parse_graph(text)
        assert excinfo.value.position == position
        assert f"position {position}" in str(excinfo.value)

    def test_grammar_help(self):
        text = grammar_help(["petersen", "lexicographic"])
        assert "petersen: KG(5,2)" in text and "lexicographic(G,H)" in text


class TestReports:
    def test_json_is_byte_stable(self):
        report = run_pipeline(petersen(), save=False)
        text = report.to_json()
        assert PipelineReport.from_json(text).to_json() == text

    def test_malformed_json(self):
        with pytest.raises(ReportError):
            PipelineReport.from_json("{}")
        with pytest.raises(ReportError):
            FrameReport.from_json('{"source": "x", "surprise": 1}')

    def test_identification_report_defaults(self):
        report = IdentificationReport(source="a", rank=2, determinant="3")
        assert report.identified == [] and report.confidence == {}


class TestPipeline:
    def test_petersen(self):
        report = run_pipeline(petersen(), save=False)
        assert [r.eigenvalue for r in report.records] == ["3", "1", "-2"]
        assert report.regular_degree == 3
        assert report.distance_regular == "{3,2;1,1}"
        assert report.irrational_degree == 0
        record = report.record_for("-2")
        assert record.success and record.rank == 4 and record.kissing == 10
        assert record.strongly_eutactic
        assert "A4_dual" in record.identified
        assert record.confidence["A4_dual"] == "certified"

    def test_empty_graph(self):
        report = run_pipeline(parse_graph("empty(4)"), save=False)
        (record,) = report.records
        assert record.eigenvalue == "0" and record.multiplicity == 4
        assert record.kissing == 8 and "Z4" in record.identified
        assert report.regular_degree == 0

    def test_selected_eigenvalue(self):
        report = run_pipeline(petersen(), [1], identify=False, save=False)
        assert len(report.records) == 1
        assert report.records[0].identified == []

    def test_missing_eigenvalue(self):
        with pytest.raises(SpectralError):
            run_pipeline(petersen(), [0], save=False)

    def test_complement_check(self):
        report = run_pipeline(petersen(), [-2], check_complement=True, save=False)
        assert report.records[0].complement_matches is True

    def test_complement_check_skipped_at_complement_degree(self):
        report = run_pipeline(parse_graph("complete(5)"), [-1], check_complement=True, save=False)
        (record,) = report.records
        assert record.success and record.complement_matches is None

    def test_parallel_matches_serial(self):
        serial = run_pipeline(petersen(), workers=1, save=False)
        parallel = run_pipeline(petersen(), workers=3, save=False)
        strip = lambda r: [rec.model_dump(exclude={"elapsed"}) for rec in r.records]
        assert strip(serial) == strip(parallel)

    def test_table_text(self):
        text = run_pipeline(petersen(), [-2], save=False).to_table()
        assert text.startswith("petersen: 10 vertices, 3-regular")
        assert "A4_dual" in text

    def test_saved_to_run_db(self, db_file):
        run_pipeline(parse_graph("empty(3)"))
        saved = get_run_db().get_latest_pipeline_report("empty(3)")
        assert saved is not None
        assert saved["report"]["vertices"] == 3
        assert any("empty(3)" in e["message"] for e in get_run_db().get_recent_logs("pipeline"))


class TestTables:
    def test_table1_rows(self):
        assert len(TABLE1) == 14
        assert {r.lattice for r in TABLE1 if r.graph == "gosset"} == {"E7_dual"}

    def test_table2_rows(self):
        rows = table2_rows(5)
        assert len(rows) == 4
        assert rows[0].key == "johnson(4,2) λ=0"
        assert (rows[3].vertices, rows[3].multiplicity, rows[3].lattice) == (10, 5, "A5^2")

    @pytest.mark.parametrize("n_max", [3, 11, 12])
    def test_table2_range(self, n_max):
        with pytest.raises(ReportError):
            table2_rows(n_max)

    def test_octahedron_rows(self):
        run = run_table("table2", table2_rows(4), record=False)
        assert run.passed
        assert [r.status for r in run.results] == ["PASS", "PASS"]

    def test_run_recorded(self, db_file):
        run_table("table2", table2_rows(4))
        runs = ReportRecorder(db_file).get_recent_runs("table2")
        assert len(runs) == 1 and runs[0]["total_rows"] == 2 and runs[0]["failed_rows"] == 0

    @pytest.mark.slow
    def test_table1(self):
        run = run_table1()
        assert run.passed, [r.observed for r in run.failures]

    @pytest.mark.slow
    def test_table2(self):
        run = run_table2(7)
        assert run.passed, [r.observed for r in run.failures]

    @pytest.mark.slow
    def test_table1_complement_projections(self):
        run = run_table1(check_complement=True)
        assert run.passed, [r.observed for r in run.failures]
        skipped = {("empty(4)", "0"), ("complete(5)", "-1")}
        for report in run.reports:
            for rec in report.records:
                expected = None if (report.graph, rec.eigenvalue) in skipped else True
                assert rec.complement_matches is expected, (report.graph, rec.eigenvalue)

    @pytest.mark.slow
    def test_table2_up_to_ten(self):
        run = run_table2(10)
        assert run.passed, [r.observed for r in run.failures]
        status = {r.key: r.status for r in run.results}
        assert status["johnson(8,2) λ=4"] == "PASS"
        assert status["johnson(10,2) λ=6"] == "PASS"
        assert [status[f"johnson({n},2) λ=-2"] for n in (8, 9, 10)] == ["RANK_ONLY"] * 3


class TestLatticectl:
    def test_graph_lattice_json(self, capsys):
        assert main(["graph-lattice", "petersen", "--eigenvalue", "-2", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert "A4_dual" in report["records"][0]["identified"]

    def test_spectrum_only(self, capsys):
        assert main(["graph-lattice", "complete(4)", "--spectrum"]) == 0
        spectrum = json.loads(capsys.readouterr().out)
        assert spectrum["eigenvalues"] == [{"eigenvalue": "3", "multiplicity": 1},
                                           {"eigenvalue": "-1", "multiplicity": 3}]

    def test_parse_error_exit_code(self, capsys):
        assert main(["graph-lattice", "petersen(3"]) == 2
        assert "DSLParseError" in capsys.readouterr().err

    def test_not_an_eigenvalue_exit_code(self, capsys):
        assert main(["graph-lattice", "petersen", "--eigenvalue", "0"]) == 2
        assert "SpectralError" in capsys.readouterr().err

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            main(["tables"])

    def test_frame_simplex(self, capsys, tmp_path):
        target = tmp_path / "simplex3.csv"
        assert main(["frame", "--simplex", "3", "--write", str(target), "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["tight"] and report["gamma"] == "3/4"
        assert report["rationality_verified"]
        assert "A3_dual" in report["lattice_identified"]
        assert target.exists()

        assert main(["frame", str(target), "--json"]) == 0
        assert json.loads(capsys.readouterr().out)["vectors"] == 4

    def test_frame_numeric_irrational(self, capsys, tmp_path):
        target = tmp_path / "irrational.csv"
        target.write_text("1.0,1.4142135623730951\n")
        assert main(["frame", str(target), "--numeric", "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["rational"] is False and report["discreteness"] is not None

    def test_frame_without_input(self, capsys):
        assert main(["frame"]) == 2
        assert "FrameError" in capsys.readouterr().err

    def test_identify_gram_file(self, capsys, tmp_path):
        target = tmp_path / "a3.gram"
        target.write_text(A3_GRAM)
        assert main(["identify-gram", str(target), "--json"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["source"] == "a3" and report["determinant"] == "4"
        assert report["identified"] == ["A3"] and report["kissing"] == 12
        assert report["eutaxy"] == "strong" and report["perfect"]

    def test_identify_gram_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(A3_GRAM))
        assert main(["identify-gram", "--minimal-vectors"]) == 0
        out = capsys.readouterr().out
        assert "A3 (certified)" in out
        assert "# min_norm_sq 2 kissing 12" in out

    def test_identify_gram_missing(self, capsys, tmp_path):
        assert main(["identify-gram", str(tmp_path / "none.gram")]) == 2
        assert "ReportError" in capsys.readouterr().err

    def test_cs(self, capsys, tmp_path):
        args = ["cs", "--sts", "7", "--trials", "3", "--max-sparsity", "2",
                "--output-dir", str(tmp_path), "--json"]
        assert main(args) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["parameters"]["cols"] == 28
        assert len(payload["results"]) == 2 * 4
        assert (tmp_path / "sts7.csv").exists() and (tmp_path / "sts7.dat").exists()

    def test_cs_rounding_path(self, capsys, tmp_path):
        args = ["cs", "--sts", "7", "--trials", "3", "--max-sparsity", "1", "--rounding-path",
                "--output-dir", str(tmp_path), "--json"]
        assert main(args) == 0
        methods = [r["method"] for r in json.loads(capsys.readouterr().out)["results"]]
        assert methods == ["LS", "HT", "OMP", "PrOMP", "PrOMP-R"]

    def test_cs_invalid_order(self, capsys, tmp_path):
        assert main(["cs", "--sts", "8", "--output-dir", str(tmp_path)]) == 2
        assert "DesignError" in capsys.readouterr().err


class TestRecorders:
    def test_report_recorder(self, db_file, capsys):
        recorder = ReportRecorder(db_file)
        rows = [
            {"key": "a", "expected": "x", "observed": "x", "status": "PASS"},
            {"key": "b", "expected": "y", "observed": "z", "status": "FAIL"},
        ]
        run_id = recorder.save_table_run("table1", rows, 1.5)
        assert [r["row_key"] for r in recorder.get_run_rows(run_id)] == ["a", "b"]
        (latest,) = recorder.get_recent_runs("table1")
        assert latest["failed_rows"] == 1 and latest["total_rows"] == 2
        recorder.print_run_summary("table1")
        assert "1/2 rows" in capsys.readouterr().out
        recorder.print_run_summary("table2")
        assert "No table runs recorded for table2" in capsys.readouterr().out

    def test_run_db(self, db_file):
        db = RunDB(db_file)
        db.save_pipeline_report("g", '{"graph": "g"}', 0.1)
        db.save_pipeline_report("g", '{"graph": "g2"}', 0.2)
        assert db.get_latest_pipeline_report("g")["report"] == {"graph": "g2"}
        assert db.get_latest_pipeline_report("h") is None
        db.log_event("tests", "INFO", "hello")
        assert db.get_recent_logs("tests")[0]["message"] == "hello"
        db.close()
