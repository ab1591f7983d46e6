import json

import numpy as np
import pytest
from PIL import Image

from deckeval.cli import main
from deckeval.report import TABLE_HEADER


@pytest.fixture
def deck_dir(tmp_path):
    rng = np.random.default_rng(7)
    for i in range(1, 4):
        arr = rng.integers(0, 256, size=(36, 48, 3), dtype=np.uint8)
        Image.fromarray(arr).save(tmp_path / f"slide_{i}.png")
        (tmp_path / f"slide_{i}.layout.json").write_text(json.dumps({
            "elements": [{"label": "text", "score": 0.9, "coordinate": [4, 4, 40, 20]}]
        }), "utf-8")
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_struct_output(self, deck_dir, capsys):
        code, out, err = run(capsys, "eval", str(deck_dir), "--topic", "t", "--system", "s")
        assert code == 0
        data = json.loads(out)
        assert data["deck"]["topic"] == "t"
        assert "aesthetics" in data

    def test_table_output(self, deck_dir, capsys):
        code, out, _ = run(capsys, "eval", str(deck_dir), "--format", "table")
        assert code == 0
        assert out.splitlines()[0] == TABLE_HEADER

    def test_output_file(self, deck_dir, tmp_path, capsys):
        out_file = tmp_path / "report.json"
        code, _, _ = run(capsys, "eval", str(deck_dir), "--out", str(out_file))
        assert code == 0
        assert json.loads(out_file.read_text())["deck"]["slide_count"] == 3

    def test_with_package_and_config(self, deck_dir, tmp_path, capsys):
        from deckeval.pei import build_fixture
        pkg = tmp_path / "native.pptx"
        pkg.write_bytes(build_fixture("l4"))
        cfg = tmp_path / "engine.cfg"
        cfg.write_text("harmony.sigma = 0.02\n", "utf-8")
        code, out, _ = run(capsys, "eval", str(deck_dir), "--pptx", str(pkg),
                           "--config", str(cfg))
        assert code == 0
        data = json.loads(out)
        assert data["pei"]["level"] == "L4"
        assert data["config"]["harmony"]["sigma"] == 0.02

    def test_missing_deck_is_input_error(self, tmp_path, capsys):
        code, _, err = run(capsys, "eval", str(tmp_path / "missing"))
        assert code == 1
        assert "error:" in err


class TestPei:
    def test_fixture_classification(self, tmp_path, capsys):
        from deckeval.pei import build_fixture
        path = tmp_path / "deck.pptx"
        path.write_bytes(build_fixture("l2"))
        code, out, _ = run(capsys, "pei", str(path))
        assert code == 0
        assert json.loads(out)["level"] == "L2"

    def test_pdf(self, tmp_path, capsys):
        path = tmp_path / "deck.pdf"
        path.write_bytes(b"%PDF-1.4\n%%EOF\n")
        code, out, _ = run(capsys, "pei", str(path))
        assert code == 0
        assert json.loads(out)["level"] == "L0"

    def test_corrupt_package_is_input_error(self, tmp_path, capsys):
        path = tmp_path / "deck.pptx"
        path.write_bytes(b"garbage")
        code, _, err = run(capsys, "pei", str(path))
        assert code == 1
        assert "corrupt" in err


class TestFixturesCommand:
    def test_emits_canonical_set(self, tmp_path, capsys):
        out_dir = tmp_path / "fixtures"
        code, out, _ = run(capsys, "fixtures", "--out", str(out_dir))
        assert code == 0
        names = sorted(p.name for p in out_dir.iterdir())
        assert names == ["fixture_l0.pdf", "fixture_l1.pptx", "fixture_l2.pptx",
                         "fixture_l3.pptx", "fixture_l4.pptx", "fixture_l5.pptx"]

    def test_selected_kinds(self, tmp_path, capsys):
        out_dir = tmp_path / "fx"
        code, _, _ = run(capsys, "fixtures", "--out", str(out_dir), "--kinds", "l5")
        assert code == 0
        assert [p.name for p in out_dir.iterdir()] == ["fixture_l5.pptx"]


class TestAlign:
    def make_reports(self, tmp_path):
        reports = tmp_path / "reports"
        reports.mkdir()
        scores = {
            ("t1", "alpha"): 30.0, ("t1", "beta"): 20.0, ("t1", "gamma"): 10.0,
            ("t2", "alpha"): 10.0, ("t2", "beta"): 30.0, ("t2", "gamma"): 20.0,
        }
        for (topic, system), aesthetics in scores.items():
            payload = {"deck": {"topic": topic, "system": system}, "aesthetics": aesthetics}
            (reports / f"{topic}_{system}.json").write_text(json.dumps(payload), "utf-8")
        human = tmp_path / "human.txt"
        human.write_text("t1: alpha > beta > gamma\nt2: beta > gamma > alpha\n", "utf-8")
        return reports, human

    def test_end_to_end(self, tmp_path, capsys):
        reports, human = self.make_reports(tmp_path)
        code, out, _ = run(capsys, "align", "--reports", str(reports), "--human", str(human))
        assert code == 0
        data = json.loads(out)
        assert data["spearman_avg"] == pytest.approx(1.0)
        assert data["identical_pct"] == pytest.approx(100.0)
        assert data["topics_used"] == 2

    def test_table_format(self, tmp_path, capsys):
        reports, human = self.make_reports(tmp_path)
        code, out, _ = run(capsys, "align", "--reports", str(reports),
                           "--human", str(human), "--format", "table")
        assert code == 0
        assert out.startswith("spearman_avg,")

    def test_missing_reports_dir(self, tmp_path, capsys):
        human = tmp_path / "h.txt"
        human.write_text("t: a > b\n", "utf-8")
        code, _, err = run(capsys, "align", "--reports", str(tmp_path / "nope"),
                           "--human", str(human))
        assert code == 1


class TestQuiz:
    def make_bank(self, tmp_path, n=10):
        letters = ["A", "B", "C", "D"]
        questions = []
        for i in range(n):
            questions.append({
                "id": i + 1,
                "type": "Concept" if i < 5 else "Data",
                "question": f"q{i + 1}?",
                "options": [f"{l}. choice {l}" for l in letters],
                "correct_answer": letters[i % 4],
                "explanation": "because",
                "source_quote": "the campaign ran nationwide",
                "location": "Page 1",
            })
        path = tmp_path / "bank.json"
        path.write_text(json.dumps({"quiz_bank": questions}), "utf-8")
        return path

    def test_validate_clean(self, tmp_path, capsys):
        bank = self.make_bank(tmp_path)
        code, out, _ = run(capsys, "quiz", "validate", "--bank", str(bank))
        assert code == 0
        assert "0 finding(s)" in out

    def test_validate_with_source(self, tmp_path, capsys):
        bank = self.make_bank(tmp_path)
        source = tmp_path / "source.txt"
        source.write_text("During 2025 the campaign ran nationwide in all regions.", "utf-8")
        code, out, _ = run(capsys, "quiz", "validate", "--bank", str(bank),
                           "--source", str(source))
        assert code == 0

    def test_validate_findings_exit_one(self, tmp_path, capsys):
        bank = self.make_bank(tmp_path, n=9)
        code, out, _ = run(capsys, "quiz", "validate", "--bank", str(bank))
        assert code == 1
        assert "count" in out

    def test_score(self, tmp_path, capsys):
        bank = self.make_bank(tmp_path)
        letters = ["A", "B", "C", "D"]
        answers = {"answers": [
            {"question_id": i + 1, "selected_answer": letters[i % 4]} for i in range(10)]}
        answers["answers"][0]["selected_answer"] = "insufficient information"
        answers_path = tmp_path / "answers.json"
        answers_path.write_text(json.dumps(answers), "utf-8")
        code, out, _ = run(capsys, "quiz", "score", "--bank", str(bank),
                           "--answers", str(answers_path))
        assert code == 0
        assert json.loads(out)["accuracy_pct"] == pytest.approx(90.0)

    def test_aggregate(self, tmp_path, capsys):
        records = tmp_path / "records.json"
        records.write_text(json.dumps({"results": [
            {"system": "a", "topic": "t1", "purpose": "Brand", "level": "High", "accuracy": 80},
            {"system": "a", "topic": "t2", "purpose": "Brand", "level": "Low", "accuracy": 90},
        ]}), "utf-8")
        errors = tmp_path / "errors.json"
        errors.write_text(json.dumps({"errors": [
            {"question_id": 1, "error_type": "MissingContent", "system": "a"}]}), "utf-8")
        code, out, _ = run(capsys, "quiz", "aggregate", "--records", str(records),
                           "--errors", str(errors))
        assert code == 0
        data = json.loads(out)
        assert data["accuracy"]["systems"]["a"]["by_purpose"]["Brand"] == pytest.approx(85.0)
        assert data["errors"]["counts"]["MissingContent"] == 1
