import json

import numpy as np
import pytest
from PIL import Image

from deckeval import (
    EngineConfig,
    emit_report,
    evaluate_deck,
    load_deck,
    parse_config_text,
    parse_report,
    total_aesthetics,
)
from deckeval.report import TABLE_HEADER


def write_slide(path, seed, size=(48, 36)):
    rng = np.random.default_rng(seed)
    arr = rng.integers(0, 256, size=(size[1], size[0], 3), dtype=np.uint8)
    Image.fromarray(arr).save(path)


def write_layout(path, box=(4, 4, 40, 20)):
    payload = {"elements": [{"label": "text", "score": 0.9, "coordinate": list(box)}]}
    path.write_text(json.dumps(payload), "utf-8")


@pytest.fixture
def deck_dir(tmp_path):
    for i in (1, 2, 3, 10):   # 10 exercises natural ordering
        write_slide(tmp_path / f"slide_{i}.png", seed=i)
        if i != 3:
            write_layout(tmp_path / f"slide_{i}.layout.json")
    return tmp_path


class TestLoadDeck:
    def test_natural_filename_order(self, deck_dir):
        deck = load_deck(deck_dir)
        names = [s.image_path.name for s in deck.slides]
        assert names == ["slide_1.png", "slide_2.png", "slide_3.png", "slide_10.png"]

    def test_sidecar_matching(self, deck_dir):
        deck = load_deck(deck_dir)
        with_layout = [s for s in deck.slides if s.layout_path is not None]
        assert len(with_layout) == 3

    def test_empty_directory_errors(self, tmp_path):
        with pytest.raises(ValueError, match="no decodable"):
            load_deck(tmp_path)

    def test_undecodable_image_names_file(self, tmp_path):
        bad = tmp_path / "slide_1.png"
        bad.write_bytes(b"definitely not a png")
        deck = load_deck(tmp_path)
        with pytest.raises(ValueError, match="slide_1.png"):
            evaluate_deck(deck)

    def test_manifest_mode(self, deck_dir):
        manifest = deck_dir / "deck.json"
        manifest.write_text(json.dumps({
            "topic": "demo", "system": "unit",
            "slides": ["slide_2.png", "slide_1.png"],
        }), "utf-8")
        deck = load_deck(manifest)
        assert deck.topic == "demo"
        assert [s.image_path.name for s in deck.slides] == ["slide_2.png", "slide_1.png"]

    def test_manifest_missing_slide_errors(self, tmp_path):
        manifest = tmp_path / "deck.json"
        manifest.write_text(json.dumps({"slides": ["nope.png"]}), "utf-8")
        with pytest.raises(FileNotFoundError, match="nope.png"):
            load_deck(manifest)


class TestEvaluateDeck:
    def test_report_shape_and_sum_identity(self, deck_dir):
        report = evaluate_deck(load_deck(deck_dir)).to_dict()
        comps = report["components"]
        assert set(comps) == {"usability", "engagement", "harmony", "rhythm"}
        assert report["aesthetics"] == total_aesthetics(comps)
        assert len(report["slides"]) == 4
        assert report["config"]["harmony"]["sigma"] == 0.01

    def test_unavailable_usability_excluded(self, deck_dir):
        report = evaluate_deck(load_deck(deck_dir)).to_dict()
        # slide_3 has no sidecar: still evaluated, flagged, mean over other 3
        assert any("slide" in f and "usability" in f for f in report["flags"])
        assert report["slides"][2]["usability"]["available"] is False
        assert report["components"]["usability"] is not None

    def test_determinism(self, deck_dir):
        deck = load_deck(deck_dir)
        assert emit_report(evaluate_deck(deck)) == emit_report(evaluate_deck(deck))

    def test_slide_order_changes_only_temporal_stats(self, deck_dir):
        deck = load_deck(deck_dir)
        base = evaluate_deck(deck).to_dict()
        reordered = type(deck)(topic=deck.topic, system=deck.system,
                               slides=tuple(reversed(deck.slides)),
                               package_path=None)
        flipped = evaluate_deck(reordered).to_dict()

        def per_slide(report):
            return sorted((s["image"], s["colorfulness"], s["harmony"]["mean_distance"],
                           s["entropy"]["bits"]) for s in report["slides"])

        assert per_slide(base) == per_slide(flipped)
        # harmony mean/std identical under permutation; rmssd generally not
        assert flipped["components"]["harmony"] == base["components"]["harmony"]
        assert flipped["engagement_detail"]["pacing_spread"] == \
            pytest.approx(base["engagement_detail"]["pacing_spread"], abs=1e-12)

    def test_pei_attached_with_package(self, deck_dir):
        from deckeval.pei import build_fixture
        pkg = deck_dir / "deck.pptx"
        pkg.write_bytes(build_fixture("l3"))
        deck = load_deck(deck_dir, package=pkg)
        report = evaluate_deck(deck).to_dict()
        assert report["pei"]["level"] == "L3"

    def test_raw_profile(self, deck_dir):
        config = EngineConfig().with_profile("raw")
        report = evaluate_deck(load_deck(deck_dir), config).to_dict()
        assert report["profile"]["name"] == "raw"
        assert report["profile"]["usability_scale"] == 1.0

    def test_single_gray_slide_deck_composition(self, tmp_path):
        # composes the module-level degenerate cases end to end
        import math
        from PIL import Image as PILImage
        arr = np.full((32, 32, 3), 128, dtype=np.uint8)
        PILImage.fromarray(arr).save(tmp_path / "slide_1.png")
        report = evaluate_deck(load_deck(tmp_path)).to_dict()
        config = EngineConfig()

        # achromatic slide: harmony score 1.0, zero deviation -> w1 * 1
        assert report["slides"][0]["harmony"]["achromatic"] is True
        assert report["components"]["harmony"] == pytest.approx(5.0)

        # colorfulness 0; single-slide pacing spread is 0
        assert report["slides"][0]["colorfulness"] == 0.0
        pacing = math.exp(-(config.engagement.pacing_target ** 2)
                          / (2 * config.engagement.pacing_width ** 2))
        assert report["raw_components"]["engagement"] == pytest.approx(0.5 * 10 * pacing)

        # no sidecar -> usability unavailable at slide and deck level
        assert report["components"]["usability"] is None

        # blank slide -> entropy 0, rhythm from the degenerate sequence
        assert report["slides"][0]["entropy"]["blank"] is True
        assert report["slides"][0]["entropy"]["bits"] == 0.0
        expected_rhythm = 100.0 * (1 - config.hrv.target / config.hrv.half_width) / 10.0
        assert report["raw_components"]["rhythm"] == pytest.approx(expected_rhythm)
        assert report["rhythm_detail"]["band"] == "Flatline"


class TestTotalAesthetics:
    # component quadruples and printed totals from the reference score table
    ROWS = [
        ((5.62, 8.30, -0.47, 13.84), 27.28),
        ((5.72, 6.41, -0.55, 15.01), 26.58),
        ((4.13, 7.32, -0.35, 11.72), 22.82),
        ((4.87, 7.52, -1.60, 11.27), 22.06),
        ((4.83, 7.60, -1.18, 9.44), 20.69),
        ((4.61, 6.28, -1.75, 10.12), 19.25),
        ((4.13, 7.99, -1.88, 8.06), 18.30),
        ((5.31, 6.31, -1.51, 6.99), 17.09),
        ((5.03, 7.41, -1.91, 6.33), 16.86),
    ]

    @pytest.mark.parametrize("components,printed", ROWS)
    def test_reference_rows_within_rounding(self, components, printed):
        u, e, h, r = components
        total = total_aesthetics({"usability": u, "engagement": e, "harmony": h, "rhythm": r})
        assert abs(total - printed) <= 0.02

    def test_none_components_excluded(self):
        assert total_aesthetics({"usability": None, "engagement": 2.0,
                                 "harmony": 1.0, "rhythm": 1.5}) == pytest.approx(4.5)


class TestEmitReport:
    def make_report(self, deck_dir):
        return evaluate_deck(load_deck(deck_dir))

    def test_struct_round_trip(self, deck_dir):
        report = self.make_report(deck_dir)
        data = emit_report(report, "struct")
        assert parse_report(data) == report.to_dict()

    def test_identical_bytes(self, deck_dir):
        report = self.make_report(deck_dir)
        assert emit_report(report) == emit_report(report)

    def test_table_header_and_row(self, deck_dir):
        text = emit_report(self.make_report(deck_dir), "table").decode()
        lines = text.strip().splitlines()
        assert lines[0] == TABLE_HEADER
        assert len(lines) == 2
        assert lines[1].count(",") == 5

    def test_table_na_for_missing_pei(self, deck_dir):
        text = emit_report(self.make_report(deck_dir), "table").decode()
        assert text.strip().splitlines()[1].endswith("N/A")

    def test_unknown_format(self, deck_dir):
        with pytest.raises(ValueError, match="format"):
            emit_report(self.make_report(deck_dir), "yaml")


class TestConfig:
    def test_overrides_applied(self):
        config = parse_config_text(
            "harmony.sigma = 0.0005\n"
            "hrv.target = 0.02   # tuning-table variant\n"
            "usability.percentile_mode = true\n"
            "pyramid.levels = 2\n"
        )
        assert config.harmony.sigma == 0.0005
        assert config.hrv.target == 0.02
        assert config.usability.percentile_mode is True
        assert config.pyramid.levels == 2

    def test_unknown_section(self):
        with pytest.raises(ValueError, match="unknown section"):
            parse_config_text("nope.sigma = 1\n")

    def test_unknown_key_lists_known(self):
        with pytest.raises(ValueError, match="unknown key"):
            parse_config_text("harmony.sigmaa = 1\n")

    def test_profile_selection(self):
        config = parse_config_text("profile.name = raw\n")
        assert config.profile.usability_scale == 1.0

    def test_profile_field_override(self):
        config = parse_config_text("profile.name = raw\nprofile.rhythm_divisor = 5\n")
        assert config.profile.rhythm_divisor == 5.0

    def test_comments_and_blanks_ignored(self):
        config = parse_config_text("\n# comment only\n\n")
        assert config == EngineConfig()

    def test_bad_boolean(self):
        with pytest.raises(ValueError, match="boolean"):
            parse_config_text("usability.percentile_mode = maybe\n")

    def test_config_echo_complete(self):
        echo = EngineConfig().to_dict()
        assert echo["harmony"]["sat_threshold"] == 0.1
        assert echo["entropy"]["zero_threshold"] == 0.008
        assert echo["hrv"]["overload_threshold"] == 0.75
        assert echo["pei"]["grouping_shape_limit"] == 15
        assert echo["engagement"]["pacing_target"] == 11.28
