import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deckeval import LayoutParseError, parse_layout_file, text_regions


def doc_bytes(elements):
    return json.dumps({"elements": elements}).encode()


ELEMENT = {"label": "text", "score": 0.95, "coordinate": [10, 10, 200, 40]}


class TestParse:
    def test_single_text_element(self):
        doc = parse_layout_file(doc_bytes([ELEMENT]))
        assert len(doc.elements) == 1
        e = doc.elements[0]
        assert e.label == "text"
        assert e.score == 0.95
        assert e.coordinate == (10, 10, 200, 40)

    def test_empty_elements(self):
        assert parse_layout_file(doc_bytes([])).elements == ()

    def test_degenerate_box_rejected(self):
        bad = dict(ELEMENT, coordinate=[200, 40, 10, 10])
        with pytest.raises(LayoutParseError, match="degenerate"):
            parse_layout_file(doc_bytes([bad]))

    def test_unknown_label_becomes_other(self):
        doc = parse_layout_file(doc_bytes([dict(ELEMENT, label="sidebar")]))
        assert doc.elements[0].label == "other"

    def test_score_out_of_range(self):
        with pytest.raises(LayoutParseError, match="score"):
            parse_layout_file(doc_bytes([dict(ELEMENT, score=1.4)]))

    def test_missing_field_named(self):
        partial = {"label": "text", "score": 0.5}
        with pytest.raises(LayoutParseError, match="coordinate"):
            parse_layout_file(doc_bytes([partial]))

    def test_malformed_json_carries_position(self):
        with pytest.raises(LayoutParseError, match="line"):
            parse_layout_file(b'{"elements": [}')

    def test_clamping_flags_out_of_bounds(self):
        wide = dict(ELEMENT, coordinate=[-5, 10, 500, 40])
        doc = parse_layout_file(doc_bytes([wide]), image_size=(320, 240))
        e = doc.elements[0]
        assert e.clamped
        assert e.coordinate == (0, 10, 320, 40)

    def test_fully_outside_box_errors(self):
        outside = dict(ELEMENT, coordinate=[400, 10, 500, 40])
        with pytest.raises(LayoutParseError, match="outside"):
            parse_layout_file(doc_bytes([outside]), image_size=(320, 240))

    def test_slide_index_preserved(self):
        assert parse_layout_file(doc_bytes([]), slide_index=4).slide_index == 4


class TestTextRegions:
    def make_doc(self):
        return parse_layout_file(doc_bytes([
            {"label": "text", "score": 0.95, "coordinate": [10, 10, 200, 40]},
            {"label": "image", "score": 0.82, "coordinate": [10, 60, 200, 120]},
            {"label": "doc_title", "score": 0.78, "coordinate": [10, 130, 200, 160]},
            {"label": "footer", "score": 0.45, "coordinate": [10, 200, 200, 230]},
        ]))

    def test_filters_by_label_and_threshold(self):
        doc = parse_layout_file(doc_bytes([
            {"label": "text", "score": 0.95, "coordinate": [10, 10, 200, 40]},
            {"label": "image", "score": 0.82, "coordinate": [10, 60, 200, 120]},
        ]))
        assert text_regions(doc, 0.5) == [(10, 10, 200, 40)]

    def test_impossible_threshold_empty(self):
        assert text_regions(self.make_doc(), 1.0) == []

    def test_doc_title_counts_as_text(self):
        boxes = text_regions(self.make_doc(), 0.7)
        assert (10, 130, 200, 160) in boxes

    def test_footer_below_threshold_dropped(self):
        boxes = text_regions(self.make_doc(), 0.5)
        assert (10, 200, 200, 230) not in boxes
        assert len(boxes) == 2

    def test_document_order(self):
        boxes = text_regions(self.make_doc(), 0.0)
        assert boxes == [(10, 10, 200, 40), (10, 130, 200, 160), (10, 200, 200, 230)]

    def test_idempotent_under_refiltering(self):
        doc = self.make_doc()
        once = text_regions(doc, 0.5)
        keep = [e for e in doc.elements if e.coordinate in once]
        again = [e.coordinate for e in keep
                 if e.label in ("text", "doc_title", "footer") and e.score >= 0.5]
        assert once == again

    @given(st.lists(st.floats(0, 1), min_size=2, max_size=2).map(sorted))
    def test_raising_threshold_never_grows(self, thresholds):
        low, high = thresholds
        doc = self.make_doc()
        assert set(text_regions(doc, high)) <= set(text_regions(doc, low))

    def test_threshold_domain(self):
        with pytest.raises(ValueError):
            text_regions(self.make_doc(), 1.5)
