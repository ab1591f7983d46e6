"""Layout-detection sidecar files: parsing and text-region filtering.

Each slide may carry a sidecar `<slide-stem>.layout.json` holding one object
with an "elements" array; every element has "label" (string), "score"
(number in [0, 1]) and "coordinate" ([x_min, y_min, x_max, y_max] pixels).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = [
    "KNOWN_LABELS",
    "TEXT_LABELS",
    "LayoutElement",
    "LayoutDocument",
    "LayoutParseError",
    "parse_layout_file",
    "text_regions",
]

KNOWN_LABELS = frozenset({"text", "doc_title", "image", "footer", "other"})

# Labels that carry legibility requirements and therefore feed the contrast
# metric. Titles and footers are text for this purpose.
TEXT_LABELS = frozenset({"text", "doc_title", "footer"})

DEFAULT_MIN_CONFIDENCE = 0.5


class LayoutParseError(ValueError):
    """Raised for malformed layout files, with element/field context."""


@dataclass(frozen=True)
class LayoutElement:
    label: str
    score: float
    coordinate: tuple[float, float, float, float]
    clamped: bool = False

    @property
    def box(self) -> tuple[float, float, float, float]:
        return self.coordinate


@dataclass(frozen=True)
class LayoutDocument:
    slide_index: int
    elements: tuple[LayoutElement, ...] = field(default_factory=tuple)


def _element_from_obj(obj, index: int, image_size) -> LayoutElement:
    if not isinstance(obj, dict):
        raise LayoutParseError(f"element {index}: expected an object, got {type(obj).__name__}")
    try:
        label = obj["label"]
        score = obj["score"]
        coord = obj["coordinate"]
    except KeyError as exc:
        raise LayoutParseError(f"element {index}: missing field {exc.args[0]!r}") from None

    if not isinstance(label, str):
        raise LayoutParseError(f"element {index}: field 'label' must be a string")
    if label not in KNOWN_LABELS:
        label = "other"

    try:
        score = float(score)
    except (TypeError, ValueError):
        raise LayoutParseError(f"element {index}: field 'score' is not a number") from None
    if not 0.0 <= score <= 1.0:
        raise LayoutParseError(f"element {index}: score {score} outside [0, 1]")

    if not isinstance(coord, (list, tuple)) or len(coord) != 4:
        raise LayoutParseError(f"element {index}: field 'coordinate' must be a 4-number array")
    try:
        x_min, y_min, x_max, y_max = (float(v) for v in coord)
    except (TypeError, ValueError):
        raise LayoutParseError(f"element {index}: field 'coordinate' is not numeric") from None
    if not (x_min < x_max and y_min < y_max):
        raise LayoutParseError(
            f"element {index}: degenerate coordinate [{x_min}, {y_min}, {x_max}, {y_max}]"
        )

    clamped = False
    if image_size is not None:
        width, height = image_size
        cx_min = min(max(x_min, 0.0), float(width))
        cy_min = min(max(y_min, 0.0), float(height))
        cx_max = min(max(x_max, 0.0), float(width))
        cy_max = min(max(y_max, 0.0), float(height))
        if (cx_min, cy_min, cx_max, cy_max) != (x_min, y_min, x_max, y_max):
            clamped = True
            x_min, y_min, x_max, y_max = cx_min, cy_min, cx_max, cy_max
            if not (x_min < x_max and y_min < y_max):
                raise LayoutParseError(
                    f"element {index}: box lies entirely outside the {width}x{height} image"
                )

    return LayoutElement(label=label, score=score, coordinate=(x_min, y_min, x_max, y_max), clamped=clamped)


def parse_layout_file(data: bytes | str, slide_index: int = 0, image_size=None) -> LayoutDocument:
    """Parse one layout sidecar; `image_size` (w, h) enables bounds clamping.

    Unknown labels are retained as "other". Out-of-bounds boxes are clamped
    to the image extent and flagged. Structural problems raise
    LayoutParseError with the offending element and field named.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as exc:
        raise LayoutParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None

    if not isinstance(obj, dict) or "elements" not in obj:
        raise LayoutParseError("top-level object must contain an 'elements' array")
    raw = obj["elements"]
    if not isinstance(raw, list):
        raise LayoutParseError("'elements' must be an array")

    elements = tuple(_element_from_obj(e, i, image_size) for i, e in enumerate(raw))
    return LayoutDocument(slide_index=slide_index, elements=elements)


def text_regions(doc: LayoutDocument, min_confidence: float = DEFAULT_MIN_CONFIDENCE):
    """Boxes of text-like elements (text, doc_title, footer) at or above
    `min_confidence`, in document order."""
    if not 0.0 <= min_confidence <= 1.0:
        raise ValueError(f"min_confidence {min_confidence} outside [0, 1]")
    return [e.coordinate for e in doc.elements if e.label in TEXT_LABELS and e.score >= min_confidence]
