"""Figure-ground contrast within detected text regions.

Contrast ratio c = (L_max + 0.05) / (L_min + 0.05) over the relative
luminance of pixels in each text box, mapped to [0, 1] via ln(c) / ln(21).
Slides without text regions report "unavailable" rather than a score.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .color import SlideImage, luminance_map
from .layout import LayoutDocument, text_regions

__all__ = [
    "UsabilityConfig",
    "ContrastResult",
    "region_contrast",
    "contrast_score",
    "slide_usability",
    "deck_usability",
]

MAX_CONTRAST = 21.0


@dataclass(frozen=True)
class UsabilityConfig:
    min_confidence: float = 0.5
    # Endpoint mode takes the true luminance extremes; percentile mode is a
    # robust alternative for anti-aliased text edges.
    percentile_mode: bool = False
    upper_percentile: float = 95.0
    lower_percentile: float = 5.0
    deck_scale: float = 10.0


@dataclass(frozen=True)
class ContrastResult:
    box: tuple[float, float, float, float]
    l_max: float
    l_min: float
    ratio: float
    score: float


def region_contrast(img: SlideImage, box, config: UsabilityConfig = UsabilityConfig()) -> ContrastResult:
    """Contrast ratio of the luminance extremes inside a box.

    The box is clipped to the image; a box with no overlap at all is an
    error rather than a silent skip.
    """
    x_min, y_min, x_max, y_max = (float(v) for v in box)
    c0 = max(int(math.floor(x_min)), 0)
    r0 = max(int(math.floor(y_min)), 0)
    c1 = min(int(math.ceil(x_max)), img.width)
    r1 = min(int(math.ceil(y_max)), img.height)
    if c1 <= c0 or r1 <= r0:
        raise ValueError(f"box {box} lies outside the {img.width}x{img.height} image")

    lum = luminance_map(img)[r0:r1, c0:c1]
    if config.percentile_mode:
        l_max = float(np.percentile(lum, config.upper_percentile))
        l_min = float(np.percentile(lum, config.lower_percentile))
    else:
        l_max = float(lum.max())
        l_min = float(lum.min())
    ratio = (l_max + 0.05) / (l_min + 0.05)
    return ContrastResult(box=(x_min, y_min, x_max, y_max), l_max=l_max, l_min=l_min,
                          ratio=ratio, score=contrast_score(ratio))


def contrast_score(ratio: float) -> float:
    """ln(c) / ln(21), clamped to [0, 1]; 1:1 maps to 0 and 21:1 to 1."""
    if ratio < 1.0:
        raise ValueError(f"contrast ratio {ratio} below 1")
    return min(math.log(ratio) / math.log(MAX_CONTRAST), 1.0)


def slide_usability(img: SlideImage, layout: LayoutDocument,
                    config: UsabilityConfig = UsabilityConfig()):
    """Mean contrast score over the slide's text regions.

    Returns (score, results) where score is None when the slide exposes no
    text regions at the configured confidence.
    """
    boxes = text_regions(layout, config.min_confidence)
    results = [region_contrast(img, box, config) for box in boxes]
    if not results:
        return None, []
    return sum(r.score for r in results) / len(results), results


def deck_usability(slide_scores, scale: float = 10.0):
    """scale x mean over the available slide scores; None entries are slides
    without text regions and are excluded. All-unavailable decks return None."""
    available = [s for s in slide_scores if s is not None]
    if not available:
        return None
    return scale * (sum(available) / len(available))
