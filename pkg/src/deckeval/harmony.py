"""Color-harmony fitting against hue-wheel templates.

A slide's hue distribution (saturation-weighted, 1-degree bins) is matched
against seven canonical sector templates at every rotation of the wheel; the
best fit's mean angular distance drives a Gaussian slide score, and deck
aggregation rewards high mean harmony while penalizing cross-slide spread.

All angular quantities are fractions of the 360-degree wheel, so template
widths, rotations, and distances share one unit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .color import SlideImage, rgb_to_hsv_arrays

__all__ = [
    "HueTemplate",
    "TEMPLATES",
    "HarmonyConfig",
    "HarmonyFit",
    "AchromaticImage",
    "saturation_weighted_hue_histogram",
    "hue_histogram_from_arrays",
    "template_distance",
    "best_fit",
    "best_fit_histogram",
    "slide_harmony_score",
    "deck_harmony_score",
]

HIST_BINS = 360


@dataclass(frozen=True)
class HueTemplate:
    """One to two angular sectors, (center, width) as fractions of the wheel."""

    name: str
    sectors: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if not self.sectors:
            raise ValueError("template needs at least one sector")
        for _, width in self.sectors:
            if width <= 0:
                raise ValueError("sector widths must be positive")


# Canonical template set, in tie-break order.
TEMPLATES: tuple[HueTemplate, ...] = (
    HueTemplate("i", ((0.0, 0.05),)),
    HueTemplate("V", ((0.0, 0.26),)),
    HueTemplate("L", ((0.0, 0.05), (0.25, 0.22))),
    HueTemplate("I", ((0.0, 0.05), (0.50, 0.05))),
    HueTemplate("T", ((0.25, 0.50),)),
    HueTemplate("Y", ((0.0, 0.26), (0.50, 0.05))),
    HueTemplate("X", ((0.0, 0.26), (0.50, 0.26))),
)

_TEMPLATES_BY_NAME = {t.name: t for t in TEMPLATES}


@dataclass(frozen=True)
class HarmonyConfig:
    sigma: float = 0.01
    angular_resolution: int = 360
    sat_threshold: float = 0.1
    deck_mean_weight: float = 5.0
    deck_std_weight: float = 30.0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")
        if self.angular_resolution < 1:
            raise ValueError("angular_resolution must be >= 1")
        if not 0.0 <= self.sat_threshold < 1.0:
            raise ValueError("sat_threshold must lie in [0, 1)")


@dataclass(frozen=True)
class HarmonyFit:
    template: str
    alpha: float
    mean_distance: float
    slide_score: float
    achromatic: bool = False


class AchromaticImage(ValueError):
    """Signals a histogram with zero saturated weight."""


def hue_histogram_from_arrays(hue_deg: np.ndarray, sat: np.ndarray, sat_threshold: float) -> np.ndarray:
    """Accumulate saturation weight into 360 one-degree hue bins.

    Pixels below the saturation threshold are excluded entirely; bin b
    collects hues in [b, b+1) degrees.
    """
    hue = np.asarray(hue_deg, dtype=np.float64).ravel()
    sat = np.asarray(sat, dtype=np.float64).ravel()
    keep = sat >= sat_threshold
    bins = np.floor(hue[keep]).astype(np.int64) % HIST_BINS
    return np.bincount(bins, weights=sat[keep], minlength=HIST_BINS).astype(np.float64)


def saturation_weighted_hue_histogram(img: SlideImage, sat_threshold: float = 0.1) -> np.ndarray:
    """360-bin saturation-weighted hue histogram of an image."""
    hue, sat, _ = rgb_to_hsv_arrays(img)
    return hue_histogram_from_arrays(hue, sat, sat_threshold)


def _sector_distances(positions: np.ndarray, template: HueTemplate) -> np.ndarray:
    """Angular distance (fraction of wheel) from each position to the nearest
    sector of the unrotated template; zero inside a sector."""
    dist = np.full(positions.shape, 0.5)
    for center, width in template.sectors:
        offset = np.abs(np.mod(positions - center, 1.0))
        offset = np.minimum(offset, 1.0 - offset)
        gap = np.maximum(offset - width / 2.0, 0.0)
        dist = np.minimum(dist, gap)
    return dist


def template_distance(hist: np.ndarray, template: HueTemplate | str, alpha: float) -> float:
    """Weight-normalized mean angular distance of a hue histogram to a
    template rotated by `alpha` (fraction of the wheel)."""
    if isinstance(template, str):
        template = _TEMPLATES_BY_NAME[template]
    hist = np.asarray(hist, dtype=np.float64)
    total = hist.sum()
    if total <= 0.0:
        raise AchromaticImage("histogram has zero saturated weight")
    hues = np.arange(HIST_BINS, dtype=np.float64) / HIST_BINS
    dist = _sector_distances(np.mod(hues - alpha, 1.0), template)
    return float((hist @ dist) / total)


def best_fit_histogram(hist: np.ndarray, config: HarmonyConfig = HarmonyConfig()) -> HarmonyFit:
    """Exhaustive best fit over all templates and rotations for a histogram.

    Rotations are alpha = j / angular_resolution for j in [0, resolution);
    ties resolve to the earlier template in table order, then smaller alpha.
    """
    hist = np.asarray(hist, dtype=np.float64)
    total = hist.sum()
    if total <= 0.0:
        return HarmonyFit(template="i", alpha=0.0, mean_distance=0.0,
                          slide_score=1.0, achromatic=True)

    res = config.angular_resolution
    hues = np.arange(HIST_BINS, dtype=np.float64) / HIST_BINS
    alphas = np.arange(res, dtype=np.float64) / res
    # (res, bins) grid of hue positions relative to each rotated template
    rel = np.mod(hues[None, :] - alphas[:, None], 1.0)

    best_name, best_alpha, best_d = None, 0.0, np.inf
    for template in TEMPLATES:
        d = _sector_distances(rel, template) @ hist / total
        j = int(np.argmin(d))
        if d[j] < best_d:
            best_name, best_alpha, best_d = template.name, float(alphas[j]), float(d[j])
    score = slide_harmony_score(best_d, config.sigma)
    return HarmonyFit(template=best_name, alpha=best_alpha, mean_distance=best_d, slide_score=score)


def best_fit(img: SlideImage, config: HarmonyConfig = HarmonyConfig()) -> HarmonyFit:
    """Best template fit for an image (see `best_fit_histogram`)."""
    hist = saturation_weighted_hue_histogram(img, config.sat_threshold)
    return best_fit_histogram(hist, config)


def slide_harmony_score(mean_distance: float, sigma: float) -> float:
    """Gaussian decay of the mean template distance: exp(-D^2 / (2 sigma^2))."""
    if mean_distance < 0:
        raise ValueError("mean distance must be >= 0")
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    exponent = -(mean_distance * mean_distance) / (2.0 * sigma * sigma)
    # exp underflows to 0.0 for extreme distance/sigma ratios, which is the
    # documented clamp.
    return float(np.exp(exponent))


def deck_harmony_score(slide_scores, w1: float = 5.0, w2: float = 30.0) -> float:
    """Deck aggregate: w1 * mean - w2 * population-std of the slide scores."""
    scores = np.asarray(list(slide_scores), dtype=np.float64)
    if scores.size == 0:
        raise ValueError("deck has no slide scores")
    return float(w1 * scores.mean() - w2 * scores.std())
