"""Colorfulness per slide and vibrancy pacing across the deck.

Colorfulness uses the opponent channels rg = R - G and yb = (R + G)/2 - B on
raw 8-bit values; pacing scores the deck-level spread of slide colorfulness
against a target via a Gaussian. Population statistics throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .color import SlideImage

__all__ = ["EngagementConfig", "colorfulness", "pacing_score", "engagement_component"]


@dataclass(frozen=True)
class EngagementConfig:
    # Pacing Gaussian anchored to the professional-corpus colorfulness spread.
    pacing_target: float = 11.28
    pacing_width: float = 8.54
    # Reporting blend: a * (mean M / 10) + b * 10 * pacing score.
    blend_mean: float = 0.5
    blend_pacing: float = 0.5

    def __post_init__(self):
        if self.pacing_width <= 0:
            raise ValueError("pacing_width must be positive")
        if self.blend_mean < 0 or self.blend_pacing < 0:
            raise ValueError("blend weights must be >= 0")
        if abs(self.blend_mean + self.blend_pacing - 1.0) > 1e-9:
            raise ValueError("blend weights must sum to 1")


def colorfulness(img: SlideImage) -> float:
    """Opponent-channel vibrancy: sqrt(s_rg^2 + s_yb^2) + 0.3 sqrt(m_rg^2 + m_yb^2)."""
    px = img.pixels.astype(np.float64)
    rg = px[..., 0] - px[..., 1]
    yb = 0.5 * (px[..., 0] + px[..., 1]) - px[..., 2]
    std_term = float(np.hypot(rg.std(), yb.std()))
    mean_term = float(np.hypot(rg.mean(), yb.mean()))
    return std_term + 0.3 * mean_term


def pacing_score(per_slide_m, target: float, width: float) -> float:
    """Gaussian score of the population std of slide colorfulness values;
    peaks at 1.0 when the spread hits the target."""
    values = np.asarray(list(per_slide_m), dtype=np.float64)
    if values.size == 0:
        raise ValueError("deck has no colorfulness values")
    if width <= 0:
        raise ValueError("width must be positive")
    spread = values.std()
    return float(np.exp(-((spread - target) ** 2) / (2.0 * width * width)))


def engagement_component(per_slide_m, config: EngagementConfig = EngagementConfig()) -> float:
    """Blend of scaled mean colorfulness and scaled pacing score.

    The 1/10 mean scaling and x10 pacing scaling are the default reporting
    profile, not a measurement; both are configurable.
    """
    values = np.asarray(list(per_slide_m), dtype=np.float64)
    if values.size == 0:
        raise ValueError("deck has no colorfulness values")
    pacing = pacing_score(values, config.pacing_target, config.pacing_width)
    return float(config.blend_mean * (values.mean() / 10.0) + config.blend_pacing * 10.0 * pacing)
