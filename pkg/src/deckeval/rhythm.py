"""Per-slide visual complexity and deck-level rhythm scoring.

Complexity is the weighted mean Shannon entropy of steerable-pyramid
subbands over the normalized Lab channels of a slide. The per-slide
complexity scores form a sequence whose successive-difference statistic
(RMSSD) drives the rhythm score, with a sliding-window overload penalty.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .color import SlideImage, lab_normalized_channels
from .pyramid import PyramidConfig, steerable_pyramid

__all__ = [
    "EntropyConfig",
    "HrvConfig",
    "SubbandEntropyResult",
    "VisualRhythmResult",
    "subband_shannon_entropy",
    "subband_entropy",
    "entropy_to_score",
    "rmssd",
    "overload_events",
    "rmssd_band",
    "visual_hrv_score",
]


@dataclass(frozen=True)
class EntropyConfig:
    # Channel weights: luminance dominates clutter perception.
    w_luminance: float = 0.84
    w_chroma: float = 0.08
    # Channels whose variance falls below this are treated as flat and
    # dropped from the weighted mean.
    zero_threshold: float = 0.008
    # Gaussian mapping from raw entropy to a [0, 1] complexity score,
    # centered on the professional-corpus mean.
    score_center: float = 3.878
    score_width: float = 0.730
    include_lowpass: bool = False

    def __post_init__(self):
        if self.w_luminance < 0 or self.w_chroma < 0:
            raise ValueError("channel weights must be >= 0")
        if self.score_width <= 0:
            raise ValueError("score_width must be positive")


@dataclass(frozen=True)
class HrvConfig:
    mode: str = "banded"
    # banded mode
    target: float = 0.03
    half_width: float = 0.2
    overload_window: int = 3
    overload_threshold: float = 0.75
    overload_penalty: float = 10.0
    # linear mode
    lambda_mean: float = 0.5
    lambda_rmssd: float = 0.5

    def __post_init__(self):
        if self.mode not in ("banded", "linear"):
            raise ValueError(f"unknown rhythm mode {self.mode!r}")
        if self.half_width <= 0:
            raise ValueError("half_width must be positive")
        if self.overload_window < 1:
            raise ValueError("overload_window must be >= 1")
        if self.overload_penalty < 0:
            raise ValueError("overload_penalty must be >= 0")


@dataclass(frozen=True)
class SubbandEntropyResult:
    value: float
    blank: bool
    channel_entropy: dict

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class VisualRhythmResult:
    score: float
    rmssd: float
    band: str
    overload_count: int
    mode: str
    degenerate: bool = False


def subband_shannon_entropy(subband: np.ndarray) -> float:
    """Shannon entropy (bits) of a subband under adaptive equal-width binning.

    Bin count is ceil(sqrt(n)) over the coefficient range; a zero-range
    (constant) subband has entropy 0.
    """
    coefs = np.asarray(subband, dtype=np.float64).ravel()
    if coefs.size == 0:
        raise ValueError("empty subband")
    lo, hi = coefs.min(), coefs.max()
    if hi <= lo:
        return 0.0
    bins = int(math.ceil(math.sqrt(coefs.size)))
    counts, _ = np.histogram(coefs, bins=bins, range=(lo, hi))
    p = counts[counts > 0] / coefs.size
    return float(-(p * np.log2(p)).sum())


def _channel_mean_entropy(channel: np.ndarray, pyr_cfg: PyramidConfig, include_lowpass: bool) -> float:
    pyr = steerable_pyramid(channel, pyr_cfg)
    bands = pyr.all_bands()
    if include_lowpass:
        bands = bands + [pyr.lowpass]
    return float(np.mean([subband_shannon_entropy(b) for b in bands]))


def subband_entropy(img: SlideImage, pyr_cfg: PyramidConfig = PyramidConfig(),
                    ent_cfg: EntropyConfig = EntropyConfig()) -> SubbandEntropyResult:
    """Weighted mean subband entropy over the normalized Lab channels.

    Channels with variance below the zero threshold contribute nothing and
    their weight leaves the normalizer, so a grayscale slide reduces to the
    luminance term alone. All channels flat means a blank slide with
    entropy 0.
    """
    channels = lab_normalized_channels(img)
    weights = (ent_cfg.w_luminance, ent_cfg.w_chroma, ent_cfg.w_chroma)
    names = ("L", "a", "b")

    total = 0.0
    norm = 0.0
    detail = {}
    for name, weight, chan in zip(names, weights, channels):
        if float(chan.var()) < ent_cfg.zero_threshold:
            detail[name] = None
            continue
        h = _channel_mean_entropy(chan, pyr_cfg, ent_cfg.include_lowpass)
        detail[name] = h
        total += weight * h
        norm += weight

    if norm == 0.0:
        return SubbandEntropyResult(value=0.0, blank=True, channel_entropy=detail)
    return SubbandEntropyResult(value=total / norm, blank=False, channel_entropy=detail)


def entropy_to_score(entropy_bits: float, ent_cfg: EntropyConfig = EntropyConfig()) -> float:
    """Gaussian complexity score, peaking at the optimal entropy center."""
    if entropy_bits < 0:
        raise ValueError("entropy must be >= 0")
    d = entropy_bits - ent_cfg.score_center
    return float(np.exp(-(d * d) / (2.0 * ent_cfg.score_width ** 2)))


def rmssd(scores) -> float:
    """Root mean square of successive differences of a score sequence.

    A single-score sequence is a degenerate deck and maps to 0.
    """
    values = np.asarray(list(scores), dtype=np.float64)
    if values.size == 0:
        raise ValueError("empty score sequence")
    if values.size == 1:
        return 0.0
    deltas = np.abs(np.diff(values))
    return float(np.sqrt((deltas * deltas).sum() / (values.size - 1)))


def overload_events(scores, window: int, threshold: float) -> int:
    """Number of sliding windows whose mean score exceeds the threshold."""
    if window < 1:
        raise ValueError("window must be >= 1")
    values = np.asarray(list(scores), dtype=np.float64)
    n = values.size
    if n < window:
        return 0
    means = np.convolve(values, np.ones(window) / window, mode="valid")
    return int((means > threshold).sum())


def rmssd_band(value: float) -> str:
    """Interpretation band for an RMSSD value."""
    if value < 0.01:
        return "Flatline"
    if value <= 0.1:
        return "Healthy"
    if value > 0.30:
        return "Strobe Light"
    return "Transitional"


def visual_hrv_score(scores, cfg: HrvConfig = HrvConfig()) -> VisualRhythmResult:
    """Deck rhythm score from a sequence of per-slide complexity scores.

    Banded mode: 100 * (1 - |RMSSD - target| / half_width) minus a per-event
    overload penalty. Linear mode blends mean complexity with RMSSD.
    """
    values = np.asarray(list(scores), dtype=np.float64)
    if values.size == 0:
        raise ValueError("empty score sequence")
    r = rmssd(values)
    band = rmssd_band(r)
    degenerate = values.size == 1
    if cfg.mode == "linear":
        score = cfg.lambda_mean * float(values.mean()) + cfg.lambda_rmssd * r
        return VisualRhythmResult(score=score, rmssd=r, band=band,
                                  overload_count=0, mode="linear", degenerate=degenerate)
    overloads = overload_events(values, cfg.overload_window, cfg.overload_threshold)
    score = 100.0 * (1.0 - abs(r - cfg.target) / cfg.half_width) - cfg.overload_penalty * overloads
    return VisualRhythmResult(score=score, rmssd=r, band=band,
                              overload_count=overloads, mode="banded", degenerate=degenerate)
