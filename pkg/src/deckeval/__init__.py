"""deckeval: deterministic quality metrics for rendered slide decks.

The library evaluates a deck of slide images across four components
(harmony, engagement, usability, visual rhythm), classifies native package
editability on the L0-L5 scale, validates and scores quiz banks, and
measures rank alignment against human preferences.
"""

from .alignment import AlignmentStats, alignment_report, identical_ratio, spearman
from .color import (
    HsvPixel,
    LabPixel,
    SlideImage,
    lab_normalized_channels,
    luminance_map,
    relative_luminance,
    rgb_to_hsv,
    rgb_to_lab_normalized,
    srgb_to_linear,
)
from .config import PROFILES, EngineConfig, ReportingProfile, load_config, parse_config_text
from .deck import DeckReport, DeckSequence, DeckSlide, evaluate_deck, load_deck, total_aesthetics
from .engagement import EngagementConfig, colorfulness, engagement_component, pacing_score
from .harmony import (
    TEMPLATES,
    HarmonyConfig,
    HarmonyFit,
    HueTemplate,
    best_fit,
    best_fit_histogram,
    deck_harmony_score,
    saturation_weighted_hue_histogram,
    slide_harmony_score,
    template_distance,
)
from .layout import LayoutDocument, LayoutElement, LayoutParseError, parse_layout_file, text_regions
from .pyramid import PyramidConfig, SteerablePyramid, steerable_pyramid
from .report import TABLE_HEADER, emit_report, parse_report
from .rhythm import (
    EntropyConfig,
    HrvConfig,
    entropy_to_score,
    overload_events,
    rmssd,
    rmssd_band,
    subband_entropy,
    subband_shannon_entropy,
    visual_hrv_score,
)
from .usability import (
    ContrastResult,
    UsabilityConfig,
    contrast_score,
    deck_usability,
    region_contrast,
    slide_usability,
)

__version__ = "0.1.0"
