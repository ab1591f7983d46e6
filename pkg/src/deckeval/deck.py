"""Deck loading and full metric evaluation.

A deck is an ordered image sequence (natural filename order) with optional
per-slide layout sidecars and an optional native package. Evaluation runs
every spatial metric per slide, the temporal metrics over the sequence,
applies the reporting profile, and assembles a DeckReport.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .color import SlideImage
from .config import EngineConfig
from .engagement import colorfulness, engagement_component, pacing_score
from .harmony import best_fit, deck_harmony_score
from .layout import LayoutDocument, parse_layout_file
from .pei import PeiReport, evaluate_pei
from .rhythm import entropy_to_score, subband_entropy, visual_hrv_score
from .usability import deck_usability, slide_usability

__all__ = ["DeckSlide", "DeckSequence", "DeckReport", "load_deck", "evaluate_deck", "total_aesthetics"]

TOOL_NAME = "deckeval"
TOOL_VERSION = "0.1.0"

_IMAGE_SUFFIXES = (".png", ".jpg", ".jpeg")


@dataclass(frozen=True)
class DeckSlide:
    index: int
    image_path: Path
    layout_path: Path | None = None


@dataclass(frozen=True)
class DeckSequence:
    topic: str
    system: str
    slides: tuple
    package_path: Path | None = None


@dataclass
class DeckReport:
    data: dict

    def to_dict(self) -> dict:
        return self.data


def _natural_key(name: str):
    return tuple(int(part) if part.isdigit() else part.lower()
                 for part in re.split(r"(\d+)", name))


def load_deck(source, topic: str = "", system: str = "",
              layout_dir=None, package=None) -> DeckSequence:
    """Load a deck from an image directory or a JSON manifest.

    Directory mode decodes every PNG/JPEG, sorted naturally by filename;
    sidecars named `<stem>.layout.json` are picked up from beside each image
    (or from `layout_dir`). Manifest mode reads {"slides": [...], ...} with
    paths relative to the manifest.
    """
    source = Path(source)
    if source.is_file() and source.suffix.lower() == ".json":
        return _load_manifest(source, topic, system, layout_dir, package)
    if not source.is_dir():
        raise FileNotFoundError(f"deck source {source} is neither a directory nor a manifest")

    images = sorted(
        (p for p in source.iterdir() if p.suffix.lower() in _IMAGE_SUFFIXES),
        key=lambda p: _natural_key(p.name),
    )
    if not images:
        raise ValueError(f"directory {source} contains no decodable slide images")
    return DeckSequence(
        topic=topic, system=system,
        slides=tuple(
            DeckSlide(index=i, image_path=p, layout_path=_sidecar_for(p, layout_dir))
            for i, p in enumerate(images)
        ),
        package_path=Path(package) if package else None,
    )


def _sidecar_for(image_path: Path, layout_dir) -> Path | None:
    name = image_path.stem + ".layout.json"
    candidates = [image_path.with_name(name)]
    if layout_dir is not None:
        candidates.insert(0, Path(layout_dir) / name)
    for candidate in candidates:
        if candidate.is_file():
            return candidate
    return None


def _load_manifest(path: Path, topic, system, layout_dir, package) -> DeckSequence:
    obj = json.loads(path.read_text("utf-8"))
    if not isinstance(obj, dict) or not obj.get("slides"):
        raise ValueError(f"manifest {path} must contain a non-empty 'slides' array")
    base = path.parent
    slides = []
    for i, rel in enumerate(obj["slides"]):
        image = base / rel
        if not image.is_file():
            raise FileNotFoundError(f"manifest slide {rel!r} not found under {base}")
        slides.append(DeckSlide(index=i, image_path=image,
                                layout_path=_sidecar_for(image, layout_dir)))
    pkg = package or obj.get("package")
    return DeckSequence(
        topic=topic or str(obj.get("topic", "")),
        system=system or str(obj.get("system", "")),
        slides=tuple(slides),
        package_path=(base / pkg if pkg and not Path(pkg).is_absolute() else
                      Path(pkg) if pkg else None),
    )


def _decode_image(path: Path) -> SlideImage:
    try:
        with Image.open(path) as img:
            return SlideImage(np.asarray(img.convert("RGB")))
    except (UnidentifiedImageError, OSError) as exc:
        raise ValueError(f"cannot decode slide image {path}: {exc}") from None


def total_aesthetics(components: dict) -> float:
    """Sum of the available (non-None) component scores, rounded to the
    serialized two decimals."""
    return round(sum(v for v in components.values() if v is not None), 2)


def evaluate_deck(deck: DeckSequence, config: EngineConfig = EngineConfig()) -> DeckReport:
    """Run all metrics over a deck and assemble the report.

    Per-section failures become flags instead of partial silent output;
    usability is reported unavailable when no slide has text regions.
    """
    flags: list[str] = []
    slide_rows = []
    harmony_scores = []
    colorfulness_values = []
    usability_scores = []
    entropy_scores = []

    for slide in deck.slides:
        img = _decode_image(slide.image_path)

        fit = best_fit(img, config.harmony)
        harmony_scores.append(fit.slide_score)

        m = colorfulness(img)
        colorfulness_values.append(m)

        layout_doc: LayoutDocument | None = None
        u_score = None
        region_count = 0
        if slide.layout_path is not None:
            layout_doc = parse_layout_file(slide.layout_path.read_bytes(),
                                           slide_index=slide.index,
                                           image_size=(img.width, img.height))
            u_score, regions = slide_usability(img, layout_doc, config.usability)
            region_count = len(regions)
        else:
            flags.append(f"slide {slide.index}: no layout sidecar; usability unavailable")
        usability_scores.append(u_score)

        ent = subband_entropy(img, config.pyramid, config.entropy)
        s_entropy = entropy_to_score(ent.value, config.entropy)
        entropy_scores.append(s_entropy)
        if ent.blank:
            flags.append(f"slide {slide.index}: blank (all channels below variance threshold)")

        slide_rows.append({
            "index": slide.index,
            "image": slide.image_path.name,
            "harmony": {
                "template": fit.template,
                "alpha": round(fit.alpha, 6),
                "mean_distance": fit.mean_distance,
                "score": fit.slide_score,
                "achromatic": fit.achromatic,
            },
            "colorfulness": m,
            "usability": {
                "score": u_score,
                "available": u_score is not None,
                "regions": region_count,
                "mode": "percentile" if config.usability.percentile_mode else "endpoint",
            },
            "entropy": {
                "bits": ent.value,
                "score": s_entropy,
                "blank": ent.blank,
            },
        })

    profile = config.profile

    harmony_component = deck_harmony_score(
        harmony_scores, config.harmony.deck_mean_weight, config.harmony.deck_std_weight)

    m_arr = np.asarray(colorfulness_values)
    pacing = pacing_score(m_arr, config.engagement.pacing_target, config.engagement.pacing_width)
    engagement_component_value = engagement_component(m_arr, config.engagement)

    usability_deck = deck_usability(usability_scores, profile.usability_scale)
    if usability_deck is None:
        flags.append("deck usability unavailable: no slide exposed text regions")

    rhythm = visual_hrv_score(entropy_scores, config.hrv)
    rhythm_component = rhythm.score / profile.rhythm_divisor

    components = {
        "usability": None if usability_deck is None else round(usability_deck, 2),
        "engagement": round(engagement_component_value, 2),
        "harmony": round(harmony_component, 2),
        "rhythm": round(rhythm_component, 2),
    }

    pei_section = None
    if deck.package_path is not None:
        pei_report: PeiReport = evaluate_pei(str(deck.package_path), config.pei)
        pei_section = pei_report.to_dict()

    report = {
        "tool": {"name": TOOL_NAME, "version": TOOL_VERSION},
        "deck": {
            "topic": deck.topic,
            "system": deck.system,
            "slide_count": len(deck.slides),
            "package": deck.package_path.name if deck.package_path else None,
        },
        "profile": {
            "name": profile.name,
            "version": profile.version,
            "usability_scale": profile.usability_scale,
            "rhythm_divisor": profile.rhythm_divisor,
            "engagement_blend": [config.engagement.blend_mean, config.engagement.blend_pacing],
        },
        "components": components,
        "aesthetics": total_aesthetics(components),
        "raw_components": {
            "usability": usability_deck,
            "engagement": engagement_component_value,
            "harmony": harmony_component,
            "rhythm": rhythm_component,
        },
        "engagement_detail": {
            "mean_colorfulness": float(m_arr.mean()),
            "pacing_spread": float(m_arr.std()),
            "pacing_score": pacing,
        },
        "rhythm_detail": {
            "rmssd": rhythm.rmssd,
            "band": rhythm.band,
            "overload_events": rhythm.overload_count,
            "mode": rhythm.mode,
            "raw_score": rhythm.score,
        },
        "slides": slide_rows,
        "pei": pei_section,
        "flags": flags,
        "config": config.to_dict(),
    }
    return DeckReport(data=report)
