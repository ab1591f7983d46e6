"""Engine configuration: every tunable parameter in one tree.

Config files are plain `section.key = value` lines ('#' starts a comment).
Sections map onto the per-metric config dataclasses; the reporting profile
is a named, versioned block of scaling constants echoed into every report
so results stay self-describing.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, fields

from .engagement import EngagementConfig
from .harmony import HarmonyConfig
from .pei.gates import PeiConfig
from .pyramid import PyramidConfig
from .rhythm import EntropyConfig, HrvConfig
from .usability import UsabilityConfig

__all__ = ["ReportingProfile", "PROFILES", "EngineConfig", "parse_config_text", "load_config"]


@dataclass(frozen=True)
class ReportingProfile:
    """Scaling constants that map raw metric values into report components."""

    name: str = "table3"
    version: int = 1
    usability_scale: float = 10.0
    rhythm_divisor: float = 10.0


PROFILES = {
    "table3": ReportingProfile(),
    "raw": ReportingProfile(name="raw", usability_scale=1.0, rhythm_divisor=1.0),
}


@dataclass(frozen=True)
class EngineConfig:
    harmony: HarmonyConfig = HarmonyConfig()
    engagement: EngagementConfig = EngagementConfig()
    usability: UsabilityConfig = UsabilityConfig()
    pyramid: PyramidConfig = PyramidConfig()
    entropy: EntropyConfig = EntropyConfig()
    hrv: HrvConfig = HrvConfig()
    pei: PeiConfig = PeiConfig()
    profile: ReportingProfile = PROFILES["table3"]

    def with_profile(self, name: str) -> "EngineConfig":
        if name not in PROFILES:
            raise ValueError(f"unknown profile {name!r}; available: {sorted(PROFILES)}")
        return dataclasses.replace(self, profile=PROFILES[name])

    def to_dict(self) -> dict:
        out = {}
        for section_field in fields(self):
            section = getattr(self, section_field.name)
            out[section_field.name] = {f.name: getattr(section, f.name) for f in fields(section)}
        return out


def _coerce(raw: str, target_type, context: str):
    raw = raw.strip()
    if target_type is bool:
        lowered = raw.lower()
        if lowered in ("true", "yes", "1", "on"):
            return True
        if lowered in ("false", "no", "0", "off"):
            return False
        raise ValueError(f"{context}: expected a boolean, got {raw!r}")
    if target_type is int:
        return int(raw)
    if target_type is float:
        return float(raw)
    return raw


def parse_config_text(text: str, base: EngineConfig | None = None) -> EngineConfig:
    """Apply `section.key = value` overrides on top of a base configuration."""
    config = base or EngineConfig()
    sections = {f.name: getattr(config, f.name) for f in fields(config)}
    pending: dict = {name: {} for name in sections}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line or "." not in line.split("=", 1)[0]:
            raise ValueError(f"config line {lineno}: expected 'section.key = value'")
        key_part, value = (s.strip() for s in line.split("=", 1))
        section_name, _, key = key_part.partition(".")
        if section_name not in sections:
            raise ValueError(f"config line {lineno}: unknown section {section_name!r} "
                             f"(known: {sorted(sections)})")
        section = sections[section_name]
        if section_name == "profile" and key == "name" and value in PROFILES:
            # selecting a named profile resets its block before other overrides
            sections["profile"] = PROFILES[value]
            continue
        field_types = {f.name: f.type for f in fields(section)}
        if key not in field_types:
            raise ValueError(f"config line {lineno}: unknown key {key!r} in section "
                             f"{section_name!r} (known: {sorted(field_types)})")
        current = getattr(section, key)
        pending[section_name][key] = _coerce(value, type(current), f"config line {lineno}")

    for name, overrides in pending.items():
        if overrides:
            sections[name] = dataclasses.replace(sections[name], **overrides)
    return EngineConfig(**sections)


def load_config(path) -> EngineConfig:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config_text(handle.read())
