"""Input triage: route an input to its evaluation protocol and level cap."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import PurePath

__all__ = ["TriageRoute", "triage", "STATIC_EXTENSIONS", "NATIVE_EXTENSIONS"]

STATIC_EXTENSIONS = frozenset({".pdf", ".png", ".jpg", ".jpeg"})
NATIVE_EXTENSIONS = frozenset({".pptx", ".potx"})

_MAGIC_STATIC = (b"%PDF", b"\x89PNG", b"\xff\xd8\xff")
_MAGIC_ZIP = b"PK\x03\x04"


@dataclass(frozen=True)
class TriageRoute:
    route: str       # Static | Web | Native
    max_level: str   # L0 | L2 | L5


def triage(name: str, data: bytes | None = None) -> TriageRoute:
    """Classify an input by name/extension, falling back to a bytes sniff.

    Static inputs (pdf and images) terminate immediately at L0; URLs route
    to the interactive Web protocol capped at L2; native packages allow the
    full deep scan up to L5.
    """
    lowered = name.lower()
    if lowered.startswith(("http://", "https://")):
        return TriageRoute(route="Web", max_level="L2")

    suffix = PurePath(lowered).suffix
    if suffix in STATIC_EXTENSIONS:
        return TriageRoute(route="Static", max_level="L0")
    if suffix in NATIVE_EXTENSIONS:
        return TriageRoute(route="Native", max_level="L5")

    if data is not None:
        if any(data.startswith(magic) for magic in _MAGIC_STATIC):
            return TriageRoute(route="Static", max_level="L0")
        if data.startswith(_MAGIC_ZIP):
            return TriageRoute(route="Native", max_level="L5")

    supported = sorted(STATIC_EXTENSIONS | NATIVE_EXTENSIONS)
    raise ValueError(
        f"unrecognized input format {name!r}; supported: URLs and {', '.join(supported)}"
    )
