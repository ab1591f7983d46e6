"""Report serialization: canonical structured bytes and tabular summaries."""

from __future__ import annotations

import json

from .deck import DeckReport

__all__ = ["FORMATS", "TABLE_HEADER", "emit_report", "parse_report"]

FORMATS = ("struct", "table")

TABLE_HEADER = "Usability,Engagement,Harmony,Rhythm,Aesthetics,PEI"


def _cell(value) -> str:
    return "N/A" if value is None else f"{value:.2f}"


def emit_report(report: DeckReport | dict, fmt: str = "struct") -> bytes:
    """Serialize a deck report deterministically.

    "struct" is canonical JSON with stable key order (round-trippable via
    `parse_report`); "table" is a one-row CSV summary.
    """
    data = report.to_dict() if isinstance(report, DeckReport) else report
    if fmt == "struct":
        return (json.dumps(data, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "table":
        comps = data["components"]
        pei = data.get("pei")
        level = pei.get("level") if pei else None
        row = ",".join([
            _cell(comps.get("usability")),
            _cell(comps.get("engagement")),
            _cell(comps.get("harmony")),
            _cell(comps.get("rhythm")),
            _cell(data.get("aesthetics")),
            level if level else "N/A",
        ])
        return (TABLE_HEADER + "\n" + row + "\n").encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}; choose from {FORMATS}")


def parse_report(data: bytes | str) -> dict:
    """Round-trip parse of the structured format."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return json.loads(data)
