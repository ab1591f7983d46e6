"""Editability classification: triage, knockout gate run, final level."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .gates import GATE_SEQUENCE, GateResult, PeiConfig
from .package import open_package
from .triage import TriageRoute, triage

__all__ = ["LEVELS", "PeiReport", "evaluate_pei", "evaluate_package_bytes"]

LEVELS = ("L0", "L1", "L2", "L3", "L4", "L5")

_WEB_NOTE = "not evaluable: requires interactive inspection"


@dataclass(frozen=True)
class GateEntry:
    gate: str
    passed: bool | None      # None = never evaluated (knockout or wrong route)
    evidence: tuple

    @property
    def evaluated(self) -> bool:
        return self.passed is not None


@dataclass(frozen=True)
class PeiReport:
    route: TriageRoute
    gates: tuple
    level: str | None
    evaluable: bool = True
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "route": self.route.route,
            "max_level": self.route.max_level,
            "level": self.level,
            "evaluable": self.evaluable,
            "note": self.note,
            "gates": [
                {
                    "gate": g.gate,
                    "passed": g.passed,
                    "evidence": [
                        {"slide": slide, "finding": text} for slide, text in g.evidence
                    ],
                }
                for g in self.gates
            ],
        }


def _unevaluated_gates() -> tuple:
    return tuple(GateEntry(gate=name, passed=None, evidence=()) for name, _ in GATE_SEQUENCE)


def evaluate_package_bytes(data: bytes, route: TriageRoute,
                           config: PeiConfig = PeiConfig()) -> PeiReport:
    """Run the knockout gate sequence over native package bytes.

    Gates run strictly in order and evaluation stops at the first failure;
    the level is the count of leading passes.
    """
    pkg = open_package(data)
    entries = []
    passes = 0
    stopped = False
    for name, gate in GATE_SEQUENCE:
        if stopped:
            entries.append(GateEntry(gate=name, passed=None, evidence=()))
            continue
        result: GateResult = gate(pkg, config)
        entries.append(GateEntry(gate=name, passed=result.passed, evidence=result.evidence))
        if result.passed:
            passes += 1
        else:
            stopped = True
    note = "; ".join(pkg.defects[:5]) if pkg.defects else ""
    return PeiReport(route=route, gates=tuple(entries), level=LEVELS[passes], note=note)


def evaluate_pei(source, config: PeiConfig = PeiConfig()) -> PeiReport:
    """Classify any supported input.

    `source` is a filesystem path, a URL string, or a (name, bytes) pair.
    Static inputs terminate at L0 without the package ever being opened;
    Web inputs are recognized but reported as not evaluable.
    """
    data = None
    if isinstance(source, tuple):
        name, data = source
    else:
        name = str(source)

    if name.lower().startswith(("http://", "https://")):
        route = triage(name)
        return PeiReport(route=route, gates=_unevaluated_gates(), level=None,
                         evaluable=False, note=_WEB_NOTE)

    if data is None:
        path = Path(name)
        route = triage(name, None if path.suffix else path.read_bytes())
        if route.route == "Static":
            return PeiReport(route=route, gates=_unevaluated_gates(), level="L0")
        data = path.read_bytes()
    else:
        route = triage(name, data)
        if route.route == "Static":
            return PeiReport(route=route, gates=_unevaluated_gates(), level="L0")

    return evaluate_package_bytes(data, route, config)
