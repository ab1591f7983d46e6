"""Editability analysis of native presentation packages."""

from .fixtures import (
    FIXTURE_KINDS,
    build_fixture,
    fixture_filename,
    with_member_removed,
    with_member_replaced,
)
from .gates import (
    GateResult,
    PeiConfig,
    gate_t1_text_integrity,
    gate_t2_vector,
    gate_t3_structure,
    gate_t4_parametric,
    gate_t5_cinematic,
)
from .package import (
    ChartPart,
    MediaRef,
    PackageError,
    PresentationPackage,
    ShapeInfo,
    SlidePart,
    open_package,
)
from .report import LEVELS, PeiReport, evaluate_package_bytes, evaluate_pei
from .triage import NATIVE_EXTENSIONS, STATIC_EXTENSIONS, TriageRoute, triage

__all__ = [
    "FIXTURE_KINDS",
    "build_fixture",
    "fixture_filename",
    "with_member_removed",
    "with_member_replaced",
    "GateResult",
    "PeiConfig",
    "gate_t1_text_integrity",
    "gate_t2_vector",
    "gate_t3_structure",
    "gate_t4_parametric",
    "gate_t5_cinematic",
    "ChartPart",
    "MediaRef",
    "PackageError",
    "PresentationPackage",
    "ShapeInfo",
    "SlidePart",
    "open_package",
    "LEVELS",
    "PeiReport",
    "evaluate_package_bytes",
    "evaluate_pei",
    "NATIVE_EXTENSIONS",
    "STATIC_EXTENSIONS",
    "TriageRoute",
    "triage",
]
