"""The five hierarchical editability gates over a loaded package.

Each gate is a static-analysis proxy for a manual inspection step, with
explicit numeric thresholds collected in PeiConfig so findings stay
auditable. Every failed gate carries evidence naming the slides involved.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .package import PresentationPackage, ShapeInfo, SlidePart

__all__ = [
    "PeiConfig",
    "GateResult",
    "gate_t1_text_integrity",
    "gate_t2_vector",
    "gate_t3_structure",
    "gate_t4_parametric",
    "gate_t5_cinematic",
    "GATE_SEQUENCE",
]

_COVERAGE_GRID = 128


@dataclass(frozen=True)
class PeiConfig:
    # T1: fragmentation proxy for OCR-style reconstructed paragraphs
    fragment_min_boxes: int = 4
    fragment_align_tolerance: float = 0.01    # of slide width
    fragment_gap_factor: float = 1.5
    # T1: rasterized-text proxy
    raster_coverage: float = 0.95
    raster_slide_fraction: float = 0.5
    # T3: hardcoded-background duplication proxy
    duplication_fraction: float = 0.8
    duplication_position_tolerance: float = 0.005   # of slide dimension
    # T3: atomic-isolation grouping rule
    grouping_shape_limit: int = 15


@dataclass(frozen=True)
class GateResult:
    gate: str
    passed: bool
    evidence: tuple

    def __post_init__(self):
        if not self.passed and not self.evidence:
            raise ValueError(f"gate {self.gate}: failures must carry evidence")


def _is_text_box(shape: ShapeInfo) -> bool:
    return shape.kind == "shape" and shape.has_text


def _is_vector_graphic(shape: ShapeInfo) -> bool:
    """Drawn vector elements: connectors, freeforms, and non-text shapes.

    A rectangle that carries text is a text box, not a graphic.
    """
    if shape.kind == "connector":
        return True
    if shape.kind != "shape":
        return False
    if shape.geometry == "custom":
        return True
    if shape.geometry is None:
        return False
    return not shape.has_text or shape.geometry != "rect"


def _picture_coverage(slide: SlidePart, slide_w: int, slide_h: int,
                      pictures=None) -> float:
    """Fraction of slide area covered by the union of raster pictures."""
    grid = np.zeros((_COVERAGE_GRID, _COVERAGE_GRID), dtype=bool)
    if pictures is None:
        pictures = [s for s in slide.leaf_shapes() if s.kind == "picture"]
    for pic in pictures:
        if None in (pic.x, pic.y, pic.cx, pic.cy):
            continue
        c0 = int(np.clip(pic.x / slide_w * _COVERAGE_GRID, 0, _COVERAGE_GRID))
        r0 = int(np.clip(pic.y / slide_h * _COVERAGE_GRID, 0, _COVERAGE_GRID))
        c1 = int(np.clip(np.ceil((pic.x + pic.cx) / slide_w * _COVERAGE_GRID), 0, _COVERAGE_GRID))
        r1 = int(np.clip(np.ceil((pic.y + pic.cy) / slide_h * _COVERAGE_GRID), 0, _COVERAGE_GRID))
        grid[r0:r1, c0:c1] = True
    return float(grid.mean())


def gate_t1_text_integrity(pkg: PresentationPackage, cfg: PeiConfig = PeiConfig()) -> GateResult:
    """Text must exist as runs and paragraphs, not as pixels or line stacks."""
    evidence = []

    total_runs = sum(s.text_run_count() for s in pkg.slides)
    if total_runs == 0:
        covered = [s.index for s in pkg.slides
                   if _picture_coverage(s, pkg.slide_width, pkg.slide_height) >= cfg.raster_coverage]
        if pkg.slides and len(covered) * 2 >= len(pkg.slides):
            for idx in covered:
                evidence.append((idx, "no text runs; raster pictures cover the slide"))
            return GateResult("T1", False, tuple(evidence))

    for slide in pkg.slides:
        boxes = [s for s in slide.leaf_shapes()
                 if _is_text_box(s) and s.paragraph_count == 1
                 and None not in (s.x, s.y, s.cy)]
        run = _longest_fragment_run(boxes, pkg.slide_width, cfg)
        if run >= cfg.fragment_min_boxes:
            return GateResult("T1", False, (
                (slide.index, f"{run} stacked single-line text boxes share a left edge"),
            ))

    for slide in pkg.slides:
        evidence.append((slide.index, f"{slide.text_run_count()} text shapes"))
    return GateResult("T1", True, tuple(evidence))


def _longest_fragment_run(boxes, slide_w: int, cfg: PeiConfig) -> int:
    """Longest chain of left-aligned single-paragraph boxes with small
    vertical gaps, the signature of a paragraph split line by line."""
    tolerance = cfg.fragment_align_tolerance * slide_w
    best = 1 if boxes else 0
    remaining = sorted(range(len(boxes)), key=lambda i: (boxes[i].x, boxes[i].y))
    while remaining:
        anchor = boxes[remaining[0]]
        column = [i for i in remaining if abs(boxes[i].x - anchor.x) <= tolerance]
        remaining = [i for i in remaining if i not in column]
        column.sort(key=lambda i: boxes[i].y)
        run = 1
        for i, j in zip(column, column[1:]):
            above, below = boxes[i], boxes[j]
            gap = below.y - (above.y + above.cy)
            run = run + 1 if gap < cfg.fragment_gap_factor * above.cy else 1
            best = max(best, run)
    return best


def gate_t2_vector(pkg: PresentationPackage, cfg: PeiConfig = PeiConfig()) -> GateResult:
    """Graphics must include vector elements, not raster screenshots alone.

    A full-bleed picture is exempt from the raster count when the slide has
    a distinct content layer on top of it.
    """
    vector_total = 0
    raster_total = 0
    evidence = []
    for slide in pkg.slides:
        leaves = list(slide.leaf_shapes())
        vectors = [s for s in leaves if _is_vector_graphic(s)]
        pictures = [s for s in leaves if s.kind == "picture"]
        content = [s for s in leaves if s.kind != "picture"]
        counted = []
        for pic in pictures:
            full_bleed = _picture_coverage(slide, pkg.slide_width, pkg.slide_height,
                                           [pic]) >= cfg.raster_coverage
            if full_bleed and content:
                continue
            counted.append(pic)
        vector_total += len(vectors)
        raster_total += len(counted)
        evidence.append((slide.index, f"{len(vectors)} vector, {len(counted)} raster elements"))

    if vector_total == 0 and raster_total >= 1:
        return GateResult("T2", False, tuple(
            (idx, text) for idx, text in evidence if "0 vector" in text
        ))
    return GateResult("T2", True, tuple(evidence))


def _signature(shape: ShapeInfo, slide_w: int, slide_h: int, tol: float):
    if shape.is_placeholder or shape.has_text:
        return None
    if shape.kind not in ("shape", "picture"):
        return None
    if None in (shape.x, shape.y):
        return None
    qx = round(shape.x / (tol * slide_w))
    qy = round(shape.y / (tol * slide_h))
    return (shape.kind, shape.geometry, shape.fill, qx, qy)


def gate_t3_structure(pkg: PresentationPackage, cfg: PeiConfig = PeiConfig()) -> GateResult:
    """Decoration belongs in masters and complex slides must use groups."""
    evidence = []
    failed = False

    # (i) hardcoded backgrounds: the same decorative shape pasted into most
    # slide parts instead of inherited. Needs at least two slides to mean
    # anything.
    if len(pkg.slides) >= 2:
        seen: dict = {}
        for slide in pkg.slides:
            sigs = set()
            for shape in slide.leaf_shapes():
                sig = _signature(shape, pkg.slide_width, pkg.slide_height,
                                 cfg.duplication_position_tolerance)
                if sig is not None:
                    sigs.add(sig)
            for sig in sigs:
                seen.setdefault(sig, []).append(slide.index)
        for sig, indices in sorted(seen.items(), key=str):
            if len(indices) >= 2 and len(indices) >= cfg.duplication_fraction * len(pkg.slides):
                failed = True
                evidence.append((indices[0],
                                 f"shape {sig[1]}@{sig[3]},{sig[4]} duplicated on "
                                 f"{len(indices)}/{len(pkg.slides)} slides instead of master"))

    # (ii) atomic isolation: busy slides without a single group
    for slide in pkg.slides:
        n = sum(1 for _ in slide.leaf_shapes())
        if n > cfg.grouping_shape_limit and slide.group_count() == 0:
            failed = True
            evidence.append((slide.index, f"{n} loose shapes with no grouping"))

    if failed:
        return GateResult("T3", False, tuple(evidence))
    for slide in pkg.slides:
        evidence.append((slide.index, f"{sum(1 for _ in slide.leaf_shapes())} shapes, "
                                      f"{slide.group_count()} groups"))
    return GateResult("T3", True, tuple(evidence))


def gate_t4_parametric(pkg: PresentationPackage, cfg: PeiConfig = PeiConfig()) -> GateResult:
    """Charts must be native objects with resolvable embedded workbooks."""
    if not pkg.charts:
        return GateResult("T4", False, ((None, "no native chart parts in package"),))
    evidence = []
    broken = []
    for chart in pkg.charts:
        if chart.workbook_target is None:
            broken.append((chart.slide_index, f"{chart.part_name}: no embedded workbook relationship"))
        elif not chart.workbook_present:
            broken.append((chart.slide_index,
                           f"{chart.part_name}: workbook link {chart.workbook_target!r} "
                           "dangles or is empty"))
        else:
            evidence.append((chart.slide_index,
                             f"{chart.part_name}: workbook {chart.workbook_target} "
                             f"({chart.workbook_size} bytes)"))
    if broken:
        return GateResult("T4", False, tuple(broken))
    return GateResult("T4", True, tuple(evidence))


def gate_t5_cinematic(pkg: PresentationPackage, cfg: PeiConfig = PeiConfig()) -> GateResult:
    """The deck must carry time-dimension structure and only embedded media."""
    animated = [s.index for s in pkg.slides if s.has_transition or s.has_timing]
    external = [m for m in pkg.media if m.external]

    if not animated:
        return GateResult("T5", False, ((None, "no slide transitions or animation trees"),))
    if external:
        return GateResult("T5", False, tuple(
            (None, f"{m.part_name}: media linked to external path {m.target!r}") for m in external
        ))
    return GateResult("T5", True, tuple(
        (idx, "transition or animation present") for idx in animated
    ))


GATE_SEQUENCE = (
    ("T1", gate_t1_text_integrity),
    ("T2", gate_t2_vector),
    ("T3", gate_t3_structure),
    ("T4", gate_t4_parametric),
    ("T5", gate_t5_cinematic),
)
