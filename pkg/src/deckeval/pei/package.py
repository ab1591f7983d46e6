"""Presentation package (ZIP-of-XML) loading for editability analysis.

Opens the container, resolves the main part, walks slide -> layout -> master
relationship chains, inventories charts with their embedded workbooks and
all media references, and extracts per-slide shape geometry. Defects in
optional parts are recorded, never fatal; only a broken container or a
missing main part aborts.
"""

from __future__ import annotations

import io
import posixpath
import zipfile
from dataclasses import dataclass, field
from xml.etree import ElementTree

__all__ = [
    "NS",
    "PackageError",
    "Relationship",
    "ShapeInfo",
    "SlidePart",
    "ChartPart",
    "MediaRef",
    "PresentationPackage",
    "open_package",
]

NS = {
    "p": "http://schemas.openxmlformats.org/presentationml/2006/main",
    "a": "http://schemas.openxmlformats.org/drawingml/2006/main",
    "r": "http://schemas.openxmlformats.org/officeDocument/2006/relationships",
    "c": "http://schemas.openxmlformats.org/drawingml/2006/chart",
    "rel": "http://schemas.openxmlformats.org/package/2006/relationships",
}

_R_ID = f"{{{NS['r']}}}id"
_R_EMBED = f"{{{NS['r']}}}embed"

_MEDIA_REL_MARKERS = ("/image", "/video", "/audio", "/media")


class PackageError(ValueError):
    """The container is not a readable presentation package."""


@dataclass(frozen=True)
class Relationship:
    rid: str
    type: str
    target: str          # resolved part name for internal targets, raw otherwise
    external: bool


@dataclass(frozen=True)
class ShapeInfo:
    kind: str            # shape | picture | connector | group | frame
    name: str = ""
    x: int | None = None
    y: int | None = None
    cx: int | None = None
    cy: int | None = None
    geometry: str | None = None
    fill: str | None = None
    has_text: bool = False
    paragraph_count: int = 0
    text_chars: int = 0
    is_placeholder: bool = False
    children: tuple = ()

    def leaves(self):
        """Drawable leaf elements, descending through groups."""
        if self.kind == "group":
            for child in self.children:
                yield from child.leaves()
        else:
            yield self


@dataclass(frozen=True)
class SlidePart:
    index: int
    part_name: str
    shapes: tuple
    has_transition: bool
    has_timing: bool
    layout_part: str | None
    rels: tuple

    def leaf_shapes(self):
        for shape in self.shapes:
            yield from shape.leaves()

    def group_count(self) -> int:
        def count(shapes):
            n = 0
            for s in shapes:
                if s.kind == "group":
                    n += 1 + count(s.children)
            return n
        return count(self.shapes)

    def text_run_count(self) -> int:
        return sum(1 for s in self.leaf_shapes() if s.has_text)


@dataclass(frozen=True)
class ChartPart:
    part_name: str
    slide_index: int
    workbook_target: str | None
    workbook_present: bool
    workbook_size: int


@dataclass(frozen=True)
class MediaRef:
    part_name: str
    rid: str
    rel_type: str
    target: str
    external: bool


@dataclass
class PresentationPackage:
    slide_width: int
    slide_height: int
    slides: list
    layout_parts: dict      # part name -> tuple[ShapeInfo]
    master_parts: dict      # part name -> tuple[ShapeInfo]
    layout_to_master: dict
    charts: list
    media: list
    part_names: set
    defects: list = field(default_factory=list)


def _parse_rels(zf: zipfile.ZipFile, part_name: str, defects: list) -> list:
    rels_name = posixpath.join(posixpath.dirname(part_name), "_rels",
                               posixpath.basename(part_name) + ".rels")
    if rels_name not in zf.namelist():
        return []
    try:
        root = ElementTree.fromstring(zf.read(rels_name))
    except ElementTree.ParseError as exc:
        defects.append(f"{rels_name}: malformed relationships XML ({exc})")
        return []
    out = []
    base = posixpath.dirname(part_name)
    for rel in root.findall("rel:Relationship", NS):
        rid = rel.get("Id", "")
        rtype = rel.get("Type", "")
        target = rel.get("Target", "")
        external = rel.get("TargetMode", "") == "External"
        if not external:
            target = posixpath.normpath(posixpath.join(base, target))
        out.append(Relationship(rid=rid, type=rtype, target=target, external=external))
    return out


def _emu(element, tag: str, attrs: tuple) -> tuple:
    node = element.find(tag, NS)
    if node is None:
        return tuple(None for _ in attrs)
    values = []
    for attr in attrs:
        raw = node.get(attr)
        values.append(int(raw) if raw is not None else None)
    return tuple(values)


def _shape_from_sp(sp) -> ShapeInfo:
    nv = sp.find("p:nvSpPr", NS)
    name = ""
    placeholder = False
    if nv is not None:
        cnv = nv.find("p:cNvPr", NS)
        if cnv is not None:
            name = cnv.get("name", "")
        placeholder = nv.find("p:nvPr/p:ph", NS) is not None
    sppr = sp.find("p:spPr", NS)
    x = y = cx = cy = None
    geometry = None
    fill = None
    if sppr is not None:
        xfrm = sppr.find("a:xfrm", NS)
        if xfrm is not None:
            x, y = _emu(xfrm, "a:off", ("x", "y"))
            cx, cy = _emu(xfrm, "a:ext", ("cx", "cy"))
        prst = sppr.find("a:prstGeom", NS)
        if prst is not None:
            geometry = prst.get("prst", "rect")
        elif sppr.find("a:custGeom", NS) is not None:
            geometry = "custom"
        clr = sppr.find("a:solidFill/a:srgbClr", NS)
        if clr is not None:
            fill = clr.get("val")
    paragraphs = sp.findall("p:txBody/a:p", NS)
    text = "".join(t.text or "" for t in sp.findall("p:txBody/a:p/a:r/a:t", NS))
    return ShapeInfo(
        kind="shape", name=name, x=x, y=y, cx=cx, cy=cy, geometry=geometry, fill=fill,
        has_text=bool(text.strip()), paragraph_count=len(paragraphs),
        text_chars=len(text), is_placeholder=placeholder,
    )


def _shape_from_pic(pic) -> ShapeInfo:
    cnv = pic.find("p:nvPicPr/p:cNvPr", NS)
    name = cnv.get("name", "") if cnv is not None else ""
    x = y = cx = cy = None
    sppr = pic.find("p:spPr", NS)
    if sppr is not None:
        xfrm = sppr.find("a:xfrm", NS)
        if xfrm is not None:
            x, y = _emu(xfrm, "a:off", ("x", "y"))
            cx, cy = _emu(xfrm, "a:ext", ("cx", "cy"))
    return ShapeInfo(kind="picture", name=name, x=x, y=y, cx=cx, cy=cy, geometry="picture")


def _shapes_from_tree(tree_element) -> tuple:
    shapes = []
    for child in tree_element:
        tag = child.tag.split("}")[-1]
        if tag == "sp":
            shapes.append(_shape_from_sp(child))
        elif tag == "pic":
            shapes.append(_shape_from_pic(child))
        elif tag == "cxnSp":
            shapes.append(ShapeInfo(kind="connector", geometry="connector"))
        elif tag == "grpSp":
            inner = _shapes_from_tree(child)
            xfrm = child.find("p:grpSpPr/a:xfrm", NS)
            x = y = cx = cy = None
            if xfrm is not None:
                x, y = _emu(xfrm, "a:off", ("x", "y"))
                cx, cy = _emu(xfrm, "a:ext", ("cx", "cy"))
            shapes.append(ShapeInfo(kind="group", x=x, y=y, cx=cx, cy=cy, children=inner))
        elif tag == "graphicFrame":
            shapes.append(ShapeInfo(kind="frame"))
    return tuple(shapes)


def _sp_tree_shapes(root, defects: list, part_name: str) -> tuple:
    tree = root.find("p:cSld/p:spTree", NS)
    if tree is None:
        defects.append(f"{part_name}: missing shape tree")
        return ()
    return _shapes_from_tree(tree)


def open_package(data: bytes) -> PresentationPackage:
    """Load a presentation package from raw bytes.

    Raises PackageError when the bytes are not a ZIP or the presentation
    main part cannot be located; anything less is recorded as a defect.
    """
    try:
        zf = zipfile.ZipFile(io.BytesIO(data))
    except (zipfile.BadZipFile, OSError) as exc:
        raise PackageError(f"corrupt package: not a readable ZIP container ({exc})") from None

    defects: list[str] = []
    names = set(zf.namelist())

    main_part = None
    for rel in _parse_rels(zf, "", defects):
        if rel.type.endswith("/officeDocument") and not rel.external:
            main_part = rel.target
            break
    if main_part is None and "ppt/presentation.xml" in names:
        main_part = "ppt/presentation.xml"
        defects.append("package-level relationships missing; fell back to ppt/presentation.xml")
    if main_part is None or main_part not in names:
        raise PackageError("corrupt package: presentation main part not found")

    try:
        pres = ElementTree.fromstring(zf.read(main_part))
    except ElementTree.ParseError as exc:
        raise PackageError(f"corrupt package: unreadable main part ({exc})") from None

    sld_sz = pres.find("p:sldSz", NS)
    slide_w = int(sld_sz.get("cx", "12192000")) if sld_sz is not None else 12192000
    slide_h = int(sld_sz.get("cy", "6858000")) if sld_sz is not None else 6858000

    pres_rels = {r.rid: r for r in _parse_rels(zf, main_part, defects)}
    slide_parts = []
    for sld_id in pres.findall("p:sldIdLst/p:sldId", NS):
        rid = sld_id.get(_R_ID)
        rel = pres_rels.get(rid)
        if rel is None or rel.target not in names:
            defects.append(f"{main_part}: slide relationship {rid!r} dangles")
            continue
        slide_parts.append(rel.target)

    slides = []
    charts: list[ChartPart] = []
    media: list[MediaRef] = []
    layout_parts: dict = {}
    master_parts: dict = {}
    layout_to_master: dict = {}

    for index, part in enumerate(slide_parts):
        try:
            root = ElementTree.fromstring(zf.read(part))
        except ElementTree.ParseError as exc:
            defects.append(f"{part}: malformed slide XML ({exc})")
            slides.append(SlidePart(index=index, part_name=part, shapes=(),
                                    has_transition=False, has_timing=False,
                                    layout_part=None, rels=()))
            continue

        rels = _parse_rels(zf, part, defects)
        layout_part = None
        for rel in rels:
            if rel.type.endswith("/slideLayout") and not rel.external:
                if rel.target in names:
                    layout_part = rel.target
                else:
                    defects.append(f"{part}: layout relationship target {rel.target!r} missing")
            elif rel.type.endswith("/chart") and not rel.external:
                charts.append(_load_chart(zf, rel.target, index, names, defects))
            if any(marker in rel.type for marker in _MEDIA_REL_MARKERS):
                media.append(MediaRef(part_name=part, rid=rel.rid, rel_type=rel.type,
                                      target=rel.target, external=rel.external))
        if layout_part is None:
            defects.append(f"{part}: no slide layout resolved")

        timing = root.find("p:timing", NS)
        slides.append(SlidePart(
            index=index,
            part_name=part,
            shapes=_sp_tree_shapes(root, defects, part),
            has_transition=root.find("p:transition", NS) is not None,
            has_timing=timing is not None and len(timing) > 0,
            layout_part=layout_part,
            rels=tuple(rels),
        ))

        if layout_part and layout_part not in layout_parts:
            layout_parts[layout_part] = _load_aux_part(zf, layout_part, defects)
            master = None
            for rel in _parse_rels(zf, layout_part, defects):
                if rel.type.endswith("/slideMaster") and not rel.external:
                    if rel.target in names:
                        master = rel.target
                    else:
                        defects.append(f"{layout_part}: master relationship target {rel.target!r} missing")
            layout_to_master[layout_part] = master
            if master is None:
                defects.append(f"{layout_part}: no slide master resolved")
            elif master not in master_parts:
                master_parts[master] = _load_aux_part(zf, master, defects)

    if not slides:
        defects.append("package contains no slides")

    return PresentationPackage(
        slide_width=slide_w,
        slide_height=slide_h,
        slides=slides,
        layout_parts=layout_parts,
        master_parts=master_parts,
        layout_to_master=layout_to_master,
        charts=charts,
        media=media,
        part_names=names,
        defects=defects,
    )


def _load_aux_part(zf: zipfile.ZipFile, part: str, defects: list) -> tuple:
    try:
        root = ElementTree.fromstring(zf.read(part))
    except (KeyError, ElementTree.ParseError) as exc:
        defects.append(f"{part}: unreadable ({exc})")
        return ()
    return _sp_tree_shapes(root, defects, part)


def _load_chart(zf: zipfile.ZipFile, part: str, slide_index: int,
                names: set, defects: list) -> ChartPart:
    workbook_target = None
    present = False
    size = 0
    if part not in names:
        defects.append(f"chart part {part!r} missing from package")
        return ChartPart(part_name=part, slide_index=slide_index,
                         workbook_target=None, workbook_present=False, workbook_size=0)
    for rel in _parse_rels(zf, part, defects):
        if rel.type.endswith("/package") or rel.type.endswith("/oleObject"):
            workbook_target = rel.target
            if not rel.external and rel.target in names:
                size = zf.getinfo(rel.target).file_size
                present = size > 0
            break
    return ChartPart(part_name=part, slide_index=slide_index,
                     workbook_target=workbook_target, workbook_present=present,
                     workbook_size=size)
