"""Deterministic minimal presentation fixtures for every gate outcome.

Each builder assembles a three-slide package from string-template parts and
zips it with a frozen timestamp, so identical requests produce identical
bytes. The canonical set covers one fixture per final level L0..L5; extra
variants exercise individual gate failures.
"""

from __future__ import annotations

import io
import struct
import zipfile
import zlib

__all__ = [
    "FIXTURE_KINDS",
    "build_fixture",
    "fixture_filename",
    "with_member_removed",
    "with_member_replaced",
]

FIXTURE_KINDS = ("l0", "l1", "l2", "l3", "l4", "l5")
EXTRA_KINDS = ("t1_fragmented", "t1_rasterized", "t3_ungrouped", "t3_grouped", "t5_external_media")

_ZIP_DATE = (1980, 1, 1, 0, 0, 0)

SLIDE_W = 12192000
SLIDE_H = 6858000

_NS_DECL = (
    'xmlns:a="http://schemas.openxmlformats.org/drawingml/2006/main" '
    'xmlns:r="http://schemas.openxmlformats.org/officeDocument/2006/relationships" '
    'xmlns:p="http://schemas.openxmlformats.org/presentationml/2006/main"'
)

_XML_HEAD = '<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'

_TREE_BOILERPLATE = (
    '<p:nvGrpSpPr><p:cNvPr id="1" name=""/><p:cNvGrpSpPr/><p:nvPr/></p:nvGrpSpPr>'
    '<p:grpSpPr><a:xfrm><a:off x="0" y="0"/><a:ext cx="0" cy="0"/>'
    '<a:chOff x="0" y="0"/><a:chExt cx="0" cy="0"/></a:xfrm></p:grpSpPr>'
)

_REL_TYPE = {
    "officeDocument": "http://schemas.openxmlformats.org/officeDocument/2006/relationships/officeDocument",
    "slideMaster": "http://schemas.openxmlformats.org/officeDocument/2006/relationships/slideMaster",
    "slideLayout": "http://schemas.openxmlformats.org/officeDocument/2006/relationships/slideLayout",
    "slide": "http://schemas.openxmlformats.org/officeDocument/2006/relationships/slide",
    "image": "http://schemas.openxmlformats.org/officeDocument/2006/relationships/image",
    "chart": "http://schemas.openxmlformats.org/officeDocument/2006/relationships/chart",
    "package": "http://schemas.openxmlformats.org/officeDocument/2006/relationships/package",
    "video": "http://schemas.openxmlformats.org/officeDocument/2006/relationships/video",
}


def _rels_xml(rels) -> str:
    lines = [_XML_HEAD,
             '<Relationships xmlns="http://schemas.openxmlformats.org/package/2006/relationships">']
    for rid, rtype, target, external in rels:
        mode = ' TargetMode="External"' if external else ""
        lines.append(f'<Relationship Id="{rid}" Type="{_REL_TYPE[rtype]}" Target="{target}"{mode}/>')
    lines.append("</Relationships>")
    return "".join(lines)


def _text_box(shape_id: int, x: int, y: int, cx: int, cy: int, paragraphs) -> str:
    paras = "".join(
        f'<a:p><a:r><a:rPr lang="en-US"/><a:t>{text}</a:t></a:r></a:p>' for text in paragraphs
    )
    return (
        f'<p:sp><p:nvSpPr><p:cNvPr id="{shape_id}" name="TextBox {shape_id}"/>'
        '<p:cNvSpPr txBox="1"/><p:nvPr/></p:nvSpPr>'
        f'<p:spPr><a:xfrm><a:off x="{x}" y="{y}"/><a:ext cx="{cx}" cy="{cy}"/></a:xfrm>'
        '<a:prstGeom prst="rect"><a:avLst/></a:prstGeom></p:spPr>'
        f'<p:txBody><a:bodyPr/><a:lstStyle/>{paras}</p:txBody></p:sp>'
    )


def _vector_shape(shape_id: int, prst: str, x: int, y: int, cx: int, cy: int, fill: str) -> str:
    return (
        f'<p:sp><p:nvSpPr><p:cNvPr id="{shape_id}" name="Shape {shape_id}"/>'
        '<p:cNvSpPr/><p:nvPr/></p:nvSpPr>'
        f'<p:spPr><a:xfrm><a:off x="{x}" y="{y}"/><a:ext cx="{cx}" cy="{cy}"/></a:xfrm>'
        f'<a:prstGeom prst="{prst}"><a:avLst/></a:prstGeom>'
        f'<a:solidFill><a:srgbClr val="{fill}"/></a:solidFill></p:spPr>'
        '<p:txBody><a:bodyPr/><a:lstStyle/><a:p/></p:txBody></p:sp>'
    )


def _picture(shape_id: int, rid: str, x: int, y: int, cx: int, cy: int) -> str:
    return (
        f'<p:pic><p:nvPicPr><p:cNvPr id="{shape_id}" name="Picture {shape_id}"/>'
        '<p:cNvPicPr/><p:nvPr/></p:nvPicPr>'
        f'<p:blipFill><a:blip r:embed="{rid}"/><a:stretch><a:fillRect/></a:stretch></p:blipFill>'
        f'<p:spPr><a:xfrm><a:off x="{x}" y="{y}"/><a:ext cx="{cx}" cy="{cy}"/></a:xfrm>'
        '<a:prstGeom prst="rect"><a:avLst/></a:prstGeom></p:spPr></p:pic>'
    )


def _chart_frame(shape_id: int, rid: str, x: int, y: int, cx: int, cy: int) -> str:
    return (
        f'<p:graphicFrame><p:nvGraphicFramePr><p:cNvPr id="{shape_id}" name="Chart {shape_id}"/>'
        '<p:cNvGraphicFramePr/><p:nvPr/></p:nvGraphicFramePr>'
        f'<p:xfrm><a:off x="{x}" y="{y}"/><a:ext cx="{cx}" cy="{cy}"/></p:xfrm>'
        '<a:graphic><a:graphicData uri="http://schemas.openxmlformats.org/drawingml/2006/chart">'
        f'<c:chart xmlns:c="http://schemas.openxmlformats.org/drawingml/2006/chart" r:id="{rid}"/>'
        "</a:graphicData></a:graphic></p:graphicFrame>"
    )


def _group(shape_id: int, x: int, y: int, cx: int, cy: int, children: str) -> str:
    return (
        f'<p:grpSp><p:nvGrpSpPr><p:cNvPr id="{shape_id}" name="Group {shape_id}"/>'
        '<p:cNvGrpSpPr/><p:nvPr/></p:nvGrpSpPr>'
        f'<p:grpSpPr><a:xfrm><a:off x="{x}" y="{y}"/><a:ext cx="{cx}" cy="{cy}"/>'
        f'<a:chOff x="{x}" y="{y}"/><a:chExt cx="{cx}" cy="{cy}"/></a:xfrm></p:grpSpPr>'
        f"{children}</p:grpSp>"
    )


def _slide_xml(shapes: str, transition: bool) -> str:
    trans = "<p:transition><p:fade/></p:transition>" if transition else ""
    return (
        f"{_XML_HEAD}<p:sld {_NS_DECL}><p:cSld><p:spTree>{_TREE_BOILERPLATE}{shapes}"
        f"</p:spTree></p:cSld>{trans}</p:sld>"
    )


def _master_xml(shapes: str) -> str:
    clr_map = ('<p:clrMap bg1="lt1" tx1="dk1" bg2="lt2" tx2="dk2" accent1="accent1" '
               'accent2="accent2" accent3="accent3" accent4="accent4" accent5="accent5" '
               'accent6="accent6" hlink="hlink" folHlink="folHlink"/>')
    return (
        f"{_XML_HEAD}<p:sldMaster {_NS_DECL}><p:cSld><p:spTree>{_TREE_BOILERPLATE}{shapes}"
        f"</p:spTree></p:cSld>{clr_map}"
        '<p:sldLayoutIdLst><p:sldLayoutId id="2147483649" r:id="rId1"/></p:sldLayoutIdLst>'
        "</p:sldMaster>"
    )


def _layout_xml() -> str:
    return (
        f"{_XML_HEAD}<p:sldLayout {_NS_DECL}><p:cSld><p:spTree>{_TREE_BOILERPLATE}"
        "</p:spTree></p:cSld><p:clrMapOvr><a:masterClrMapping/></p:clrMapOvr></p:sldLayout>"
    )


def _presentation_xml(slide_count: int) -> str:
    slide_ids = "".join(
        f'<p:sldId id="{256 + i}" r:id="rId{2 + i}"/>' for i in range(slide_count)
    )
    return (
        f"{_XML_HEAD}<p:presentation {_NS_DECL}>"
        '<p:sldMasterIdLst><p:sldMasterId id="2147483648" r:id="rId1"/></p:sldMasterIdLst>'
        f"<p:sldIdLst>{slide_ids}</p:sldIdLst>"
        f'<p:sldSz cx="{SLIDE_W}" cy="{SLIDE_H}"/><p:notesSz cx="{SLIDE_H}" cy="{SLIDE_W}"/>'
        "</p:presentation>"
    )


def _content_types(slide_count: int, with_chart: bool) -> str:
    overrides = [
        '<Override PartName="/ppt/presentation.xml" ContentType="application/vnd.openxmlformats-officedocument.presentationml.presentation.main+xml"/>',
        '<Override PartName="/ppt/slideMasters/slideMaster1.xml" ContentType="application/vnd.openxmlformats-officedocument.presentationml.slideMaster+xml"/>',
        '<Override PartName="/ppt/slideLayouts/slideLayout1.xml" ContentType="application/vnd.openxmlformats-officedocument.presentationml.slideLayout+xml"/>',
    ]
    for i in range(1, slide_count + 1):
        overrides.append(
            f'<Override PartName="/ppt/slides/slide{i}.xml" ContentType="application/vnd.openxmlformats-officedocument.presentationml.slide+xml"/>'
        )
    if with_chart:
        overrides.append(
            '<Override PartName="/ppt/charts/chart1.xml" ContentType="application/vnd.openxmlformats-officedocument.drawingml.chart+xml"/>'
        )
    return (
        f'{_XML_HEAD}<Types xmlns="http://schemas.openxmlformats.org/package/2006/content-types">'
        '<Default Extension="rels" ContentType="application/vnd.openxmlformats-package.relationships+xml"/>'
        '<Default Extension="xml" ContentType="application/xml"/>'
        '<Default Extension="png" ContentType="image/png"/>'
        '<Default Extension="xlsx" ContentType="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet"/>'
        + "".join(overrides) + "</Types>"
    )


def _chart_xml() -> str:
    return (
        f'{_XML_HEAD}<c:chartSpace '
        'xmlns:c="http://schemas.openxmlformats.org/drawingml/2006/chart" '
        'xmlns:a="http://schemas.openxmlformats.org/drawingml/2006/main" '
        'xmlns:r="http://schemas.openxmlformats.org/officeDocument/2006/relationships">'
        "<c:chart><c:plotArea><c:layout/></c:plotArea></c:chart>"
        '<c:externalData r:id="rId1"><c:autoUpdate val="0"/></c:externalData>'
        "</c:chartSpace>"
    )


def _tiny_png() -> bytes:
    def chunk(tag: bytes, payload: bytes) -> bytes:
        return (struct.pack(">I", len(payload)) + tag + payload
                + struct.pack(">I", zlib.crc32(tag + payload)))

    header = struct.pack(">IIBBBBB", 1, 1, 8, 2, 0, 0, 0)
    idat = zlib.compress(b"\x00\xc8\x40\x40", 9)
    return (b"\x89PNG\r\n\x1a\n" + chunk(b"IHDR", header)
            + chunk(b"IDAT", idat) + chunk(b"IEND", b""))


def _tiny_xlsx() -> bytes:
    buf = io.BytesIO()
    with zipfile.ZipFile(buf, "w", zipfile.ZIP_DEFLATED) as zf:
        info = zipfile.ZipInfo("xl/worksheets/sheet1.xml", date_time=_ZIP_DATE)
        zf.writestr(info, _XML_HEAD + "<worksheet><sheetData/></worksheet>")
    return buf.getvalue()


def _minimal_pdf() -> bytes:
    body = (
        b"%PDF-1.4\n"
        b"1 0 obj << /Type /Catalog /Pages 2 0 R >> endobj\n"
        b"2 0 obj << /Type /Pages /Kids [3 0 R] /Count 1 >> endobj\n"
        b"3 0 obj << /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] >> endobj\n"
        b"trailer << /Root 1 0 R /Size 4 >>\n"
        b"%%EOF\n"
    )
    return body


def _zip_parts(parts: dict) -> bytes:
    buf = io.BytesIO()
    with zipfile.ZipFile(buf, "w", zipfile.ZIP_DEFLATED) as zf:
        for name in sorted(parts):
            info = zipfile.ZipInfo(name, date_time=_ZIP_DATE)
            info.external_attr = 0o600 << 16
            data = parts[name]
            zf.writestr(info, data if isinstance(data, bytes) else data.encode("utf-8"))
    return buf.getvalue()


def _body_text(slide_no: int) -> str:
    paragraphs = (
        f"Quarterly summary for section {slide_no}",
        "Revenue grew steadily across all regions this period.",
        "Next steps focus on the rollout schedule and staffing.",
    )
    return _text_box(2, 900000, 600000, 7000000, 1800000, paragraphs)


def _build_deck(slide_shapes, slide_rels, slide_transitions, with_chart: bool,
                extra_parts: dict | None = None) -> bytes:
    n = len(slide_shapes)
    parts = {
        "[Content_Types].xml": _content_types(n, with_chart),
        "_rels/.rels": _rels_xml([("rId1", "officeDocument", "ppt/presentation.xml", False)]),
        "ppt/presentation.xml": _presentation_xml(n),
        "ppt/_rels/presentation.xml.rels": _rels_xml(
            [("rId1", "slideMaster", "slideMasters/slideMaster1.xml", False)]
            + [(f"rId{2 + i}", "slide", f"slides/slide{i + 1}.xml", False) for i in range(n)]
        ),
        "ppt/slideMasters/slideMaster1.xml": _master_xml(
            _vector_shape(2, "rect", 0, 6258000, SLIDE_W, 600000, "1F3251")
        ),
        "ppt/slideMasters/_rels/slideMaster1.xml.rels": _rels_xml(
            [("rId1", "slideLayout", "../slideLayouts/slideLayout1.xml", False)]
        ),
        "ppt/slideLayouts/slideLayout1.xml": _layout_xml(),
        "ppt/slideLayouts/_rels/slideLayout1.xml.rels": _rels_xml(
            [("rId1", "slideMaster", "../slideMasters/slideMaster1.xml", False)]
        ),
    }
    for i in range(n):
        parts[f"ppt/slides/slide{i + 1}.xml"] = _slide_xml(slide_shapes[i], slide_transitions[i])
        parts[f"ppt/slides/_rels/slide{i + 1}.xml.rels"] = _rels_xml(
            [("rId1", "slideLayout", "../slideLayouts/slideLayout1.xml", False)] + slide_rels[i]
        )
    if with_chart:
        parts["ppt/charts/chart1.xml"] = _chart_xml()
        parts["ppt/charts/_rels/chart1.xml.rels"] = _rels_xml(
            [("rId1", "package", "../embeddings/data.xlsx", False)]
        )
        parts["ppt/embeddings/data.xlsx"] = _tiny_xlsx()
    if extra_parts:
        parts.update(extra_parts)
    return _zip_parts(parts)


def _fake_chart_bars(slide_no: int, start_id: int) -> list:
    bars = []
    for j in range(3):
        bars.append(_vector_shape(
            start_id + j, "rect",
            1200000 + j * 900000 + slide_no * 150000,
            4500000 - j * 500000,
            600000, 1200000 + j * 500000,
            "4F81BD",
        ))
    return bars


def build_fixture(kind: str) -> bytes:
    """Build a fixture package (or PDF) of the requested kind."""
    kind = kind.lower()
    if kind not in FIXTURE_KINDS + EXTRA_KINDS:
        raise ValueError(f"unknown fixture kind {kind!r}; "
                         f"choose from {FIXTURE_KINDS + EXTRA_KINDS}")

    if kind == "l0":
        return _minimal_pdf()

    if kind == "l1":
        # text is real but every graphic is a raster picture
        shapes, rels = [], []
        for i in range(3):
            shapes.append(_body_text(i + 1)
                          + _picture(3, "rId2", 8200000, 800000, 3400000, 2600000))
            rels.append([("rId2", "image", "../media/image1.png", False)])
        return _build_deck(shapes, rels, [False] * 3, with_chart=False,
                           extra_parts={"ppt/media/image1.png": _tiny_png()})

    if kind == "l2":
        # vector content, but a logo pasted identically on every slide
        shapes, rels = [], []
        for i in range(3):
            shapes.append(
                _body_text(i + 1)
                + _vector_shape(3, "ellipse", 8400000 + i * 400000, 3200000, 1600000, 1600000, "C0504D")
                + _vector_shape(4, "rect", 10800000, 200000, 900000, 500000, "9BBB59")
            )
            rels.append([])
        return _build_deck(shapes, rels, [False] * 3, with_chart=False)

    if kind in ("l3", "l4", "l5", "t5_external_media"):
        with_chart = kind != "l3"
        transitions = kind in ("l5", "t5_external_media")
        shapes, rels = [], []
        for i in range(3):
            body = (
                _body_text(i + 1)
                + _vector_shape(3, "ellipse", 8400000 + i * 400000, 3200000, 1600000, 1600000, "C0504D")
                + "".join(_fake_chart_bars(i, 10))
            )
            slide_rels = []
            if with_chart and i == 0:
                body += _chart_frame(20, "rId3", 1000000, 1000000, 5000000, 3000000)
                slide_rels.append(("rId3", "chart", "../charts/chart1.xml", False))
            if kind == "t5_external_media" and i == 0:
                slide_rels.append(("rId4", "video", "file:///C:/media/intro.mp4", True))
            shapes.append(body)
            rels.append(slide_rels)
        return _build_deck(shapes, rels, [transitions] * 3, with_chart=with_chart)

    if kind == "t1_fragmented":
        shapes, rels = [], []
        for i in range(3):
            stack = "".join(
                _text_box(2 + j, 900000, 600000 + j * 400000, 7000000, 300000,
                          (f"line {j + 1} of a paragraph",))
                for j in range(6)
            )
            shapes.append(stack)
            rels.append([])
        return _build_deck(shapes, rels, [False] * 3, with_chart=False)

    if kind == "t1_rasterized":
        shapes, rels = [], []
        for i in range(3):
            shapes.append(_picture(2, "rId2", 0, 0, SLIDE_W, SLIDE_H))
            rels.append([("rId2", "image", "../media/image1.png", False)])
        return _build_deck(shapes, rels, [False] * 3, with_chart=False,
                           extra_parts={"ppt/media/image1.png": _tiny_png()})

    if kind in ("t3_ungrouped", "t3_grouped"):
        shapes, rels = [], []
        for i in range(3):
            body = _body_text(i + 1)
            if i == 0:
                tiles = "".join(
                    _vector_shape(10 + j, "rect",
                                  600000 + (j % 5) * 1000000, 2600000 + (j // 5) * 900000,
                                  700000, 600000, "8064A2")
                    for j in range(20)
                )
                if kind == "t3_grouped":
                    body += _group(9, 600000, 2600000, 5000000, 3600000, tiles)
                else:
                    body += tiles
            else:
                body += _vector_shape(3, "ellipse", 8400000 + i * 400000, 3200000,
                                      1600000, 1600000, "C0504D")
            shapes.append(body)
            rels.append([])
        return _build_deck(shapes, rels, [False] * 3, with_chart=False)

    raise AssertionError(kind)


def fixture_filename(kind: str) -> str:
    return "fixture_l0.pdf" if kind.lower() == "l0" else f"fixture_{kind.lower()}.pptx"


def with_member_removed(data: bytes, member: str) -> bytes:
    """Package bytes minus one member; used to break workbook links in tests."""
    src = zipfile.ZipFile(io.BytesIO(data))
    if member not in src.namelist():
        raise KeyError(f"package has no member {member!r}")
    parts = {name: src.read(name) for name in src.namelist() if name != member}
    return _zip_parts(parts)


def with_member_replaced(data: bytes, member: str, content: bytes) -> bytes:
    src = zipfile.ZipFile(io.BytesIO(data))
    parts = {name: src.read(name) for name in src.namelist()}
    parts[member] = content
    return _zip_parts(parts)
