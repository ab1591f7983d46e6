"""
Generate the bundled sample deck
================================

Builds the six-slide synthetic deck under sampledeck/: slide images in a
few distinct visual styles, layout sidecars for the slides that carry text
blocks, a JSON manifest, and a native package produced by the fixture
builder. Everything is seeded and timestamp-free, so reruns are
byte-identical.
"""

from pathlib import Path

import numpy as np
from PIL import Image

from deckeval.pei import build_fixture

OUT = Path(__file__).resolve().parent.parent / "sampledeck"
W, H = 320, 240

rng = np.random.default_rng(20240901)


def blank(color):
    arr = np.empty((H, W, 3), dtype=np.uint8)
    arr[:] = color
    return arr


def v_gradient(top, bottom):
    t = np.linspace(0.0, 1.0, H)[:, None, None]
    arr = (1 - t) * np.asarray(top, float) + t * np.asarray(bottom, float)
    return np.clip(arr, 0, 255).astype(np.uint8) * np.ones((1, W, 1), dtype=np.uint8)


def text_block(arr, x0, y0, x1, y1, ink, paper=None, line_h=6, gap=4):
    """Striped rows standing in for rendered text lines."""
    if paper is not None:
        arr[y0:y1, x0:x1] = paper
    y = y0 + gap
    while y + line_h < y1:
        width = int((x1 - x0) * (0.55 + 0.4 * rng.random()))
        arr[y:y + line_h, x0 + 4:x0 + 4 + width] = ink
        y += line_h + gap
    return (x0, y0, x1, y1)


def circle(arr, cx, cy, r, color):
    yy, xx = np.mgrid[0:H, 0:W]
    arr[(yy - cy) ** 2 + (xx - cx) ** 2 <= r * r] = color


slides = []
layouts = {}

# 1 -- title slide: deep blue field, bright title block, accent disc
s = blank((22, 38, 74))
title = text_block(s, 30, 40, 290, 90, (235, 240, 250), line_h=10, gap=6)
subtitle = text_block(s, 30, 110, 220, 140, (170, 190, 225))
circle(s, 270, 180, 28, (240, 170, 60))
slides.append(s)
layouts[1] = [
    {"label": "doc_title", "score": 0.93, "coordinate": list(title)},
    {"label": "text", "score": 0.88, "coordinate": list(subtitle)},
]

# 2 -- content slide: white paper, two dark text columns, footer
s = blank((250, 250, 248))
left = text_block(s, 20, 30, 150, 190, (40, 40, 45))
right = text_block(s, 170, 30, 300, 190, (40, 40, 45))
footer = text_block(s, 20, 215, 120, 232, (120, 120, 125))
slides.append(s)
layouts[2] = [
    {"label": "text", "score": 0.96, "coordinate": list(left)},
    {"label": "text", "score": 0.95, "coordinate": list(right)},
    {"label": "footer", "score": 0.81, "coordinate": list(footer)},
]

# 3 -- image-heavy divider: warm gradient plus a photographic noise patch
s = v_gradient((230, 120, 60), (130, 30, 90))
patch = (rng.random((120, 160, 3)) * 255).astype(np.uint8)
s[60:180, 80:240] = (0.6 * patch + 0.4 * s[60:180, 80:240]).astype(np.uint8)
slides.append(s)

# 4 -- chart slide: light ground, colored bars, caption text
s = blank((245, 247, 250))
bar_colors = [(79, 129, 189), (192, 80, 77), (155, 187, 89), (128, 100, 162)]
for i, color in enumerate(bar_colors):
    height = 40 + 30 * i
    s[190 - height:190, 40 + i * 60:80 + i * 60] = color
caption = text_block(s, 40, 200, 280, 228, (60, 60, 70))
slides.append(s)
layouts[4] = [
    {"label": "image", "score": 0.84, "coordinate": [40, 60, 260, 190]},
    {"label": "text", "score": 0.91, "coordinate": list(caption)},
]

# 5 -- the low-contrast offender: gray on gray text
s = blank((140, 142, 150))
fog = text_block(s, 40, 50, 280, 170, (120, 122, 132))
slides.append(s)
layouts[5] = [
    {"label": "text", "score": 0.89, "coordinate": list(fog)},
]

# 6 -- saturated block finale, no text at all
s = blank((18, 18, 20))
s[:, 0:110] = (200, 40, 60)
s[:, 110:210] = (40, 170, 90)
s[:, 210:320] = (50, 90, 200)
circle(s, 160, 120, 36, (250, 220, 80))
slides.append(s)


def main():
    OUT.mkdir(exist_ok=True)
    names = []
    for i, arr in enumerate(slides, start=1):
        name = f"slide_{i:04d}.png"
        Image.fromarray(arr).save(OUT / name)
        names.append(name)
        if i in layouts:
            import json
            sidecar = {"elements": layouts[i]}
            (OUT / f"slide_{i:04d}.layout.json").write_text(
                json.dumps(sidecar, indent=2) + "\n", "utf-8")

    (OUT / "package.pptx").write_bytes(build_fixture("l5"))

    import json
    manifest = {
        "topic": "sample",
        "system": "bundled",
        "slides": names,
        "package": "package.pptx",
    }
    (OUT / "deck.json").write_text(json.dumps(manifest, indent=2) + "\n", "utf-8")
    print(f"wrote {len(names)} slides + sidecars + package to {OUT}")


if __name__ == "__main__":
    main()
