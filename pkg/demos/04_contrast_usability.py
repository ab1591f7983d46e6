"""
Layout-aware contrast
=====================

Usability only looks where a layout detector says text lives. That locality
matters: a slide can be globally high-contrast while its text sits in a
low-contrast pocket. Region contrast uses the WCAG-style ratio
(L_max + 0.05) / (L_min + 0.05) mapped through ln(c)/ln(21).
"""

import json

import numpy as np

from deckeval import (
    SlideImage,
    contrast_score,
    deck_usability,
    parse_layout_file,
    region_contrast,
    slide_usability,
    text_regions,
)

# Build a slide: white page, crisp black headline, and a foggy gray caption.
arr = np.full((120, 200, 3), 245, dtype=np.uint8)
arr[10:30, 10:190:2] = 10        # striped "headline" rows, near-black ink
arr[60:80, 10:120] = 160         # caption panel...
arr[64:76, 14:116:3] = 120       # ...with barely darker text
slide = SlideImage(arr)

sidecar = {
    "elements": [
        {"label": "doc_title", "score": 0.92, "coordinate": [8, 8, 192, 32]},
        {"label": "text", "score": 0.88, "coordinate": [10, 58, 122, 82]},
        {"label": "image", "score": 0.83, "coordinate": [130, 50, 195, 110]},
    ]
}
layout = parse_layout_file(json.dumps(sidecar).encode(), image_size=(200, 120))

print("text regions at confidence 0.5:", text_regions(layout, 0.5))

for box in text_regions(layout, 0.5):
    result = region_contrast(slide, box)
    print(f"box {box}: ratio {result.ratio:5.2f}:1  score {result.score:.3f}")

score, results = slide_usability(slide, layout)
print(f"\nslide usability = mean of {len(results)} region scores = {score:.3f}")

# The ratio scale is logarithmic: each doubling of c adds the same score.
print("\nscore ladder:")
for c in (1, 3, 4.5, 7, 21):
    print(f"  {c:4}:1 -> {contrast_score(float(c)):.3f}")

# Deck level: slides without any detected text are excluded, not zeroed.
print(f"\ndeck usability: {deck_usability([score, None, 0.9]):.2f} "
      "(middle slide unavailable)")
