"""
Color primitives
================

Everything downstream rests on three conversions: sRGB linearization with
BT.709 luminance, HSV for hue analysis, and normalized Lab for the
perceptual channels. This walk-through pokes at each one.
"""

import numpy as np

from deckeval import (
    SlideImage,
    luminance_map,
    relative_luminance,
    rgb_to_hsv,
    rgb_to_lab_normalized,
    srgb_to_linear,
)

# Relative luminance: black is 0, white is 1, pure red contributes exactly
# its BT.709 weight because the linearized channel is 1.0.
for pixel in ((0, 0, 0), (255, 255, 255), (255, 0, 0), (0, 255, 0), (18, 52, 86)):
    print(f"L{pixel} = {relative_luminance(pixel):.4f}")

# The linearization curve is piecewise; the two branches meet at 0.04045.
breakpoint_value = 0.04045
low = breakpoint_value / 12.92
high = ((breakpoint_value + 0.055) / 1.055) ** 2.4
print(f"\nbranch continuity at {breakpoint_value}: {abs(low - high):.2e}")
print(f"srgb_to_linear(0.5) = {srgb_to_linear(0.5):.6f}")

# Hue lives on a wheel: cyan sits exactly opposite red, and cycling the
# channels R->G->B rotates any saturated color by 120 degrees.
print(f"\nhue of red  = {rgb_to_hsv((255, 0, 0)).hue:.1f}")
print(f"hue of cyan = {rgb_to_hsv((0, 255, 255)).hue:.1f}")
color = (200, 120, 40)
cycled = (color[2], color[0], color[1])
print(f"hue {rgb_to_hsv(color).hue:.2f} -> cycled {rgb_to_hsv(cycled).hue:.2f}")

# Normalized Lab: gray pixels sit on the neutral axis, so a' and b' hover
# around (0 + 128)/255 = 0.502 while L' tracks lightness.
print()
for v in (0, 64, 128, 192, 255):
    lab = rgb_to_lab_normalized((v, v, v))
    print(f"gray {v:3d}: L'={lab.L_norm:.3f}  a'={lab.a_norm:.3f}  b'={lab.b_norm:.3f}")

# The vectorized luminance map drives the contrast metric; a black square on
# white paper spans the full luminance range.
arr = np.full((64, 64, 3), 255, dtype=np.uint8)
arr[20:44, 20:44] = 0
lum = luminance_map(SlideImage(arr))
print(f"\nluminance map: min={lum.min():.3f} max={lum.max():.3f}")
