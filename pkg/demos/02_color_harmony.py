"""
Hue-template harmony
====================

A slide's saturated hues are binned on the color wheel and matched against
seven sector templates at every one-degree rotation. A tight palette lands
inside some rotated template (distance 0); scattered hues pay a distance
that a Gaussian turns into a score. Deck-level harmony rewards a high mean
and punishes slide-to-slide inconsistency.
"""

import numpy as np

from deckeval import (
    TEMPLATES,
    SlideImage,
    best_fit,
    deck_harmony_score,
    saturation_weighted_hue_histogram,
    slide_harmony_score,
)

print("template sectors (center, width as wheel fractions):")
for t in TEMPLATES:
    print(f"  {t.name}: {t.sectors}")


def two_tone(rgb_a, rgb_b):
    arr = np.empty((16, 16, 3), dtype=np.uint8)
    arr[:8] = rgb_a
    arr[8:] = rgb_b
    return SlideImage(arr)


# A monochromatic slide fits template "i" exactly.
solid = SlideImage.solid((30, 90, 220), width=16, height=16)
fit = best_fit(solid)
print(f"\nsolid blue: template={fit.template} alpha={fit.alpha:.3f} "
      f"D={fit.mean_distance:.4f} score={fit.slide_score:.3f}")

# Red + cyan are complements: template I covers both poles at distance 0.
complements = two_tone((255, 0, 0), (0, 255, 255))
fit = best_fit(complements)
print(f"red+cyan:   template={fit.template} D={fit.mean_distance:.4f}")

# Red + chartreuse clash: roughly 90 degrees apart, no narrow template holds
# both, so the distance and score suffer under the strict default sigma.
clash = two_tone((255, 0, 0), (128, 255, 0))
fit = best_fit(clash)
print(f"red+chart.: template={fit.template} D={fit.mean_distance:.4f} "
      f"score={fit.slide_score:.2e}")

# A looser sigma is more forgiving of the same distance.
for sigma in (0.01, 0.05, 0.2):
    print(f"  sigma={sigma}: score={slide_harmony_score(fit.mean_distance, sigma):.4f}")

# Achromatic slides carry no hue evidence at all and score as trivially
# harmonious, with a flag so reports can tell.
gray = best_fit(SlideImage.solid((128, 128, 128)))
print(f"\ngray slide: achromatic={gray.achromatic} score={gray.slide_score}")

# Deck aggregation: a consistent deck beats a deck whose slides are each
# fine but mutually inconsistent.
consistent = [0.9, 0.9, 0.9, 0.9]
erratic = [1.0, 0.2, 1.0, 0.2]
print(f"\nconsistent deck: {deck_harmony_score(consistent):+.2f}")
print(f"erratic deck:    {deck_harmony_score(erratic):+.2f}")

# The histogram itself is available for inspection.
hist = saturation_weighted_hue_histogram(complements)
print(f"\nhistogram mass at hue 0: {hist[0]:.0f}, at hue 180: {hist[180]:.0f}")
