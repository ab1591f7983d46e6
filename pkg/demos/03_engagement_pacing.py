"""
Colorfulness and pacing
=======================

Engagement has a spatial half (per-slide opponent-channel colorfulness) and
a temporal half (how much that vibrancy varies across the deck, scored
against a target spread observed in professional decks).
"""

import numpy as np

from deckeval import EngagementConfig, SlideImage, colorfulness, engagement_component, pacing_score

# Colorfulness of a few canonical slides.
gray = SlideImage.solid((128, 128, 128))
red = SlideImage.solid((255, 0, 0))

board = np.empty((8, 8, 3), dtype=np.uint8)
for r in range(8):
    for c in range(8):
        board[r, c] = (255, 0, 0) if (r + c) % 2 == 0 else (0, 255, 0)
checker = SlideImage(board)

print(f"gray slide:          M = {colorfulness(gray):7.2f}")
print(f"solid red slide:     M = {colorfulness(red):7.2f}")
print(f"red/green checkers:  M = {colorfulness(checker):7.2f}")

# Pacing: the deck-level standard deviation of M, scored by a Gaussian
# centered on the target spread. Flat decks and strobing decks both lose.
config = EngagementConfig()
flat = [50.0] * 6
healthy = [40.0, 55.0, 48.0, 62.0, 45.0, 58.0]
strobe = [5.0, 95.0, 5.0, 95.0, 5.0, 95.0]

for name, deck in (("flat", flat), ("healthy", healthy), ("strobe", strobe)):
    spread = float(np.std(deck))
    score = pacing_score(deck, config.pacing_target, config.pacing_width)
    print(f"{name:8s} spread={spread:5.2f}  pacing={score:.3f}")

# The reported component blends scaled mean colorfulness with the pacing
# score; the blend and scalings are the reporting profile, not a law.
print(f"\nengagement(healthy) = {engagement_component(healthy, config):.2f}")
print(f"engagement(strobe)  = {engagement_component(strobe, config):.2f}")
