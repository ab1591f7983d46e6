import numpy as np
import pytest

from deckeval import SlideImage


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def solid(rgb, width=8, height=8) -> SlideImage:
    return SlideImage.solid(rgb, width=width, height=height)


def random_image(rng, width=16, height=16) -> SlideImage:
    return SlideImage(rng.integers(0, 256, size=(height, width, 3), dtype=np.uint8))
