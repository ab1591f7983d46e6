"""Pixel-level color mathematics shared by every spatial metric.

All conversions run in double precision after a single 8-bit -> fraction
division; there is no intermediate quantization. Scalar helpers return the
small record types below, array variants operate on whole images at once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SlideImage",
    "HsvPixel",
    "LabPixel",
    "srgb_to_linear",
    "relative_luminance",
    "luminance_map",
    "rgb_to_hsv",
    "rgb_to_hsv_arrays",
    "rgb_to_lab_normalized",
    "lab_normalized_channels",
]

# sRGB -> XYZ (D65) matrix, rows X/Y/Z. The Y row doubles as the BT.709
# luminance weights.
_SRGB_TO_XYZ = np.array(
    [
        [0.4124564, 0.3575761, 0.1804375],
        [0.2126729, 0.7151522, 0.0721750],
        [0.0193339, 0.1191920, 0.9503041],
    ]
)
_D65_WHITE = np.array([0.95047, 1.0, 1.08883])

_LUMA_R = 0.2126
_LUMA_G = 0.7152
_LUMA_B = 0.0722


@dataclass(frozen=True)
class SlideImage:
    """A decoded raster slide page: height x width x RGB uint8."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValueError(f"expected (H, W, 3) RGB array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError("image must be at least 1x1")
        if arr.dtype != np.uint8:
            raise ValueError(f"expected uint8 channels, got {arr.dtype}")
        object.__setattr__(self, "pixels", arr)

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @classmethod
    def from_array(cls, arr) -> "SlideImage":
        """Build from any array-like of shape (H, W, 3); values are cast to uint8."""
        arr = np.asarray(arr)
        if arr.dtype != np.uint8:
            arr = np.clip(np.round(arr), 0, 255).astype(np.uint8)
        return cls(arr)

    @classmethod
    def solid(cls, rgb, width: int = 8, height: int = 8) -> "SlideImage":
        """A width x height image filled with one RGB color."""
        arr = np.empty((height, width, 3), dtype=np.uint8)
        arr[:] = np.asarray(rgb, dtype=np.uint8)
        return cls(arr)


@dataclass(frozen=True)
class HsvPixel:
    """Hue in degrees [0, 360), saturation and value as fractions."""

    hue: float
    saturation: float
    value: float


@dataclass(frozen=True)
class LabPixel:
    """CIE-Lab coordinates plus the unit-range normalized form."""

    L: float
    a: float
    b: float

    @property
    def L_norm(self) -> float:
        return self.L / 100.0

    @property
    def a_norm(self) -> float:
        return (self.a + 128.0) / 255.0

    @property
    def b_norm(self) -> float:
        return (self.b + 128.0) / 255.0


def srgb_to_linear(c):
    """Linearize an sRGB channel fraction via the standard piecewise curve.

    Accepts a scalar or array in [0, 1]; raises ValueError outside that range.
    """
    arr = np.asarray(c, dtype=np.float64)
    if np.any(arr < 0.0) or np.any(arr > 1.0):
        raise ValueError("sRGB channel fraction outside [0, 1]")
    out = np.where(arr <= 0.04045, arr / 12.92, ((arr + 0.055) / 1.055) ** 2.4)
    if np.isscalar(c) or arr.ndim == 0:
        return float(out)
    return out


def relative_luminance(pixel) -> float:
    """BT.709 relative luminance of one 8-bit (R, G, B) pixel, in [0, 1]."""
    r, g, b = (int(v) for v in pixel)
    for v in (r, g, b):
        if not 0 <= v <= 255:
            raise ValueError(f"channel {v} outside 0..255")
    rl = srgb_to_linear(r / 255.0)
    gl = srgb_to_linear(g / 255.0)
    bl = srgb_to_linear(b / 255.0)
    return _LUMA_R * rl + _LUMA_G * gl + _LUMA_B * bl


def luminance_map(img: SlideImage) -> np.ndarray:
    """Relative luminance for every pixel, as an (H, W) float array."""
    frac = img.pixels.astype(np.float64) / 255.0
    lin = np.where(frac <= 0.04045, frac / 12.92, ((frac + 0.055) / 1.055) ** 2.4)
    return _LUMA_R * lin[..., 0] + _LUMA_G * lin[..., 1] + _LUMA_B * lin[..., 2]


def rgb_to_hsv(pixel) -> HsvPixel:
    """Convert one 8-bit (R, G, B) pixel to HSV.

    Achromatic pixels (max == min) get hue 0 by convention; downstream
    harmony analysis excludes low-saturation pixels anyway.
    """
    r, g, b = (int(v) / 255.0 for v in pixel)
    cmax = max(r, g, b)
    cmin = min(r, g, b)
    delta = cmax - cmin
    if delta == 0.0:
        hue = 0.0
    elif cmax == r:
        hue = (60.0 * ((g - b) / delta)) % 360.0
    elif cmax == g:
        hue = 60.0 * ((b - r) / delta) + 120.0
    else:
        hue = 60.0 * ((r - g) / delta) + 240.0
    sat = 0.0 if cmax == 0.0 else delta / cmax
    return HsvPixel(hue=hue % 360.0, saturation=sat, value=cmax)


def rgb_to_hsv_arrays(img: SlideImage):
    """Per-pixel (hue degrees, saturation, value) arrays for a whole image."""
    frac = img.pixels.astype(np.float64) / 255.0
    r, g, b = frac[..., 0], frac[..., 1], frac[..., 2]
    cmax = frac.max(axis=-1)
    cmin = frac.min(axis=-1)
    delta = cmax - cmin

    hue = np.zeros_like(cmax)
    nz = delta > 0.0
    safe = np.where(nz, delta, 1.0)
    r_is_max = nz & (cmax == r)
    g_is_max = nz & ~r_is_max & (cmax == g)
    b_is_max = nz & ~r_is_max & ~g_is_max
    hue[r_is_max] = (60.0 * ((g - b)[r_is_max] / safe[r_is_max])) % 360.0
    hue[g_is_max] = 60.0 * ((b - r)[g_is_max] / safe[g_is_max]) + 120.0
    hue[b_is_max] = 60.0 * ((r - g)[b_is_max] / safe[b_is_max]) + 240.0
    hue = np.mod(hue, 360.0)

    sat = np.where(cmax > 0.0, delta / np.where(cmax > 0.0, cmax, 1.0), 0.0)
    return hue, sat, cmax


def _lab_f(t: np.ndarray) -> np.ndarray:
    eps = (6.0 / 29.0) ** 3
    return np.where(t > eps, np.cbrt(t), t / (3.0 * (6.0 / 29.0) ** 2) + 4.0 / 29.0)


def rgb_to_lab_normalized(pixel) -> LabPixel:
    """One pixel through the sRGB -> XYZ -> Lab chain (D65 white point)."""
    lab = _lab_from_fractions(np.asarray(pixel, dtype=np.float64).reshape(1, 3) / 255.0)
    L, a, b = (float(v) for v in lab[0])
    return LabPixel(L=L, a=a, b=b)


def _lab_from_fractions(frac: np.ndarray) -> np.ndarray:
    lin = np.where(frac <= 0.04045, frac / 12.92, ((frac + 0.055) / 1.055) ** 2.4)
    xyz = lin @ _SRGB_TO_XYZ.T
    fxyz = _lab_f(xyz / _D65_WHITE)
    L = 116.0 * fxyz[..., 1] - 16.0
    a = 500.0 * (fxyz[..., 0] - fxyz[..., 1])
    b = 200.0 * (fxyz[..., 1] - fxyz[..., 2])
    return np.stack([L, a, b], axis=-1)


def lab_normalized_channels(img: SlideImage):
    """(L', a', b') arrays in [0, 1]: L/100 and (a|b + 128)/255."""
    lab = _lab_from_fractions(img.pixels.astype(np.float64) / 255.0)
    L_norm = np.clip(lab[..., 0] / 100.0, 0.0, 1.0)
    a_norm = np.clip((lab[..., 1] + 128.0) / 255.0, 0.0, 1.0)
    b_norm = np.clip((lab[..., 2] + 128.0) / 255.0, 0.0, 1.0)
    return L_norm, a_norm, b_norm
