"""Frequency-domain steerable pyramid decomposition.

Builds the classic multi-scale, multi-orientation subband decomposition:
an image is split into a non-oriented highpass residual, `levels` rings of
`orientations` oriented bandpass subbands (each ring one octave below the
previous, subsampled by two per level), and a lowpass residual. Radial
transitions use raised-cosine ramps and the angular windows are the
cos^(K-1) steerable functions, which together tile the frequency plane as a
tight frame: the per-level energies (weighted 4^-level for the subsampling)
sum to the input energy.

Orientation index b selects the angular window centered at b * 180/K degrees
in the frequency plane; for K = 4 the indices 0..3 respond to gratings whose
stripes run at 90, 135, 0 and 45 degrees from horizontal respectively, i.e.
a grating with stripes at angle phi lands in band ((phi - 90) mod 180) / 45.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np

__all__ = ["PyramidConfig", "SteerablePyramid", "steerable_pyramid"]

_LUT_SIZE = 1024


@dataclass(frozen=True)
class PyramidConfig:
    levels: int = 3
    orientations: int = 4

    def __post_init__(self):
        if self.levels < 1:
            raise ValueError("levels must be >= 1")
        if self.orientations < 1:
            raise ValueError("orientations must be >= 1")


@dataclass
class SteerablePyramid:
    """bands[level][orientation] arrays, plus the two residuals."""

    bands: list
    highpass: np.ndarray
    lowpass: np.ndarray

    def all_bands(self):
        """Oriented bandpass subbands in (level, orientation) order."""
        return [b for level in self.bands for b in level]

    def orientation_energy(self) -> np.ndarray:
        """Total coefficient energy per orientation, summed across levels."""
        k = len(self.bands[0])
        energy = np.zeros(k)
        for level in self.bands:
            for b, band in enumerate(level):
                energy[b] += float(np.sum(band * band))
        return energy


def _interp(values: np.ndarray, grid_x: np.ndarray, grid_y: np.ndarray) -> np.ndarray:
    # np.interp clamps outside the grid, matching the flat LUT ends.
    return np.interp(values.ravel(), grid_x, grid_y).reshape(values.shape)


def _raised_cosine(width: float, position: float):
    """Lookup table of a cos^2 ramp from 0 to 1 over
    [position - width/2, position + width/2]."""
    n = 256
    x = np.pi * np.arange(-n - 1, 2) / (2 * n)
    y = np.cos(x) ** 2
    y[0] = y[1]
    y[-1] = y[-2]
    return position + (2 * width / np.pi) * (x + np.pi / 4), y


def _polar_grids(rows: int, cols: int):
    """log2 radius (0 at Nyquist) and angle grids for an fftshifted spectrum."""
    ctr_r = int(np.ceil((rows + 0.5) / 2)) - 1
    ctr_c = int(np.ceil((cols + 0.5) / 2)) - 1
    yy = (np.arange(rows) - ctr_r) / (rows / 2.0)
    xx = (np.arange(cols) - ctr_c) / (cols / 2.0)
    xgrid, ygrid = np.meshgrid(xx, yy)
    rad = np.hypot(xgrid, ygrid)
    rad[ctr_r, ctr_c] = rad[ctr_r, max(ctr_c - 1, 0)]  # avoid log2(0) at DC
    return np.log2(rad), np.arctan2(ygrid, xgrid)


def _crop_center(arr: np.ndarray):
    """Central half-size crop of an fftshifted spectrum (subsample by 2)."""
    dims = np.array(arr.shape)
    start = (np.ceil((dims + 0.5) / 2) - np.ceil((np.ceil((dims - 0.5) / 2) + 0.5) / 2)).astype(int)
    end = start + np.ceil((dims - 0.5) / 2).astype(int)
    return arr[start[0]:end[0], start[1]:end[1]]


def steerable_pyramid(channel: np.ndarray, config: PyramidConfig = PyramidConfig()) -> SteerablePyramid:
    """Decompose a 2-D real array into oriented subbands.

    The image's min dimension must be at least 2**levels so every ring has a
    usable grid after subsampling.
    """
    im = np.asarray(channel, dtype=np.float64)
    if im.ndim != 2:
        raise ValueError(f"expected a 2-D channel, got shape {im.shape}")
    min_dim = min(im.shape)
    if min_dim < 2 ** config.levels:
        limit = int(np.floor(np.log2(min_dim))) if min_dim >= 2 else 0
        raise ValueError(
            f"image min dimension {min_dim} too small for {config.levels} levels; "
            f"level {limit + 1} has no grid left (need >= {2 ** config.levels})"
        )

    k = config.orientations
    order = k - 1
    # Normalization making the K angular windows a tight frame.
    angle_const = (2.0 ** (2 * order)) * factorial(order) ** 2 / (k * factorial(2 * order))
    xcos = np.pi * np.arange(-(2 * _LUT_SIZE + 1), _LUT_SIZE + 2) / _LUT_SIZE
    ycos = np.sqrt(angle_const) * np.cos(xcos) ** order

    xr, yr = _raised_cosine(width=1.0, position=-0.5)
    yr_hi = np.sqrt(yr)
    yr_lo = np.sqrt(1.0 - yr)

    log_rad, angle = _polar_grids(*im.shape)
    spectrum = np.fft.fftshift(np.fft.fft2(im))

    hi0 = _interp(log_rad, xr, yr_hi)
    lo0 = _interp(log_rad, xr, yr_lo)
    highpass = np.fft.ifft2(np.fft.ifftshift(spectrum * hi0)).real

    lodft = spectrum * lo0
    shift = 0.0
    bands: list = []
    for _ in range(config.levels):
        shift -= 1.0
        himask = _interp(log_rad, xr + shift, yr_hi)
        level_bands = []
        for b in range(k):
            anglemask = _interp(angle, xcos + np.pi * b / k, ycos)
            banddft = ((-1j) ** order) * lodft * anglemask * himask
            level_bands.append(np.fft.ifft2(np.fft.ifftshift(banddft)).real)
        bands.append(level_bands)

        lomask = _interp(log_rad, xr + shift, yr_lo)
        lodft = _crop_center(lodft * lomask)
        log_rad = _crop_center(log_rad)
        angle = _crop_center(angle)

    lowpass = np.fft.ifft2(np.fft.ifftshift(lodft)).real
    return SteerablePyramid(bands=bands, highpass=highpass, lowpass=lowpass)
