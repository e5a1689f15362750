"""Phase portraits of f(z) = r(z) - conj(z).

Each pixel takes its hue from arg f(z) via the standard HSV color wheel
(hue 0 = red on the positive real direction, increasing counterclockwise),
with full saturation and value.  Pixels where |r'(z)| > 1 (the
sense-preserving region) are blended toward white.  Zeros are overdrawn as
filled black disks and poles as filled white squares.

The P6 binary PPM output is the bit-exact reference format; PNG encodes the
identical pixel data.  Rendering is deterministic: same function and config
give byte-identical output.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import DomainError
from .harmonic import ClassifiedZero, RationalHarmonicFunction

_POLE_SNAP = 1e-12


@dataclass(frozen=True)
class PortraitConfig:
    window: tuple[float, float, float, float]   # x_min, x_max, y_min, y_max
    resolution: tuple[int, int] = (400, 400)    # width_px, height_px
    brighten_factor: float = 0.35
    marker_radius_px: int = 4
    output_format: str = "ppm"

    def __post_init__(self):
        x0, x1, y0, y1 = self.window
        if not (x0 < x1 and y0 < y1):
            raise DomainError("window must satisfy x_min < x_max and y_min < y_max")
        w, h = self.resolution
        if not (1 <= w <= 8192 and 1 <= h <= 8192):
            raise DomainError("resolution must be between 1 and 8192 per side")
        if not 0.0 <= self.brighten_factor <= 1.0:
            raise DomainError("brighten_factor must lie in [0, 1]")
        if self.marker_radius_px < 0:
            raise DomainError("marker_radius_px must be >= 0")
        if self.output_format not in ("ppm", "png"):
            raise DomainError("output_format must be 'ppm' or 'png'")


def pixel_grid(cfg: PortraitConfig) -> np.ndarray:
    """Complex plane sample at pixel centers; row 0 is the top of the window."""
    x0, x1, y0, y1 = cfg.window
    w, h = cfg.resolution
    xs = x0 + (x1 - x0) * (np.arange(w) + 0.5) / w
    ys = y1 - (y1 - y0) * (np.arange(h) + 0.5) / h
    return xs[None, :] + 1j * ys[:, None]


def _poly_coeffs(p) -> np.ndarray:
    return np.array(p.coeffs or (0j,), dtype=complex)


def hsv_wheel_rgb(hue: np.ndarray) -> np.ndarray:
    """Standard 6-sector HSV -> RGB at s = v = 1; hue in [0, 1)."""
    h6 = np.nan_to_num(hue, nan=0.0) * 6.0
    sector = np.floor(h6).astype(int) % 6
    frac = h6 - np.floor(h6)
    one = np.ones_like(frac)
    down = 1.0 - frac
    up = frac
    zero = np.zeros_like(frac)
    r = np.choose(sector, [one, down, zero, zero, up, one])
    g = np.choose(sector, [up, one, one, down, zero, zero])
    b = np.choose(sector, [zero, zero, up, one, one, down])
    return np.stack([r, g, b], axis=-1)


def base_image(f: RationalHarmonicFunction, cfg: PortraitConfig) -> np.ndarray:
    """(H, W, 3) uint8 phase portrait without markers."""
    z = pixel_grid(cfg)
    p = _poly_coeffs(f.rational.p)
    q = _poly_coeffs(f.rational.q)
    dp = _poly_coeffs(f.rational.p.derivative())
    dq = _poly_coeffs(f.rational.q.derivative())
    with np.errstate(all="ignore"):
        pv = npoly.polyval(z, p)
        qv = npoly.polyval(z, q)
        values = pv / qv - np.conj(z)
        deriv = (npoly.polyval(z, dp) * qv - pv * npoly.polyval(z, dq)) / (qv * qv)
        dmod = np.abs(deriv)
        bright = np.where(np.isfinite(dmod), dmod > 1.0, False)
        finite = np.isfinite(values)
        hue = np.mod(np.angle(values), 2.0 * np.pi) / (2.0 * np.pi)

    rgb = hsv_wheel_rgb(hue)
    bf = cfg.brighten_factor
    rgb = np.where(bright[..., None], rgb + bf * (1.0 - rgb), rgb)
    rgb[~finite] = 0.5  # non-finite values render mid-gray

    # pixels essentially on a pole: hue from the dominant Laurent term, with
    # the sense-preserving brightening (|r'| diverges there)
    for loc, order in f.rational.poles():
        near = np.abs(z - loc) <= _POLE_SNAP
        if not near.any():
            continue
        deflated = f.rational.q
        for _ in range(order):
            deflated = deflated.deflate(loc)
        lead = f.rational.p.eval(loc) / deflated.eval(loc)
        d = z[near] - loc
        d = np.where(d == 0, 1.0, d)
        with np.errstate(all="ignore"):
            vals = lead * d ** (-order)
        hue_near = np.mod(np.angle(vals), 2.0 * np.pi) / (2.0 * np.pi)
        patch = hsv_wheel_rgb(hue_near)
        patch = patch + bf * (1.0 - patch)
        rgb[near] = patch

    return np.clip(np.rint(rgb * 255.0), 0, 255).astype(np.uint8)


def _to_pixel(location: complex, cfg: PortraitConfig) -> tuple[int, int]:
    x0, x1, y0, y1 = cfg.window
    w, h = cfg.resolution
    col = int(round((location.real - x0) / (x1 - x0) * w - 0.5))
    row = int(round((y1 - location.imag) / (y1 - y0) * h - 0.5))
    return row, col


def _draw_disk(img: np.ndarray, row: int, col: int, radius: int, color) -> None:
    h, w = img.shape[:2]
    for dr in range(-radius, radius + 1):
        rr = row + dr
        if not 0 <= rr < h:
            continue
        for dc in range(-radius, radius + 1):
            cc = col + dc
            if 0 <= cc < w and dr * dr + dc * dc <= radius * radius:
                img[rr, cc] = color


def _draw_square(img: np.ndarray, row: int, col: int, radius: int, color) -> None:
    # side exactly 2 * radius pixels
    h, w = img.shape[:2]
    for dr in range(-radius, radius):
        rr = row + dr
        if not 0 <= rr < h:
            continue
        for dc in range(-radius, radius):
            cc = col + dc
            if 0 <= cc < w:
                img[rr, cc] = color


def render(f: RationalHarmonicFunction, zeros, cfg: PortraitConfig) -> bytes:
    """Encode the portrait with zero/pole markers as PPM (P6) or PNG bytes."""
    img = base_image(f, cfg)
    radius = cfg.marker_radius_px
    for loc, _ in f.rational.poles():
        row, col = _to_pixel(loc, cfg)
        _draw_square(img, row, col, radius, (255, 255, 255))
    for cz in zeros:
        loc = cz.location if isinstance(cz, ClassifiedZero) else complex(cz)
        row, col = _to_pixel(loc, cfg)
        _draw_disk(img, row, col, radius, (0, 0, 0))
    if cfg.output_format == "ppm":
        return encode_ppm(img)
    return encode_png(img)


def encode_ppm(img: np.ndarray) -> bytes:
    h, w = img.shape[:2]
    return b"P6\n%d %d\n255\n" % (w, h) + img.tobytes()


def encode_png(img: np.ndarray) -> bytes:
    from PIL import Image

    buf = io.BytesIO()
    Image.fromarray(img, mode="RGB").save(buf, format="PNG")
    return buf.getvalue()
