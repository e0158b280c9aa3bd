"""Binary pen-path raster used by the trajectory-image baseline."""

import numpy as np
from PIL import Image, ImageDraw

from src.signature.models import RawSignature

MIN_SIDE = 8


def _pixel_coords(values: np.ndarray, side: int, flip: bool) -> np.ndarray:
    lo, hi = values.min(), values.max()
    if hi == lo:
        return np.full(values.shape, side // 2, dtype=np.int64)
    scaled = (values - lo) / (hi - lo)
    if flip:
        scaled = 1.0 - scaled
    return np.rint(1 + scaled * (side - 3)).astype(np.int64)


def rasterize_trajectory(sig: RawSignature, side: int) -> np.ndarray:
    """Draw the pen path as a side x side {0, 1} image.

    x and y are min-max scaled independently into [1, side - 2] (one-pixel
    margin, y pointing up), and consecutive samples are joined by one-pixel
    lines. A degenerate bounding box collapses onto the centre pixel.
    """
    if side < MIN_SIDE:
        raise ValueError(f"raster side must be at least {MIN_SIDE}, got {side}")
    cols = _pixel_coords(sig.x, side, flip=False)
    rows = _pixel_coords(sig.y, side, flip=True)

    image = Image.new("L", (side, side), 0)
    draw = ImageDraw.Draw(image)
    points = list(zip(cols.tolist(), rows.tolist()))
    draw.point(points[0], fill=1)
    for start, end in zip(points[:-1], points[1:]):
        draw.line([start, end], fill=1, width=1)
    return np.asarray(image, dtype=np.uint8)
