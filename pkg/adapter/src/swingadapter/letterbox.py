"""Letterbox preprocessing and its inverse coordinate transform.

The frame is scaled to fit a square model input while preserving aspect
ratio, then padded with neutral gray. Boxes predicted in model-input
pixels are mapped back to source pixels with the recorded scale/pad, so
the emitted stream is always in source coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass

import cv2
import numpy as np

PAD_VALUE = 114


@dataclass(frozen=True)
class Letterbox:
    input_size: int
    scale: float
    pad_x: float
    pad_y: float

    def to_dict(self) -> dict:
        return {"input_size": self.input_size, "scale": self.scale,
                "pad_x": self.pad_x, "pad_y": self.pad_y}


def letterbox_params(width: int, height: int, input_size: int) -> Letterbox:
    scale = min(input_size / width, input_size / height)
    new_w, new_h = round(width * scale), round(height * scale)
    return Letterbox(input_size=input_size, scale=scale,
                     pad_x=(input_size - new_w) / 2,
                     pad_y=(input_size - new_h) / 2)


def apply_letterbox(frame: np.ndarray, lb: Letterbox) -> np.ndarray:
    """BGR uint8 frame -> float32 NCHW blob in [0, 1]."""
    h, w = frame.shape[:2]
    new_w, new_h = round(w * lb.scale), round(h * lb.scale)
    resized = cv2.resize(frame, (new_w, new_h), interpolation=cv2.INTER_LINEAR)
    canvas = np.full((lb.input_size, lb.input_size, 3), PAD_VALUE, dtype=np.uint8)
    x0, y0 = int(round(lb.pad_x)), int(round(lb.pad_y))
    canvas[y0:y0 + new_h, x0:x0 + new_w] = resized
    blob = canvas.astype(np.float32) / 255.0
    return blob.transpose(2, 0, 1)[None]


def unletterbox_box(cx: float, cy: float, w: float, h: float,
                    lb: Letterbox, src_w: int, src_h: int) -> tuple[float, float, float, float]:
    """Center-format model-space box -> clamped top-left box in source pixels."""
    sx = (cx - lb.pad_x) / lb.scale
    sy = (cy - lb.pad_y) / lb.scale
    sw = w / lb.scale
    sh = h / lb.scale
    x0 = min(max(sx - sw / 2, 0.0), float(src_w))
    y0 = min(max(sy - sh / 2, 0.0), float(src_h))
    x1 = min(max(sx + sw / 2, 0.0), float(src_w))
    y1 = min(max(sy + sh / 2, 0.0), float(src_h))
    return (x0, y0, x1 - x0, y1 - y0)
