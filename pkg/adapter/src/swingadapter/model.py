"""ONNX model loading and per-frame box decoding via OpenCV DNN.

The expected export layout is the common one-stage detector shape: an
output of [1, N, 5 + n_classes] (or [N, 5 + n_classes]) whose rows are
(cx, cy, w, h, objectness, class scores...) in model-input pixels.
"""

from __future__ import annotations

from dataclasses import dataclass

import cv2
import numpy as np

from .errors import ModelLoadError


@dataclass(frozen=True)
class RawBox:
    """One post-NMS detection in model-input (letterboxed) pixels."""

    cx: float
    cy: float
    w: float
    h: float
    conf: float
    class_id: int


class OnnxModel:
    """Two-class detector graph executed with cv2.dnn."""

    def __init__(self, model_path: str):
        try:
            self.net = cv2.dnn.readNetFromONNX(str(model_path))
        except cv2.error as e:
            raise ModelLoadError(f"cannot load ONNX model {model_path}: {e}") from e

    def infer(self, blob: np.ndarray) -> np.ndarray:
        self.net.setInput(blob)
        out = self.net.forward()
        rows = np.asarray(out, dtype=np.float32)
        if rows.ndim == 3:
            rows = rows[0]
        if rows.ndim != 2 or rows.shape[1] < 7:
            raise ModelLoadError(
                f"unexpected model output shape {out.shape}; expected"
                " [1, N, 5 + 2 classes]")
        return rows


def decode_rows(rows: np.ndarray, conf_threshold: float, nms_iou: float) -> list[RawBox]:
    """Objectness x class score thresholding followed by per-class NMS."""
    obj = rows[:, 4]
    cls_scores = rows[:, 5:]
    class_id = cls_scores.argmax(axis=1)
    conf = obj * cls_scores.max(axis=1)
    keep = conf >= conf_threshold
    rows, conf, class_id = rows[keep], conf[keep], class_id[keep]

    boxes: list[RawBox] = []
    for cid in np.unique(class_id):
        sel = class_id == cid
        sub, sub_conf = rows[sel], conf[sel]
        xywh = [(float(r[0] - r[2] / 2), float(r[1] - r[3] / 2),
                 float(r[2]), float(r[3])) for r in sub]
        idx = cv2.dnn.NMSBoxes(xywh, sub_conf.tolist(), conf_threshold, nms_iou)
        for i in np.array(idx).reshape(-1):
            r = sub[int(i)]
            boxes.append(RawBox(float(r[0]), float(r[1]), float(r[2]), float(r[3]),
                                float(min(sub_conf[int(i)], 1.0)), int(cid)))
    boxes.sort(key=lambda b: (b.class_id, -b.conf))
    return boxes
