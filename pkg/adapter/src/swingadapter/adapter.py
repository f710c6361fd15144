"""Bridge a video file plus an exported detection model into the
swingcount detection-stream contract.

One sequential pass over the container; per frame the boxes that survive
confidence filtering and NMS are emitted in source-pixel coordinates in
the exact JSONL schema consumed by the analytics pipeline:

    {"frame": 0, "class": "head", "bbox": [x, y, w, h], "conf": 0.9}

The sidecar ``<stem>.meta.json`` records fps/width/height/frame_count
read from the container plus the letterbox parameters used for
preprocessing. The adapter is stateless across frames; all temporal
logic lives downstream.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import cv2

from .errors import VideoDecodeError
from .letterbox import apply_letterbox, letterbox_params, unletterbox_box
from .model import OnnxModel, decode_rows


@dataclass(frozen=True)
class AdapterConfig:
    model_path: str
    video_path: str
    conf_threshold: float = 0.25
    nms_iou: float = 0.45
    input_size: int = 320
    class_map: dict = field(default_factory=lambda: {0: "head", 1: "body"})

    def __post_init__(self):
        if not 0.0 <= self.conf_threshold <= 1.0:
            raise ValueError("conf_threshold must be in [0, 1]")
        if not 0.0 <= self.nms_iou <= 1.0:
            raise ValueError("nms_iou must be in [0, 1]")


@dataclass(frozen=True)
class AdapterResult:
    stream_path: Path
    meta_path: Path
    frame_count: int
    detections: int


def infer_video(config: AdapterConfig, out_path: str | Path) -> AdapterResult:
    """Run the model over every frame and write the JSONL stream + sidecar."""
    model = OnnxModel(config.model_path)

    cap = cv2.VideoCapture(str(config.video_path))
    if not cap.isOpened():
        raise VideoDecodeError(f"cannot open video {config.video_path}")
    fps = cap.get(cv2.CAP_PROP_FPS) or 25.0
    width = int(cap.get(cv2.CAP_PROP_FRAME_WIDTH))
    height = int(cap.get(cv2.CAP_PROP_FRAME_HEIGHT))
    if width <= 0 or height <= 0:
        cap.release()
        raise VideoDecodeError(f"no decodable frames in {config.video_path}")

    lb = letterbox_params(width, height, config.input_size)
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)

    frame_idx = 0
    detections = 0
    with open(out_path, "w", encoding="utf-8") as f:
        while True:
            ok, frame = cap.read()
            if not ok:
                break
            rows = model.infer(apply_letterbox(frame, lb))
            for box in decode_rows(rows, config.conf_threshold, config.nms_iou):
                label = config.class_map.get(box.class_id)
                if label is None:
                    continue
                bbox = unletterbox_box(box.cx, box.cy, box.w, box.h, lb, width, height)
                if bbox[2] <= 0 or bbox[3] <= 0:
                    continue
                f.write(json.dumps(
                    {"frame": frame_idx, "class": label,
                     "bbox": [round(v, 4) for v in bbox],
                     "conf": round(box.conf, 6)},
                    separators=(",", ":")) + "\n")
                detections += 1
            frame_idx += 1
    cap.release()
    if frame_idx == 0:
        out_path.unlink(missing_ok=True)
        raise VideoDecodeError(f"no decodable frames in {config.video_path}")

    meta = {"fps": fps, "width": width, "height": height,
            "frame_count": frame_idx, "letterbox": lb.to_dict()}
    stem = out_path.name[: -len(out_path.suffix)] if out_path.suffix else out_path.name
    meta_path = out_path.with_name(stem + ".meta.json")
    meta_path.write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    return AdapterResult(out_path, meta_path, frame_idx, detections)
