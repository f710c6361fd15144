"""Parse, validate and serialize detection streams.

Canonical format is JSON Lines, one record per line:

    {"frame": 3, "class": "head", "bbox": [10.0, 20.0, 30.0, 40.0], "conf": 0.9}

with video metadata in a sidecar JSON file (``*.meta.json``) holding
``fps``, ``width``, ``height`` and ``frame_count``. The alternative
NormalizedTxt format is one text file per frame (``<stem>_<frame>.txt``)
with rows ``class cx cy w h`` normalized to [0, 1].
"""

from __future__ import annotations

import enum
import json
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable

from .errors import MalformedLineError, UnknownClassError

logger = logging.getLogger(__name__)

_NORM_FILE_RE = re.compile(r"^(?P<stem>.+)_(?P<frame>\d+)\.txt$")


class ClassLabel(enum.IntEnum):
    HEAD = 0
    BODY = 1


_CLASS_FROM_TEXT = {"head": ClassLabel.HEAD, "body": ClassLabel.BODY,
                    "0": ClassLabel.HEAD, "1": ClassLabel.BODY,
                    0: ClassLabel.HEAD, 1: ClassLabel.BODY}


@dataclass(frozen=True)
class VideoMeta:
    """Per-video metadata; fps is needed to convert the time threshold to frames."""

    fps: float
    width: int
    height: int
    frame_count: int = 0

    def __post_init__(self):
        if not self.fps > 0:
            raise ValueError(f"fps must be positive, got {self.fps}")
        if self.width < 1 or self.height < 1:
            raise ValueError(f"image size must be >= 1x1, got {self.width}x{self.height}")
        if self.frame_count < 0:
            raise ValueError(f"frame_count must be >= 0, got {self.frame_count}")

    def to_dict(self) -> dict:
        return {"fps": self.fps, "width": self.width,
                "height": self.height, "frame_count": self.frame_count}

    @classmethod
    def from_dict(cls, d: dict) -> "VideoMeta":
        return cls(fps=d["fps"], width=int(d["width"]), height=int(d["height"]),
                   frame_count=int(d.get("frame_count", 0)))


@dataclass(frozen=True)
class DetectionRecord:
    """One bounding box (head or body) observed in one frame.

    bbox is (x, y, w, h) in pixels, top-left origin.
    """

    frame: int
    class_label: ClassLabel
    bbox: tuple[float, float, float, float]
    conf: float


@dataclass(frozen=True)
class ValidationReport:
    """Descriptive stream statistics; never mutates the records."""

    head_count: int
    body_count: int
    missing_head: tuple[int, ...]
    missing_body: tuple[int, ...]
    duplicate_head: tuple[int, ...]
    duplicate_body: tuple[int, ...]


class StreamFormat(enum.Enum):
    JSON_LINES = "jsonl"
    NORMALIZED_TXT = "normalized_txt"


def _check_record_fields(line_no, frame, bbox, conf, meta):
    if not isinstance(frame, int) or isinstance(frame, bool) or frame < 0:
        raise MalformedLineError(line_no, f"frame must be a nonnegative integer, got {frame!r}")
    if meta.frame_count > 0 and frame >= meta.frame_count:
        raise MalformedLineError(
            line_no, f"frame {frame} out of range for declared frame_count {meta.frame_count}")
    if len(bbox) != 4:
        raise MalformedLineError(line_no, f"bbox must have 4 entries, got {len(bbox)}")
    x, y, w, h = (float(v) for v in bbox)
    if not (w > 0 and h > 0):
        raise MalformedLineError(line_no, f"box size must be positive, got w={w}, h={h}")
    conf = float(conf)
    if not 0.0 <= conf <= 1.0:
        raise MalformedLineError(line_no, f"conf must be in [0, 1], got {conf}")
    return (x, y, w, h), conf


def _clamp_bbox(bbox, meta):
    """Clamp a box to image bounds; returns None if nothing remains inside."""
    x, y, w, h = bbox
    if x >= 0 and y >= 0 and x + w <= meta.width and y + h <= meta.height:
        return bbox  # fully inside: keep exact coordinates
    x0 = min(max(x, 0.0), float(meta.width))
    y0 = min(max(y, 0.0), float(meta.height))
    x1 = min(max(x + w, 0.0), float(meta.width))
    y1 = min(max(y + h, 0.0), float(meta.height))
    if x1 - x0 <= 0 or y1 - y0 <= 0:
        return None
    return (x0, y0, x1 - x0, y1 - y0)


def _sort_key(r: DetectionRecord):
    # total order: primary (frame, class), ties broken by box and confidence
    # so output is deterministic regardless of input row order
    return (r.frame, int(r.class_label), r.bbox, r.conf)


def _finish(records: list[DetectionRecord], dropped: int) -> list[DetectionRecord]:
    if dropped:
        logger.warning("dropped %d detection(s) fully outside the image", dropped)
    records.sort(key=_sort_key)
    return records


def parse_jsonl(source: bytes | str | IO, meta: VideoMeta) -> list[DetectionRecord]:
    """Parse a JSON Lines detection stream into sorted records.

    Boxes partially outside the image are clamped; boxes fully outside are
    dropped (counted in a log warning). Raises MalformedLineError or
    UnknownClassError with the 1-based offending line number.
    """
    if isinstance(source, bytes):
        text = source.decode("utf-8")
    elif isinstance(source, str):
        text = source
    else:
        data = source.read()
        text = data.decode("utf-8") if isinstance(data, bytes) else data

    records: list[DetectionRecord] = []
    dropped = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise MalformedLineError(line_no, f"invalid JSON: {e.msg}") from e
        try:
            raw_class = obj["class"]
            frame = obj["frame"]
            bbox = obj["bbox"]
            conf = obj["conf"]
        except (KeyError, TypeError) as e:
            raise MalformedLineError(line_no, f"missing field: {e}") from e
        label = _CLASS_FROM_TEXT.get(raw_class)
        if label is None:
            raise UnknownClassError(line_no, raw_class)
        bbox, conf = _check_record_fields(line_no, frame, bbox, conf, meta)
        clamped = _clamp_bbox(bbox, meta)
        if clamped is None:
            dropped += 1
            continue
        records.append(DetectionRecord(frame, label, clamped, conf))
    return _finish(records, dropped)


def parse_normalized_txt(source: bytes | str, frame: int, meta: VideoMeta) -> list[DetectionRecord]:
    """Parse one frame's normalized txt rows (``class cx cy w h [conf]``).

    Center-format coordinates in [0, 1] are converted to pixel top-left
    boxes via meta.width/height.
    """
    text = source.decode("utf-8") if isinstance(source, bytes) else source
    records: list[DetectionRecord] = []
    dropped = 0
    for line_no, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts:
            continue
        if len(parts) not in (5, 6):
            raise MalformedLineError(line_no, f"expected 5 or 6 columns, got {len(parts)}")
        label = _CLASS_FROM_TEXT.get(parts[0])
        if label is None:
            raise UnknownClassError(line_no, parts[0])
        try:
            cx, cy, w, h = (float(v) for v in parts[1:5])
            conf = float(parts[5]) if len(parts) == 6 else 1.0
        except ValueError as e:
            raise MalformedLineError(line_no, str(e)) from e
        if not all(0.0 <= v <= 1.0 for v in (cx, cy, w, h)):
            raise MalformedLineError(line_no, "normalized values must lie in [0, 1]")
        w_px = w * meta.width
        h_px = h * meta.height
        bbox = (cx * meta.width - w_px / 2, cy * meta.height - h_px / 2, w_px, h_px)
        bbox, conf = _check_record_fields(line_no, frame, bbox, conf, meta)
        clamped = _clamp_bbox(bbox, meta)
        if clamped is None:
            dropped += 1
            continue
        records.append(DetectionRecord(frame, label, clamped, conf))
    return _finish(records, dropped)


def parse_detection_stream(source, fmt: StreamFormat, meta: VideoMeta,
                           frame: int = 0) -> list[DetectionRecord]:
    """Parse a detection byte stream; ``frame`` applies only to NormalizedTxt."""
    if fmt is StreamFormat.JSON_LINES:
        return parse_jsonl(source, meta)
    if fmt is StreamFormat.NORMALIZED_TXT:
        return parse_normalized_txt(source, frame, meta)
    raise ValueError(f"unknown stream format {fmt!r}")


def serialize_jsonl(records: Iterable[DetectionRecord]) -> bytes:
    lines = []
    for r in records:
        lines.append(json.dumps(
            {"frame": r.frame, "class": r.class_label.name.lower(),
             "bbox": list(r.bbox), "conf": r.conf},
            separators=(",", ":")))
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""


def serialize_normalized_txt(records: Iterable[DetectionRecord], meta: VideoMeta) -> bytes:
    """Serialize one frame's records as normalized rows.

    A sixth conf column is written when conf != 1 so parsing round-trips.
    """
    lines = []
    for r in records:
        x, y, w, h = r.bbox
        cx = (x + w / 2) / meta.width
        cy = (y + h / 2) / meta.height
        row = f"{int(r.class_label)} {cx!r} {cy!r} {w / meta.width!r} {h / meta.height!r}"
        if r.conf != 1.0:
            row += f" {r.conf!r}"
        lines.append(row)
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""


def normalized_file_name(stem: str, frame: int) -> str:
    return f"{stem}_{frame}.txt"


def read_normalized_dir(directory: str | Path, meta: VideoMeta) -> list[DetectionRecord]:
    """Load a per-frame NormalizedTxt directory into one sorted stream."""
    records: list[DetectionRecord] = []
    for path in sorted(Path(directory).iterdir()):
        m = _NORM_FILE_RE.match(path.name)
        if not m:
            continue
        records.extend(parse_normalized_txt(path.read_bytes(), int(m.group("frame")), meta))
    records.sort(key=_sort_key)
    return records


def read_stream(path: str | Path, meta: VideoMeta | None = None) -> tuple[list[DetectionRecord], VideoMeta]:
    """Read a JSONL stream file plus its ``<stem>.meta.json`` sidecar."""
    path = Path(path)
    if meta is None:
        meta_path = path.with_name(path.stem + ".meta.json")
        meta = VideoMeta.from_dict(json.loads(meta_path.read_text()))
    return parse_jsonl(path.read_bytes(), meta), meta


def validate_stream(records: list[DetectionRecord], meta: VideoMeta) -> ValidationReport:
    """Report per-class counts, frames missing each class and duplicate frames."""
    seen: dict[ClassLabel, dict[int, int]] = {ClassLabel.HEAD: {}, ClassLabel.BODY: {}}
    for r in records:
        per = seen[r.class_label]
        per[r.frame] = per.get(r.frame, 0) + 1

    n_frames = meta.frame_count
    if n_frames == 0 and records:
        n_frames = max(r.frame for r in records) + 1

    def missing(label):
        present = seen[label]
        return tuple(f for f in range(n_frames) if f not in present)

    def dupes(label):
        return tuple(f for f, c in sorted(seen[label].items()) if c > 1)

    return ValidationReport(
        head_count=sum(seen[ClassLabel.HEAD].values()),
        body_count=sum(seen[ClassLabel.BODY].values()),
        missing_head=missing(ClassLabel.HEAD),
        missing_body=missing(ClassLabel.BODY),
        duplicate_head=dupes(ClassLabel.HEAD),
        duplicate_body=dupes(ClassLabel.BODY),
    )
