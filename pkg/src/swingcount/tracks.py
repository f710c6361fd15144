"""Build one continuous center track per class from per-frame detections.

Per frame and class the highest-confidence record wins (ties: larger box
area, then earlier input order). Detection gaps up to ``max_gap`` frames
are filled by linear interpolation; longer gaps are left as segment
breaks. No smoothing is applied by default since it attenuates exactly
the fast displacements the swing thresholds act on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import EmptyClassError
from .ingest import ClassLabel, DetectionRecord


@dataclass(frozen=True)
class TrackPoint:
    frame: int
    cx: float
    cy: float
    bbox: tuple[float, float, float, float] | None = None
    interpolated: bool = False


@dataclass
class Track:
    """Frame-ordered center track of one class; contiguous runs form segments."""

    class_label: ClassLabel
    points: list[TrackPoint] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.points)

    def segments(self) -> Iterator[list[TrackPoint]]:
        """Yield maximal runs of consecutive frames."""
        run: list[TrackPoint] = []
        for p in self.points:
            if run and p.frame != run[-1].frame + 1:
                yield run
                run = []
            run.append(p)
        if run:
            yield run

    def center_by_frame(self) -> dict[int, tuple[float, float]]:
        return {p.frame: (p.cx, p.cy) for p in self.points}


@dataclass(frozen=True)
class TrackConfig:
    max_gap: int = 5
    min_conf: float = 0.25
    smooth_window: int = 0  # 0 disables; 3 enables the optional moving average

    def __post_init__(self):
        if self.max_gap < 0:
            raise ValueError("max_gap must be >= 0")


def center_of(bbox: tuple[float, float, float, float]) -> tuple[float, float]:
    """Center of an (x, y, w, h) box; the track's definition of position."""
    x, y, w, h = bbox
    return (x + w / 2, y + h / 2)


def _best_per_frame(records: list[DetectionRecord], min_conf: float) -> dict[int, DetectionRecord]:
    best: dict[int, tuple[float, float, int, DetectionRecord]] = {}
    for order, r in enumerate(records):
        if r.conf < min_conf:
            continue
        area = r.bbox[2] * r.bbox[3]
        key = (r.conf, area, -order)  # max conf, then max area, then earliest
        if r.frame not in best or key > best[r.frame][:3]:
            best[r.frame] = (r.conf, area, -order, r)
    return {f: v[3] for f, v in best.items()}


def build_track(records: Iterable[DetectionRecord], class_label: ClassLabel,
                config: TrackConfig = TrackConfig()) -> Track:
    """Build a single-class track; raises EmptyClassError if nothing survives."""
    mine = [r for r in records if r.class_label == class_label]
    best = _best_per_frame(mine, config.min_conf)
    if not best:
        raise EmptyClassError(class_label)

    points: list[TrackPoint] = []
    prev_frame: int | None = None
    prev_center: tuple[float, float] | None = None
    for frame in sorted(best):
        r = best[frame]
        center = center_of(r.bbox)
        if prev_frame is not None:
            gap = frame - prev_frame - 1
            if 0 < gap <= config.max_gap:
                for k in range(1, gap + 1):
                    t = k / (frame - prev_frame)
                    points.append(TrackPoint(
                        frame=prev_frame + k,
                        cx=prev_center[0] + (center[0] - prev_center[0]) * t,
                        cy=prev_center[1] + (center[1] - prev_center[1]) * t,
                        bbox=None,
                        interpolated=True,
                    ))
        points.append(TrackPoint(frame, center[0], center[1], r.bbox, False))
        prev_frame, prev_center = frame, center

    track = Track(class_label, points)
    if config.smooth_window > 1:
        track = smooth_track(track, config.smooth_window)
    return track


def build_tracks(records: Iterable[DetectionRecord],
                 config: TrackConfig = TrackConfig()) -> tuple[Track, Track]:
    """Build (head, body) tracks from a sorted detection stream."""
    records = list(records)
    return (build_track(records, ClassLabel.HEAD, config),
            build_track(records, ClassLabel.BODY, config))


def smooth_track(track: Track, window: int = 3) -> Track:
    """Centered moving average over each segment. Optional; off by default."""
    if window < 2:
        return track
    half = window // 2
    out: list[TrackPoint] = []
    for seg in track.segments():
        n = len(seg)
        for i, p in enumerate(seg):
            lo, hi = max(0, i - half), min(n, i + half + 1)
            cx = sum(q.cx for q in seg[lo:hi]) / (hi - lo)
            cy = sum(q.cy for q in seg[lo:hi]) / (hi - lo)
            out.append(TrackPoint(p.frame, cx, cy, p.bbox, p.interpolated))
    return Track(track.class_label, out)


def dump_track_jsonl(track: Track) -> bytes:
    """Debug dump: one JSON object per point (keys frame, cx, cy, interp)."""
    lines = [json.dumps({"frame": p.frame, "cx": p.cx, "cy": p.cy,
                         "interp": p.interpolated}, separators=(",", ":"))
             for p in track.points]
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""
