"""Segment a head track into counted swing events.

A frame is *hot* when the head's windowed speed reaches the head
threshold while the body's speed over the same window stays at or below
the body cap (the body gate excludes walking; a missing body sample
leaves the gate open). Maximal runs of hot frames, merged across quiet
gaps of at most ``refractory_frames``, become candidate events. A
candidate is truncated to the time window (keeping its start) and
accepted when the maximum pairwise center distance across its span
reaches the amplitude minimum.

The same rule is implemented independently, by exhaustive scan, in
:mod:`swingcount.simulate` (``oracle_count``); the two must agree
exactly on every stream.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from .errors import TracksTooShortError
from .ingest import VideoMeta
from .kinematics import speed_arrays
from .tracks import Track


@dataclass(frozen=True)
class SwingParams:
    """Detection thresholds; defaults are the tuned operating point."""

    head_speed_px10: float = 50.0       # min head speed, px per 10 frames
    body_speed_max_px10: float = 8.0    # max concurrent body speed
    amplitude_min_px: float = 50.0      # min swing amplitude within the event
    time_window_s: float = 2.0          # max event duration
    window_frames: int = 10             # displacement window
    refractory_frames: int = 5          # quiet frames merged into one event

    def __post_init__(self):
        for name in ("head_speed_px10", "body_speed_max_px10",
                     "amplitude_min_px", "time_window_s"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be > 0")
        if self.window_frames < 1:
            raise ValueError("window_frames must be >= 1")
        if self.refractory_frames < 0:
            raise ValueError("refractory_frames must be >= 0")

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, d: dict) -> "SwingParams":
        known = {f.name for f in fields(cls)}
        unknown = set(d) - known
        if unknown:
            raise ValueError(f"unknown parameter(s): {sorted(unknown)}")
        return cls(**d)


@dataclass(frozen=True)
class SwingEvent:
    start_frame: int
    end_frame: int
    peak_speed_px10: float
    amplitude_px: float

    def to_dict(self) -> dict:
        return {"start_frame": self.start_frame, "end_frame": self.end_frame,
                "peak_speed": self.peak_speed_px10, "amplitude": self.amplitude_px}


def _hot_frames(head: Track, body: Track, params: SwingParams) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    w = params.window_frames
    head_frames, head_disp = speed_arrays(head, w)
    if len(head_frames) == 0:
        raise TracksTooShortError(
            f"head track yields no speed sample at window {w}")
    head_speed = head_disp * 10.0 / w

    body_frames, body_disp = speed_arrays(body, w)
    body_speed_at = dict(zip(body_frames.tolist(), (body_disp * 10.0 / w).tolist()))
    body_speed = np.array([body_speed_at.get(int(f), 0.0) for f in head_frames])

    hot = (head_speed >= params.head_speed_px10) & (body_speed <= params.body_speed_max_px10)
    return head_frames, head_speed, hot


def _merge_runs(hot_frame_list: list[int], refractory: int) -> list[tuple[int, int]]:
    runs: list[tuple[int, int]] = []
    for f in hot_frame_list:
        if runs and f - runs[-1][1] - 1 <= refractory:
            runs[-1] = (runs[-1][0], f)
        else:
            runs.append((f, f))
    return runs


def _span_amplitude(head: Track, start: int, end: int) -> float:
    """Max pairwise center distance over the observed centers in [start, end]."""
    pts = [(p.cx, p.cy) for p in head.points if start <= p.frame <= end]
    if len(pts) < 2:
        return 0.0
    centers = np.asarray(pts, dtype=np.float64)
    diff = centers[:, None, :] - centers[None, :, :]
    return float(np.hypot(diff[..., 0], diff[..., 1]).max())


def detect_swings(head: Track, body: Track, params: SwingParams,
                  meta: VideoMeta) -> list[SwingEvent]:
    """Detect swing events; deterministic for fixed inputs.

    Raises TracksTooShortError when no head speed sample is computable.
    """
    frames, head_speed, hot = _hot_frames(head, body, params)
    hot_frames = frames[hot].tolist()
    if not hot_frames:
        return []

    cap = round(params.time_window_s * meta.fps)
    speed_at = dict(zip(frames.tolist(), head_speed.tolist()))

    events: list[SwingEvent] = []
    for start, end in _merge_runs(hot_frames, params.refractory_frames):
        end = min(end, start + cap)
        amplitude = _span_amplitude(head, start, end)
        if amplitude < params.amplitude_min_px:
            continue
        peak = max(speed_at[f] for f in hot_frames if start <= f <= end)
        events.append(SwingEvent(start, end, peak, amplitude))
    return events


def count_swings(head: Track, body: Track, params: SwingParams,
                 meta: VideoMeta) -> int:
    """Number of detected swing events."""
    return len(detect_swings(head, body, params, meta))
