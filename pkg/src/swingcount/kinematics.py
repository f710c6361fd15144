"""Windowed displacement ("speed") series over a center track.

Displacement at frame t is the straight-line Euclidean distance between
the track center at t-window and at t (endpoint comparison, not path
length). Speeds are expressed on a 10-frame basis:
speed_px_per_10fr = displacement * 10 / window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SpanOutsideTrackError, WindowTooLargeError
from .tracks import Track


@dataclass(frozen=True)
class KinematicSample:
    frame: int               # window end
    window_frames: int
    displacement_px: float
    speed_px_per_10fr: float


def _segment_speed_arrays(seg, window: int):
    frames = np.array([p.frame for p in seg], dtype=np.int64)
    centers = np.array([(p.cx, p.cy) for p in seg], dtype=np.float64)
    if len(seg) <= window:
        return frames[:0], np.empty(0)
    delta = centers[window:] - centers[:-window]
    disp = np.hypot(delta[:, 0], delta[:, 1])
    return frames[window:], disp


def speed_arrays(track: Track, window: int) -> tuple[np.ndarray, np.ndarray]:
    """(frames, displacements) over all segments; empty arrays if none fit."""
    if window < 1:
        raise ValueError("window must be >= 1")
    parts = [_segment_speed_arrays(seg, window) for seg in track.segments()]
    if not parts:
        return np.empty(0, dtype=np.int64), np.empty(0)
    frames = np.concatenate([p[0] for p in parts])
    disp = np.concatenate([p[1] for p in parts])
    return frames, disp


def speed_series(track: Track, window: int) -> list[KinematicSample]:
    """One sample per frame t where t and t-window lie in one segment.

    Raises WindowTooLargeError when no segment spans the window.
    """
    frames, disp = speed_arrays(track, window)
    if len(frames) == 0:
        raise WindowTooLargeError(
            f"no contiguous segment of {window + 1}+ points at window {window}")
    return [KinematicSample(int(f), window, float(d), float(d) * 10.0 / window)
            for f, d in zip(frames, disp)]


def max_pairwise_displacement(track: Track, start: int, end: int) -> float:
    """Maximum center-to-center distance over all frame pairs in [start, end].

    The span must lie within one contiguous segment; returns 0 when
    start == end.
    """
    if start > end:
        raise SpanOutsideTrackError(f"start {start} > end {end}")
    for seg in track.segments():
        if seg[0].frame <= start and end <= seg[-1].frame:
            lo = start - seg[0].frame
            hi = end - seg[0].frame
            centers = np.array([(p.cx, p.cy) for p in seg[lo:hi + 1]], dtype=np.float64)
            return _max_pairwise(centers)
    raise SpanOutsideTrackError(
        f"span [{start}, {end}] not inside one contiguous track segment")


def _max_pairwise(centers: np.ndarray) -> float:
    if len(centers) < 2:
        return 0.0
    diff = centers[:, None, :] - centers[None, :, :]
    return float(np.hypot(diff[..., 0], diff[..., 1]).max())
