"""Seeded synthetic detection streams with known swing counts, plus the
brute-force oracle counter used to verify the streaming detector.

A script places out-hold-return head excursions on a resting head while
the body drifts at a constant rate. Per-frame Gaussian center noise,
uniform confidence draws and Bernoulli frame dropout come from fixed
counter-based generator streams (see :mod:`swingcount.rng`), so a script
reproduces byte-identical output on every run.

``oracle_count`` re-implements the exact event contract of
:mod:`swingcount.detector` by exhaustive scan: brute-force two-point
distances at every frame, explicit run merging, O(n^2) amplitude search
and the duration cap. It deliberately shares no code with the detector
beyond the type definitions; exact agreement between the two on
generated streams is the package's core verification property.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import rng
from .detector import SwingParams
from .errors import InvalidScriptError
from .ingest import ClassLabel, DetectionRecord, VideoMeta
from .tracks import Track

HEAD_BOX_PX = 42.0
BODY_BOX_PX = 118.0
_LAYOUT_STREAM = 6  # rng stream reserved for benchmark layout draws


@dataclass(frozen=True)
class ScriptedSwing:
    """One out-and-back head excursion.

    The head ramps to ``amplitude_px`` along ``direction_deg`` over
    ``out_duration_s``, dwells there for ``hold_s``, and returns over
    ``return_duration_s``. The dwell is what lets the windowed-speed
    profile stay above threshold long enough to read as one event; with
    no dwell a symmetric excursion cancels inside the window and
    fragments.
    """

    start_s: float
    amplitude_px: float
    out_duration_s: float
    return_duration_s: float
    direction_deg: float = 0.0
    hold_s: float = 0.2

    @property
    def end_s(self) -> float:
        return self.start_s + self.out_duration_s + self.hold_s + self.return_duration_s

    def to_dict(self) -> dict:
        return {"start_s": self.start_s, "amplitude_px": self.amplitude_px,
                "out_duration_s": self.out_duration_s,
                "return_duration_s": self.return_duration_s,
                "direction_deg": self.direction_deg, "hold_s": self.hold_s}


@dataclass(frozen=True)
class SwingScript:
    duration_s: float
    swings: tuple[ScriptedSwing, ...] = ()
    fps: float = 25.0
    body_drift_px_per_s: float = 0.0
    noise_sigma_px: float = 0.0
    dropout_prob: float = 0.0
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "swings", tuple(self.swings))
        self.validate()

    def validate(self):
        if not self.fps > 0:
            raise InvalidScriptError(f"fps must be positive, got {self.fps}")
        if not self.duration_s > 0:
            raise InvalidScriptError(f"duration_s must be positive, got {self.duration_s}")
        if self.noise_sigma_px < 0:
            raise InvalidScriptError(f"noise_sigma_px must be >= 0, got {self.noise_sigma_px}")
        if not 0.0 <= self.dropout_prob <= 1.0:
            raise InvalidScriptError(f"dropout_prob must be in [0, 1], got {self.dropout_prob}")
        ordered = sorted(self.swings, key=lambda s: s.start_s)
        for i, s in enumerate(ordered):
            if s.amplitude_px <= 0:
                raise InvalidScriptError(f"swing {i}: amplitude must be positive")
            if s.out_duration_s <= 0 or s.return_duration_s <= 0 or s.hold_s < 0:
                raise InvalidScriptError(f"swing {i}: durations must be positive (hold >= 0)")
            if s.start_s < 0 or s.end_s > self.duration_s:
                raise InvalidScriptError(f"swing {i}: outside the video duration")
            if i + 1 < len(ordered) and s.end_s > ordered[i + 1].start_s:
                raise InvalidScriptError(f"swings {i} and {i + 1} overlap")

    def to_dict(self) -> dict:
        return {"fps": self.fps, "duration_s": self.duration_s,
                "swings": [s.to_dict() for s in self.swings],
                "body_drift_px_per_s": self.body_drift_px_per_s,
                "noise_sigma_px": self.noise_sigma_px,
                "dropout_prob": self.dropout_prob, "seed": self.seed}

    @classmethod
    def from_dict(cls, d: dict) -> "SwingScript":
        return cls(
            duration_s=d["duration_s"],
            swings=tuple(ScriptedSwing(**s) for s in d.get("swings", ())),
            fps=d.get("fps", 25.0),
            body_drift_px_per_s=d.get("body_drift_px_per_s", 0.0),
            noise_sigma_px=d.get("noise_sigma_px", 0.0),
            dropout_prob=d.get("dropout_prob", 0.0),
            seed=int(d.get("seed", 0)),
        )


@dataclass(frozen=True)
class GroundTruth:
    true_count: int
    event_spans: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"true_count": self.true_count,
                "event_spans": [list(s) for s in self.event_spans]}


def _swing_offsets(script: SwingScript, n_frames: int) -> np.ndarray:
    """Noise-free head displacement from rest, one (dx, dy) row per frame."""
    off = np.zeros((n_frames, 2))
    fps = script.fps
    t = np.arange(n_frames) / fps
    for s in script.swings:
        t0 = s.start_s
        t1 = t0 + s.out_duration_s
        t2 = t1 + s.hold_s
        t3 = t2 + s.return_duration_s
        mag = np.zeros(n_frames)
        out = (t >= t0) & (t < t1)
        mag[out] = s.amplitude_px * (t[out] - t0) / s.out_duration_s
        mag[(t >= t1) & (t < t2)] = s.amplitude_px
        back = (t >= t2) & (t <= t3)
        mag[back] = s.amplitude_px * (1.0 - (t[back] - t2) / s.return_duration_s)
        theta = math.radians(s.direction_deg)
        off[:, 0] += mag * math.cos(theta)
        off[:, 1] += mag * math.sin(theta)
    return off


def _image_size(script: SwingScript) -> tuple[int, int]:
    pad = 8.0 * script.noise_sigma_px + 16.0
    head_reach = max((s.amplitude_px for s in script.swings), default=0.0)
    half_x = max(head_reach + HEAD_BOX_PX / 2,
                 abs(script.body_drift_px_per_s) * script.duration_s / 2 + BODY_BOX_PX / 2) + pad
    half_y = max(head_reach + HEAD_BOX_PX / 2, BODY_BOX_PX / 2) + pad

    def rounded(v):
        return max(640, int(math.ceil(2 * v / 16.0)) * 16)

    return rounded(half_x), rounded(half_y)


def generate_stream(script: SwingScript) -> tuple[list[DetectionRecord], VideoMeta, GroundTruth]:
    """Render a script into a sorted detection stream, metadata and truth."""
    script.validate()
    fps = script.fps
    n = round(script.duration_s * fps)
    width, height = _image_size(script)
    rest = np.array([width / 2.0, height / 2.0])

    head = rest + _swing_offsets(script, n)
    body = np.empty((n, 2))
    drift_total = script.body_drift_px_per_s * script.duration_s
    body[:, 0] = rest[0] - drift_total / 2 + script.body_drift_px_per_s * (np.arange(n) / fps)
    body[:, 1] = rest[1]

    if script.noise_sigma_px > 0:
        head = head + script.noise_sigma_px * rng.gaussians(script.seed, rng.HEAD_NOISE, 2 * n).reshape(n, 2)
        body = body + script.noise_sigma_px * rng.gaussians(script.seed, rng.BODY_NOISE, 2 * n).reshape(n, 2)

    keep_head = rng.uniforms(script.seed, rng.HEAD_DROPOUT, n) >= script.dropout_prob
    keep_body = rng.uniforms(script.seed, rng.BODY_DROPOUT, n) >= script.dropout_prob
    conf_head = 0.55 + 0.4 * rng.uniforms(script.seed, rng.HEAD_CONF, n)
    conf_body = 0.55 + 0.4 * rng.uniforms(script.seed, rng.BODY_CONF, n)

    records: list[DetectionRecord] = []
    for f in range(n):
        if keep_head[f]:
            records.append(DetectionRecord(
                f, ClassLabel.HEAD,
                (head[f, 0] - HEAD_BOX_PX / 2, head[f, 1] - HEAD_BOX_PX / 2,
                 HEAD_BOX_PX, HEAD_BOX_PX),
                float(conf_head[f])))
        if keep_body[f]:
            records.append(DetectionRecord(
                f, ClassLabel.BODY,
                (body[f, 0] - BODY_BOX_PX / 2, body[f, 1] - BODY_BOX_PX / 2,
                 BODY_BOX_PX, BODY_BOX_PX),
                float(conf_body[f])))

    meta = VideoMeta(fps=fps, width=width, height=height, frame_count=n)
    spans = tuple(
        (round(s.start_s * fps), min(n - 1, round(s.end_s * fps)))
        for s in sorted(script.swings, key=lambda s: s.start_s))
    truth = GroundTruth(true_count=len(script.swings), event_spans=spans)
    return records, meta, truth


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------

def _contiguous(pos: dict[int, tuple[float, float]], lo: int, hi: int) -> bool:
    for f in range(lo, hi + 1):
        if f not in pos:
            return False
    return True


def oracle_count(head: Track, body: Track, params: SwingParams, meta: VideoMeta) -> int:
    """Slow, independent event count implementing the exact detector contract."""
    from .errors import TracksTooShortError

    w = params.window_frames
    head_pos = head.center_by_frame()
    body_pos = body.center_by_frame()

    any_sample = False
    hot: list[int] = []
    for t in sorted(head_pos):
        if not _contiguous(head_pos, t - w, t):
            continue
        any_sample = True
        hx, hy = head_pos[t]
        px, py = head_pos[t - w]
        head_speed = math.hypot(hx - px, hy - py) * 10.0 / w

        body_speed = 0.0
        if _contiguous(body_pos, t - w, t):
            bx, by = body_pos[t]
            qx, qy = body_pos[t - w]
            body_speed = math.hypot(bx - qx, by - qy) * 10.0 / w

        if head_speed >= params.head_speed_px10 and body_speed <= params.body_speed_max_px10:
            hot.append(t)

    if not any_sample:
        raise TracksTooShortError(f"head track yields no speed sample at window {w}")

    # explicit scan: maximal hot runs merged across <= refractory quiet frames
    runs: list[list[int]] = []
    for t in hot:
        if runs and t - runs[-1][1] - 1 <= params.refractory_frames:
            runs[-1][1] = t
        else:
            runs.append([t, t])

    cap = round(params.time_window_s * meta.fps)
    count = 0
    for start, end in runs:
        if end - start > cap:
            end = start + cap
        span = [head_pos[f] for f in range(start, end + 1) if f in head_pos]
        best = 0.0
        for i in range(len(span)):
            for j in range(i + 1, len(span)):
                d = math.hypot(span[i][0] - span[j][0], span[i][1] - span[j][1])
                if d > best:
                    best = d
        if best >= params.amplitude_min_px:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Default benchmarks
# ---------------------------------------------------------------------------

# Swing timing used by the benchmark generators (at 25 fps: ramp 5 frames,
# dwell 5, return 5). With this shape the windowed-speed profile steps
# through 0.2-amplitude increments, so each 10 px drop of the head-speed
# threshold widens the hot run by exactly one frame per side. The 5-frame
# dwell keeps a swing's two hot runs within the refractory merge even if
# noise flips one run edge.
_OUT_S = 0.2
_HOLD_S = 0.2
_RET_S = 0.2
_SWING_FRAMES = 15

# Start-to-start offsets (frames) for swing pairs. The quiet gap between
# the two hot runs shrinks as the threshold drops, so tighter pairs merge
# into a single counted event at lower thresholds only:
#   offset 23 -> merges once the threshold is 40 or below
#   offset 24 -> merges at 30 or below
#   offset 26 -> merges at 20 or below
_PAIR_OFFSET = {40: 23, 30: 24, 20: 26}


def _active_layout(video_seed: int, fps: float) -> list[ScriptedSwing]:
    u = rng.uniforms(video_seed, _LAYOUT_STREAM, 96)
    draw = iter(u.tolist())

    units: list[list[int]] = []           # start offsets within the unit, frames
    for merge_thr in (40, 30, 20):
        units.extend([[0, _PAIR_OFFSET[merge_thr]]] * 3)
    units.extend([[0]] * 2)                # two singles

    # deterministic shuffle of unit order
    order = sorted(range(len(units)), key=lambda i: (next(draw), i))

    swings: list[ScriptedSwing] = []
    cursor = 30  # lead-in frames
    for idx in order:
        unit = units[idx]
        # One direction per unit: a pair whose swings point differently can
        # combine vectorially inside one window and bridge the quiet gap.
        direction = 360.0 * next(draw)
        for off in unit:
            amp = 54.0 + 4.0 * next(draw)
            swings.append(ScriptedSwing(
                start_s=(cursor + off) / fps, amplitude_px=amp,
                out_duration_s=_OUT_S, return_duration_s=_RET_S,
                direction_deg=direction, hold_s=_HOLD_S))
        quiet = 45 + int(10 * next(draw))
        cursor += unit[-1] + _SWING_FRAMES + quiet
    return swings


def active_benchmark_scripts(n_videos: int = 50, base_seed: int = 0) -> list[SwingScript]:
    """Scripts emulating a frequently-active test set (20 swings per video).

    Swing speeds sit just above the default 50 px/10fr threshold and pair
    spacings are tuned so that lowering the head-speed threshold merges
    progressively more pairs (undercounting), while raising it loses the
    swings outright; counting accuracy therefore peaks at the
    generation-matched threshold of 50.
    """
    out = []
    sigmas = (0.5, 1.0, 1.5, 2.0)
    for i in range(n_videos):
        seed = base_seed * 1_000_000 + i
        out.append(SwingScript(
            duration_s=60.0,
            swings=tuple(_active_layout(seed, 25.0)),
            fps=25.0,
            body_drift_px_per_s=0.0,
            noise_sigma_px=sigmas[i % len(sigmas)],
            dropout_prob=0.02,
            seed=seed,
        ))
    return out


def quiet_benchmark_scripts(n_videos: int = 320, base_seed: int = 1) -> list[SwingScript]:
    """Scripts emulating a mostly-silent test set (0-3 swings per video)."""
    out = []
    sigmas = (1.0, 2.0)
    for i in range(n_videos):
        seed = base_seed * 1_000_000 + i
        n_swings = i % 4
        u = rng.uniforms(seed, _LAYOUT_STREAM, 3 * max(1, n_swings))
        swings = []
        for k in range(n_swings):
            start = 2.0 + k * 18.0 + 10.0 * float(u[3 * k])
            swings.append(ScriptedSwing(
                start_s=start, amplitude_px=52.0 + 6.0 * float(u[3 * k + 1]),
                out_duration_s=_OUT_S, return_duration_s=_RET_S,
                direction_deg=360.0 * float(u[3 * k + 2]), hold_s=_HOLD_S))
        out.append(SwingScript(
            duration_s=60.0,
            swings=tuple(swings),
            fps=25.0,
            body_drift_px_per_s=(0.0, 2.0)[i % 2],
            noise_sigma_px=sigmas[i % len(sigmas)],
            dropout_prob=0.02,
            seed=seed,
        ))
    return out
