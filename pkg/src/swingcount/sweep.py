"""Parameter grids over scored datasets, emitted as CSV or Markdown tables.

A sweep takes base detection parameters plus one or more axes (parameter
name -> list of values), evaluates the Cartesian product against a
dataset of (stream, meta, true count) videos, and emits one row per grid
point with the dataset accuracy percentage. Tracks are built once per
video and reused across grid points, since only detector thresholds
change.
"""

from __future__ import annotations

import dataclasses
import io
import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterable, Sequence

from .detector import SwingParams, count_swings
from .errors import SwingCountError
from .ingest import DetectionRecord, VideoMeta, parse_jsonl
from .scoring import score_dataset
from .tracks import Track, TrackConfig, build_tracks

_HEADERS = {
    "head_speed_px10": "Head speed",
    "body_speed_max_px10": "Body speed",
    "amplitude_min_px": "Distance",
    "time_window_s": "Time",
    "window_frames": "Window",
    "refractory_frames": "Refractory",
}


class SweepError(SwingCountError):
    """An ingest or detector failure, annotated with its grid point and video."""

    def __init__(self, grid_point: dict, video_id: str, cause: Exception):
        super().__init__(f"grid point {grid_point}, video {video_id!r}: {cause}")
        self.grid_point = grid_point
        self.video_id = video_id


@dataclass(frozen=True)
class SweepSpec:
    base_params: SwingParams
    axes: dict[str, list]
    dataset_id: str

    def __post_init__(self):
        if not self.axes:
            raise ValueError("axes must be nonempty")
        valid = {f.name for f in fields(SwingParams)}
        for name, values in self.axes.items():
            if name not in valid:
                raise ValueError(f"unknown parameter axis {name!r}")
            if not values:
                raise ValueError(f"axis {name!r} has no values")
            if any(not v > 0 for v in values):
                raise ValueError(f"axis {name!r} has non-positive values")

    def to_dict(self) -> dict:
        return {"base_params": self.base_params.to_dict(),
                "axes": dict(self.axes), "dataset_id": self.dataset_id}

    @classmethod
    def from_dict(cls, d: dict) -> "SweepSpec":
        return cls(base_params=SwingParams.from_dict(d.get("base_params", {})),
                   axes={k: list(v) for k, v in d["axes"].items()},
                   dataset_id=d.get("dataset_id", "dataset"))


@dataclass(frozen=True)
class SweepRow:
    dataset_id: str
    params: SwingParams
    dataset_percent: float


def _max_workers() -> int:
    env = os.environ.get("SWINGCOUNT_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _as_tracks(stream, meta: VideoMeta, config: TrackConfig) -> tuple[Track, Track]:
    if isinstance(stream, (bytes, str)):
        records: Sequence[DetectionRecord] = parse_jsonl(stream, meta)
    else:
        records = stream
    return build_tracks(records, config)


def run_sweep(spec: SweepSpec,
              dataset: Sequence[tuple[object, VideoMeta, int]],
              video_ids: Sequence[str] | None = None,
              track_config: TrackConfig = TrackConfig()) -> list[SweepRow]:
    """Evaluate the grid; one row per deduplicated grid point.

    ``dataset`` holds (stream, meta, m) triples where stream is either
    raw JSONL bytes or an already-parsed record sequence. Rows come back
    ordered lexicographically by axis values (axes sorted by name).
    """
    if not dataset:
        raise ValueError("dataset must be nonempty")
    ids = list(video_ids) if video_ids is not None else [str(i) for i in range(len(dataset))]

    axis_names = sorted(spec.axes)
    grid = sorted(set(itertools.product(*(tuple(spec.axes[a]) for a in axis_names))))

    # Build tracks once per video; only detector params vary across the grid.
    tracks: list[tuple[Track, Track, VideoMeta, int]] = []
    for vid, (stream, meta, m) in zip(ids, dataset):
        try:
            head, body = _as_tracks(stream, meta, track_config)
        except Exception as e:
            raise SweepError({}, vid, e) from e
        tracks.append((head, body, meta, m))

    rows: list[SweepRow] = []
    workers = _max_workers()
    for point in grid:
        overrides = dict(zip(axis_names, point))
        params = dataclasses.replace(spec.base_params, **overrides)

        def one(item, _params=params, _point=overrides):
            head, body, meta, m = item[1]
            try:
                return m, count_swings(head, body, _params, meta)
            except Exception as e:
                raise SweepError(_point, ids[item[0]], e) from e

        if workers > 1 and len(tracks) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                pairs = list(pool.map(one, enumerate(tracks)))
        else:
            pairs = [one(item) for item in enumerate(tracks)]
        report = score_dataset(pairs, video_ids=ids)
        rows.append(SweepRow(spec.dataset_id, params, report.dataset_percent))
    return rows


def _columns(rows: Sequence[SweepRow], axes: Iterable[str] | None,
             include_fixed: bool) -> list[str]:
    param_fields = [f.name for f in fields(SwingParams)]
    if axes is None:
        swept = [n for n in param_fields
                 if len({getattr(r.params, n) for r in rows}) > 1]
    else:
        swept = sorted(axes)
    if include_fixed:
        return swept + [n for n in param_fields if n not in swept]
    return swept


def _fmt(v) -> str:
    if isinstance(v, float) and v == int(v):
        return str(int(v))
    if isinstance(v, float):
        return f"{v:g}"
    return str(v)


def emit_table(rows: Sequence[SweepRow], fmt: str = "csv",
               axes: Iterable[str] | None = None) -> bytes:
    """Render sweep rows; deterministic bytes for fixed input.

    CSV carries every parameter column (swept axes first); Markdown keeps
    only the dataset, the swept axes and the result. When ``axes`` is
    omitted the swept columns are inferred from value variation.
    """
    if not rows:
        raise ValueError("rows must be nonempty")
    if fmt == "csv":
        cols = _columns(rows, axes, include_fixed=True)
    elif fmt == "markdown":
        cols = _columns(rows, axes, include_fixed=False)
    else:
        raise ValueError(f"unknown table format {fmt!r}")

    headers = ["Test dataset"] + [_HEADERS[c] for c in cols] + ["Result"]
    lines: list[str] = []
    if fmt == "csv":
        out = io.StringIO()
        out.write(",".join(headers) + "\n")
        for r in rows:
            cells = [r.dataset_id] + [_fmt(getattr(r.params, c)) for c in cols]
            cells.append(f"{r.dataset_percent:.2f}")
            out.write(",".join(cells) + "\n")
        return out.getvalue().encode("utf-8")

    widths = [len(h) for h in headers]
    body: list[list[str]] = []
    for r in rows:
        cells = [r.dataset_id] + [_fmt(getattr(r.params, c)) for c in cols]
        cells.append(f"{r.dataset_percent:.2f}")
        body.append(cells)
        widths = [max(w, len(c)) for w, c in zip(widths, cells)]
    lines.append("| " + " | ".join(h.ljust(w) for h, w in zip(headers, widths)) + " |")
    lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
    for cells in body:
        lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |")
    return ("\n".join(lines) + "\n").encode("utf-8")
