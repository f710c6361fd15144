"""Command-line entry point: validate, count, score, sweep, simulate.

Exit codes: 0 success, 1 domain error (message names the failing video,
file or line), 2 usage error. File outputs are written atomically
(temp file + rename). ``SWINGCOUNT_THREADS`` caps sweep/score fan-out.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import math
import os
import sys
import tempfile
from pathlib import Path

from .detector import SwingParams, detect_swings
from .errors import SwingCountError
from .ingest import VideoMeta, read_stream, serialize_jsonl, validate_stream
from .kinematics import speed_series
from .scoring import score_dataset
from .simulate import SwingScript, generate_stream
from .sweep import SweepSpec, emit_table, run_sweep
from .tracks import TrackConfig, build_track, build_tracks, dump_track_jsonl
from .ingest import ClassLabel


def _write_atomic(path: str | Path, data: bytes) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _params_from_args(args) -> SwingParams:
    params = SwingParams()
    if getattr(args, "params", None):
        params = SwingParams.from_dict(json.loads(Path(args.params).read_text()))
    overrides = {}
    for flag, name in (("head_speed", "head_speed_px10"),
                       ("body_speed", "body_speed_max_px10"),
                       ("amplitude", "amplitude_min_px"),
                       ("time", "time_window_s"),
                       ("window", "window_frames"),
                       ("refractory", "refractory_frames")):
        v = getattr(args, flag, None)
        if v is not None:
            overrides[name] = v
    return dataclasses.replace(params, **overrides) if overrides else params


def _track_config(args) -> TrackConfig:
    return TrackConfig(max_gap=args.max_gap, min_conf=args.min_conf)


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--params", help="JSON file of detection parameters (flags win)")
    p.add_argument("--head-speed", type=float, help="min head speed, px per 10 frames")
    p.add_argument("--body-speed", type=float, help="max body speed, px per 10 frames")
    p.add_argument("--amplitude", type=float, help="min swing amplitude, px")
    p.add_argument("--time", type=float, help="max event duration, seconds")
    p.add_argument("--window", type=int, help="displacement window, frames")
    p.add_argument("--refractory", type=int, help="quiet frames merged into one event")
    p.add_argument("--max-gap", type=int, default=5, help="max interpolated track gap")
    p.add_argument("--min-conf", type=float, default=0.25, help="min detection confidence")


def _gap_stats(missing: tuple[int, ...]) -> str:
    if not missing:
        return "none"
    runs = []
    start = prev = missing[0]
    for f in missing[1:]:
        if f == prev + 1:
            prev = f
            continue
        runs.append(prev - start + 1)
        start = prev = f
    runs.append(prev - start + 1)
    return f"{len(runs)} gap(s), longest {max(runs)} frame(s)"


def _cmd_validate(args) -> int:
    records, meta = read_stream(args.stream, _load_meta(args))
    report = validate_stream(records, meta)
    print(f"frames declared: {meta.frame_count}  fps: {meta.fps}")
    print(f"head detections: {report.head_count}  body detections: {report.body_count}")
    print(f"frames missing head: {len(report.missing_head)} ({_gap_stats(report.missing_head)})")
    print(f"frames missing body: {len(report.missing_body)} ({_gap_stats(report.missing_body)})")
    print(f"duplicate head frames: {len(report.duplicate_head)}")
    print(f"duplicate body frames: {len(report.duplicate_body)}")
    if args.dump_tracks:
        head, body = build_tracks(records, _track_config(args))
        _write_atomic(args.dump_tracks, dump_track_jsonl(head) + dump_track_jsonl(body))
        print(f"wrote tracks to {args.dump_tracks}")
    return 0


def _load_meta(args) -> VideoMeta | None:
    if getattr(args, "meta", None):
        return VideoMeta.from_dict(json.loads(Path(args.meta).read_text()))
    return None


def _cmd_count(args) -> int:
    records, meta = read_stream(args.stream, _load_meta(args))
    params = _params_from_args(args)
    config = _track_config(args)
    head = build_track(records, ClassLabel.HEAD, config)
    try:
        body = build_track(records, ClassLabel.BODY, config)
    except SwingCountError:
        from .tracks import Track
        body = Track(ClassLabel.BODY, [])
        print("note: no usable body detections; body gate left open", file=sys.stderr)
    events = detect_swings(head, body, params, meta)
    print(len(events))
    if args.out:
        payload = json.dumps([e.to_dict() for e in events], indent=2).encode() + b"\n"
        _write_atomic(args.out, payload)
    if args.dump_speeds:
        samples = speed_series(head, params.window_frames)
        buf = io.StringIO()
        buf.write("frame,displacement,speed10\n")
        for s in samples:
            buf.write(f"{s.frame},{s.displacement_px!r},{s.speed_px_per_10fr!r}\n")
        _write_atomic(args.dump_speeds, buf.getvalue().encode())
    return 0


def _read_count_csv(path: str, value_name: str) -> dict[str, int]:
    out: dict[str, int] = {}
    with open(path, newline="") as f:
        for row_no, row in enumerate(csv.reader(f), start=1):
            if not row or (row_no == 1 and not row[-1].strip().lstrip("-").isdigit()):
                continue  # header or blank
            if len(row) < 2:
                raise SwingCountError(f"{path} line {row_no}: expected video_id,{value_name}")
            out[row[0].strip()] = int(row[1])
    return out


def _cmd_score(args) -> int:
    labels = _read_count_csv(args.labels, "m")
    preds = _read_count_csv(args.preds, "n")
    missing = sorted(set(labels) - set(preds))
    if missing:
        raise SwingCountError(f"no prediction for video {missing[0]!r}")
    ids = sorted(labels)
    report = score_dataset([(labels[v], preds[v]) for v in ids], video_ids=ids)
    print(f"{report.dataset_percent:.2f}")
    if args.out:
        buf = io.StringIO()
        buf.write("video_id,m,n,score,raw_score\n")
        for v in report.per_video:
            raw = "" if not math.isfinite(v.raw_score) else repr(v.raw_score)
            buf.write(f"{v.video_id},{v.m},{v.n},{v.score!r},{raw}\n")
        _write_atomic(args.out, buf.getvalue().encode())
    if args.json:
        payload = {
            "dataset_percent": report.dataset_percent,
            "per_video": [
                {"video_id": v.video_id, "m": v.m, "n": v.n, "score": v.score,
                 "raw_score": v.raw_score if math.isfinite(v.raw_score) else None}
                for v in report.per_video
            ],
        }
        _write_atomic(args.json, json.dumps(payload, indent=2).encode() + b"\n")
    return 0


def _cmd_sweep(args) -> int:
    spec = SweepSpec.from_dict(json.loads(Path(args.spec).read_text()))
    labels = _read_count_csv(args.labels, "m")
    streams_dir = Path(args.streams)
    dataset = []
    ids = sorted(labels)
    for vid in ids:
        stream_path = streams_dir / f"{vid}.jsonl"
        if not stream_path.exists():
            raise SwingCountError(f"video {vid!r}: stream file {stream_path} not found")
        records, meta = read_stream(stream_path)
        dataset.append((records, meta, labels[vid]))
    rows = run_sweep(spec, dataset, video_ids=ids,
                     track_config=TrackConfig(max_gap=args.max_gap, min_conf=args.min_conf))
    table = emit_table(rows, fmt=args.format, axes=list(spec.axes))
    _write_atomic(args.out, table)
    print(f"wrote {len(rows)} row(s) to {args.out}")
    return 0


def _cmd_simulate(args) -> int:
    script = SwingScript.from_dict(json.loads(Path(args.script).read_text()))
    records, meta, truth = generate_stream(script)
    out = Path(args.out)
    stem = out.name[: -len(out.suffix)] if out.suffix else out.name
    _write_atomic(out, serialize_jsonl(records))
    _write_atomic(out.with_name(stem + ".meta.json"),
                  json.dumps(meta.to_dict(), indent=2).encode() + b"\n")
    _write_atomic(out.with_name(stem + ".truth.json"),
                  json.dumps(truth.to_dict(), indent=2).encode() + b"\n")
    print(f"{len(records)} records over {meta.frame_count} frames; "
          f"true count {truth.true_count}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swingcount",
        description="Count head-swing events in object-detection streams.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="report stream statistics")
    p.add_argument("--stream", required=True, help="JSONL detection stream")
    p.add_argument("--meta", help="sidecar meta JSON (default: <stem>.meta.json)")
    p.add_argument("--dump-tracks", help="write built tracks as JSONL")
    p.add_argument("--max-gap", type=int, default=5)
    p.add_argument("--min-conf", type=float, default=0.25)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("count", help="count swing events in one stream")
    p.add_argument("--stream", required=True)
    p.add_argument("--meta")
    p.add_argument("--out", help="write the event list JSON here")
    p.add_argument("--dump-speeds", help="write frame,displacement,speed10 CSV")
    _add_param_flags(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("score", help="score predicted counts against labels")
    p.add_argument("--labels", required=True, help="CSV of video_id,m")
    p.add_argument("--preds", required=True, help="CSV of video_id,n")
    p.add_argument("--out", help="write per-video report CSV here")
    p.add_argument("--json", help="write per-video report JSON here")
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("sweep", help="run a parameter grid over a dataset")
    p.add_argument("--spec", required=True, help="sweep spec JSON")
    p.add_argument("--labels", required=True, help="CSV of video_id,m")
    p.add_argument("--streams", required=True, help="directory of <video_id>.jsonl streams")
    p.add_argument("--out", required=True, help="output table path")
    p.add_argument("--format", choices=["csv", "markdown"], default="csv")
    p.add_argument("--max-gap", type=int, default=5)
    p.add_argument("--min-conf", type=float, default=0.25)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("simulate", help="render a synthetic detection stream")
    p.add_argument("--script", required=True, help="swing script JSON")
    p.add_argument("--out", required=True, help="output stream path (.jsonl)")
    p.set_defaults(func=_cmd_simulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SwingCountError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ValueError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
