"""Head-swing counting from object-detection bounding-box streams."""

from .detector import SwingEvent, SwingParams, count_swings, detect_swings
from .errors import (
    EmptyClassError,
    EmptyDatasetError,
    InvalidScriptError,
    MalformedLineError,
    SpanOutsideTrackError,
    SwingCountError,
    TracksTooShortError,
    UnknownClassError,
    WindowTooLargeError,
)
from .ingest import (
    ClassLabel,
    DetectionRecord,
    StreamFormat,
    ValidationReport,
    VideoMeta,
    parse_detection_stream,
    parse_jsonl,
    parse_normalized_txt,
    read_normalized_dir,
    read_stream,
    serialize_jsonl,
    serialize_normalized_txt,
    validate_stream,
)
from .kinematics import KinematicSample, max_pairwise_displacement, speed_series
from .scoring import ScoreReport, VideoScore, raw_score, score_dataset, score_video
from .simulate import (
    GroundTruth,
    ScriptedSwing,
    SwingScript,
    active_benchmark_scripts,
    generate_stream,
    oracle_count,
    quiet_benchmark_scripts,
)
from .sweep import SweepRow, SweepSpec, emit_table, run_sweep
from .tracks import Track, TrackConfig, TrackPoint, build_track, build_tracks, center_of, smooth_track

__version__ = "0.1.0"

__all__ = [
    "ClassLabel",
    "DetectionRecord",
    "EmptyClassError",
    "EmptyDatasetError",
    "GroundTruth",
    "InvalidScriptError",
    "KinematicSample",
    "MalformedLineError",
    "ScoreReport",
    "ScriptedSwing",
    "SpanOutsideTrackError",
    "StreamFormat",
    "SwingCountError",
    "SwingEvent",
    "SwingParams",
    "SwingScript",
    "SweepRow",
    "SweepSpec",
    "Track",
    "TrackConfig",
    "TrackPoint",
    "TracksTooShortError",
    "UnknownClassError",
    "ValidationReport",
    "VideoMeta",
    "VideoScore",
    "WindowTooLargeError",
    "active_benchmark_scripts",
    "build_track",
    "build_tracks",
    "center_of",
    "count_swings",
    "detect_swings",
    "emit_table",
    "generate_stream",
    "max_pairwise_displacement",
    "oracle_count",
    "parse_detection_stream",
    "parse_jsonl",
    "parse_normalized_txt",
    "quiet_benchmark_scripts",
    "raw_score",
    "read_normalized_dir",
    "read_stream",
    "run_sweep",
    "score_dataset",
    "score_video",
    "serialize_jsonl",
    "serialize_normalized_txt",
    "smooth_track",
    "speed_series",
    "validate_stream",
]
