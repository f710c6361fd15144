"""adapter --model m.onnx --video v.mp4 --out stream.jsonl"""

from __future__ import annotations

import argparse
import sys

from .adapter import AdapterConfig, infer_video
from .errors import AdapterError


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="adapter",
        description="Run a two-class (head/body) ONNX detection model over a "
                    "video and emit a swingcount JSONL detection stream.")
    p.add_argument("--model", required=True, help="exported ONNX graph")
    p.add_argument("--video", required=True, help="input video file")
    p.add_argument("--out", required=True, help="output stream path (.jsonl)")
    p.add_argument("--conf", type=float, default=0.25, help="confidence threshold")
    p.add_argument("--nms", type=float, default=0.45, help="NMS IoU threshold")
    p.add_argument("--input-size", type=int, default=320, help="model input size")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = AdapterConfig(model_path=args.model, video_path=args.video,
                           conf_threshold=args.conf, nms_iou=args.nms,
                           input_size=args.input_size)
    try:
        result = infer_video(config, args.out)
    except AdapterError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(f"{result.detections} detection(s) over {result.frame_count} frame(s) "
          f"-> {result.stream_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
