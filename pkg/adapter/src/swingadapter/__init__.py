"""Video-to-detection-stream adapter for the swingcount pipeline."""

from .adapter import AdapterConfig, AdapterResult, infer_video
from .errors import AdapterError, ModelLoadError, VideoDecodeError
from .letterbox import Letterbox, apply_letterbox, letterbox_params, unletterbox_box

__version__ = "0.1.0"

__all__ = [
    "AdapterConfig",
    "AdapterResult",
    "AdapterError",
    "Letterbox",
    "ModelLoadError",
    "VideoDecodeError",
    "apply_letterbox",
    "infer_video",
    "letterbox_params",
    "unletterbox_box",
]
