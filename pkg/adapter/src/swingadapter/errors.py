class AdapterError(Exception):
    """Base class for adapter failures."""


class ModelLoadError(AdapterError):
    """The ONNX graph could not be loaded by the inference backend."""


class VideoDecodeError(AdapterError):
    """The video container could not be opened or decoded."""
