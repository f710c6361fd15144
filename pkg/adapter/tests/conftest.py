import cv2
import numpy as np
import pytest

from onnx_builder import build_centroid_model


def render_square_video(path, centers, size=(320, 240), side=40, fps=25.0):
    """White square on black at the given centers, one frame per center."""
    w, h = size
    writer = cv2.VideoWriter(str(path), cv2.VideoWriter_fourcc(*"mp4v"), fps, (w, h))
    assert writer.isOpened(), "mp4v writer unavailable"
    half = side // 2
    for cx, cy in centers:
        frame = np.zeros((h, w, 3), np.uint8)
        x0, y0 = int(round(cx - half)), int(round(cy - half))
        frame[max(0, y0):y0 + side, max(0, x0):x0 + side] = 255
        writer.write(frame)
    writer.release()
    return path


@pytest.fixture(scope="session")
def toy_model_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("model") / "centroid.onnx"
    path.write_bytes(build_centroid_model(input_size=320))
    return path


@pytest.fixture(scope="session")
def square_path():
    """Ground-truth centers of the rendered moving square, one per frame."""
    return [(60.0 + 14.0 * i, 80.0 + 8.0 * i) for i in range(10)]


@pytest.fixture(scope="session")
def square_video(tmp_path_factory, square_path):
    path = tmp_path_factory.mktemp("video") / "square.mp4"
    return render_square_video(path, square_path)
