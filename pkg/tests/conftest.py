import math

import pytest

from swingcount import ClassLabel, Track, TrackPoint, VideoMeta


def make_track(positions, class_label=ClassLabel.HEAD, start_frame=0, y=200.0):
    """Track from a list of x offsets (or (x, y) pairs), one per frame."""
    points = []
    for i, p in enumerate(positions):
        if isinstance(p, tuple):
            cx, cy = p
        else:
            cx, cy = p, y
        points.append(TrackPoint(start_frame + i, float(cx), float(cy),
                                 (0.0, 0.0, 1.0, 1.0), False))
    return Track(class_label, points)


def still_track(n, class_label=ClassLabel.BODY, x=300.0, y=300.0, start_frame=0):
    return make_track([(x, y)] * n, class_label, start_frame)


def swing_profile(amplitude, n_frames=41, ramp=(10, 15), hold_until=20, back=(21, 26)):
    """1-D out-hold-return position list: the hand-traceable test motion."""
    xs = []
    r0, r1 = ramp
    b0, b1 = back
    slope_out = amplitude / (r1 - r0 + 1)
    slope_back = amplitude / (b1 - b0 + 1)
    for f in range(n_frames):
        if f < r0:
            xs.append(0.0)
        elif f <= r1:
            xs.append(slope_out * (f - r0 + 1))
        elif f <= hold_until:
            xs.append(amplitude)
        elif f <= b1:
            xs.append(amplitude - slope_back * (f - b0 + 1))
        else:
            xs.append(0.0)
    return xs


@pytest.fixture
def meta_640():
    return VideoMeta(fps=25.0, width=640, height=480, frame_count=0)


def dist(a, b):
    return math.hypot(a[0] - b[0], a[1] - b[1])
