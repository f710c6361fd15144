"""Counting swing events with the four-criterion rule.

A frame is hot when the head's windowed speed reaches 50 px/10fr while
the body moves at most 8 px/10fr over the same window. Hot runs merged
across short quiet gaps become events if the motion within the span
reaches a 50 px amplitude inside the 2 s time window.

The demo builds a head that darts out 60 px, dwells briefly and returns;
the detector reports one event. Making the body walk at the same time
suppresses it.
"""

from swingcount import (
    ClassLabel,
    SwingParams,
    Track,
    TrackPoint,
    VideoMeta,
    detect_swings,
)


def track_from_xs(xs, label, y=300.0):
    return Track(label, [TrackPoint(f, x, y, (x - 20, y - 20, 40, 40), False)
                         for f, x in enumerate(xs)])


def head_positions(n=41):
    xs = []
    for f in range(n):
        if f < 10:
            xs.append(200.0)                       # rest
        elif f <= 15:
            xs.append(200.0 + 10.0 * (f - 9))      # out: 10 px/frame
        elif f <= 20:
            xs.append(260.0)                       # dwell at +60 px
        elif f <= 26:
            xs.append(260.0 - 10.0 * (f - 20))     # return
        else:
            xs.append(200.0)
    return xs


meta = VideoMeta(fps=25.0, width=640, height=480, frame_count=41)
params = SwingParams()  # head 50, body 8, amplitude 50, time 2 s

head = track_from_xs(head_positions(), ClassLabel.HEAD)
still_body = track_from_xs([320.0] * 41, ClassLabel.BODY, y=380.0)

events = detect_swings(head, still_body, params, meta)
print(f"still body: {len(events)} event(s)")
for e in events:
    print(f"  frames [{e.start_frame}, {e.end_frame}], "
          f"peak speed {e.peak_speed_px10:.0f} px/10fr, "
          f"amplitude {e.amplitude_px:.0f} px")

# the same head motion while the body walks 2 px/frame (20 px/10fr > 8)
walking_body = track_from_xs([320.0 + 2.0 * f for f in range(41)],
                             ClassLabel.BODY, y=380.0)
events = detect_swings(head, walking_body, params, meta)
print(f"walking body: {len(events)} event(s)  (body gate suppresses the swing)")
