"""Parsing detection streams and validating their coverage.

The canonical wire format is JSON Lines, one detection per line, with a
sidecar meta file carrying fps and image size. This demo parses a small
hand-written stream, shows how edge boxes are clamped, and prints the
validation report.
"""

from swingcount import VideoMeta, parse_jsonl, validate_stream

meta = VideoMeta(fps=25.0, width=640, height=480, frame_count=5)

stream = b"""\
{"frame":0,"class":"head","bbox":[300,200,40,40],"conf":0.92}
{"frame":0,"class":"body","bbox":[250,180,150,160],"conf":0.88}
{"frame":1,"class":"head","bbox":[305,202,40,40],"conf":0.90}
{"frame":1,"class":"body","bbox":[250,180,150,160],"conf":0.85}
{"frame":2,"class":"head","bbox":[-12,458,40,40],"conf":0.55}
{"frame":3,"class":"head","bbox":[310,205,40,40],"conf":0.93}
{"frame":3,"class":"head","bbox":[100,100,30,30],"conf":0.41}
{"frame":4,"class":"body","bbox":[251,181,150,160],"conf":0.87}
"""

records = parse_jsonl(stream, meta)
print(f"parsed {len(records)} records")

clamped = next(r for r in records if r.frame == 2)
print(f"frame 2 head box was partially outside; clamped to {clamped.bbox}")

report = validate_stream(records, meta)
print(f"head detections: {report.head_count}, body detections: {report.body_count}")
print(f"frames missing a body detection: {report.missing_body}")
print(f"frames with duplicate head boxes: {report.duplicate_head}")
