import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from swingcount import (
    ClassLabel,
    DetectionRecord,
    MalformedLineError,
    StreamFormat,
    UnknownClassError,
    VideoMeta,
    parse_detection_stream,
    parse_jsonl,
    parse_normalized_txt,
    serialize_jsonl,
    serialize_normalized_txt,
    validate_stream,
)

META = VideoMeta(fps=25.0, width=640, height=480, frame_count=0)


def test_jsonl_direct_field_mapping():
    line = b'{"frame":3,"class":"head","bbox":[10,20,30,40],"conf":0.9}'
    (rec,) = parse_jsonl(line, META)
    assert rec == DetectionRecord(3, ClassLabel.HEAD, (10.0, 20.0, 30.0, 40.0), 0.9)


def test_jsonl_accepts_integer_class_codes():
    lines = b'{"frame":0,"class":0,"bbox":[1,1,2,2],"conf":0.5}\n' \
            b'{"frame":0,"class":1,"bbox":[1,1,2,2],"conf":0.5}'
    recs = parse_jsonl(lines, META)
    assert [r.class_label for r in recs] == [ClassLabel.HEAD, ClassLabel.BODY]


def test_normalized_txt_denormalization():
    (rec,) = parse_normalized_txt(b"0 0.5 0.5 0.1 0.2", frame=4, meta=META)
    assert rec.class_label is ClassLabel.HEAD
    assert rec.frame == 4
    assert rec.bbox == pytest.approx((288.0, 192.0, 64.0, 96.0))


def test_negative_frame_is_malformed():
    with pytest.raises(MalformedLineError) as ei:
        parse_jsonl(b'{"frame":-1,"class":"head","bbox":[1,1,2,2],"conf":0.5}', META)
    assert ei.value.line_no == 1


def test_frame_beyond_declared_count_is_malformed():
    meta = VideoMeta(fps=25.0, width=640, height=480, frame_count=5)
    with pytest.raises(MalformedLineError):
        parse_jsonl(b'{"frame":5,"class":"head","bbox":[1,1,2,2],"conf":0.5}', meta)


def test_unknown_class_reports_line():
    lines = b'{"frame":0,"class":"head","bbox":[1,1,2,2],"conf":0.5}\n' \
            b'{"frame":1,"class":"tail","bbox":[1,1,2,2],"conf":0.5}'
    with pytest.raises(UnknownClassError) as ei:
        parse_jsonl(lines, META)
    assert ei.value.line_no == 2


@pytest.mark.parametrize("bad", [
    '{"frame":0,"class":"head","bbox":[1,1,0,2],"conf":0.5}',   # zero width
    '{"frame":0,"class":"head","bbox":[1,1,2,2],"conf":1.5}',   # conf > 1
    '{"frame":0,"class":"head","bbox":[1,1,2],"conf":0.5}',     # short bbox
    '{"frame":0,"class":"head","conf":0.5}',                    # missing bbox
    'not json',
])
def test_malformed_rows(bad):
    with pytest.raises(MalformedLineError):
        parse_jsonl(bad.encode(), META)


def test_partially_outside_box_is_clamped():
    (rec,) = parse_jsonl(b'{"frame":0,"class":"head","bbox":[-10,-5,30,30],"conf":0.5}', META)
    assert rec.bbox == (0.0, 0.0, 20.0, 25.0)


def test_fully_outside_box_is_dropped(caplog):
    lines = b'{"frame":0,"class":"head","bbox":[700,500,30,30],"conf":0.5}\n' \
            b'{"frame":1,"class":"head","bbox":[1,1,2,2],"conf":0.5}'
    with caplog.at_level("WARNING"):
        recs = parse_jsonl(lines, META)
    assert len(recs) == 1 and recs[0].frame == 1
    assert "dropped 1" in caplog.text


def test_records_sorted_by_frame_then_class():
    lines = b'{"frame":2,"class":"body","bbox":[1,1,2,2],"conf":0.5}\n' \
            b'{"frame":1,"class":"body","bbox":[1,1,2,2],"conf":0.5}\n' \
            b'{"frame":1,"class":"head","bbox":[1,1,2,2],"conf":0.5}'
    recs = parse_jsonl(lines, META)
    assert [(r.frame, r.class_label) for r in recs] == [
        (1, ClassLabel.HEAD), (1, ClassLabel.BODY), (2, ClassLabel.BODY)]


def test_parse_detection_stream_dispatch():
    line = b'{"frame":0,"class":"head","bbox":[1,1,2,2],"conf":0.5}'
    assert parse_detection_stream(line, StreamFormat.JSON_LINES, META)
    assert parse_detection_stream(b"1 0.5 0.5 0.1 0.1", StreamFormat.NORMALIZED_TXT,
                                  META, frame=2)[0].class_label is ClassLabel.BODY


record_strategy = st.builds(
    DetectionRecord,
    frame=st.integers(0, 99),
    class_label=st.sampled_from([ClassLabel.HEAD, ClassLabel.BODY]),
    bbox=st.tuples(
        st.floats(0, 560, allow_nan=False, width=32).map(float),
        st.floats(0, 400, allow_nan=False, width=32).map(float),
        st.floats(1, 79, allow_nan=False, width=32).map(float),
        st.floats(1, 79, allow_nan=False, width=32).map(float),
    ),
    conf=st.floats(0, 1, allow_nan=False, width=32).map(float),
)


def _canonical(records):
    return sorted(records, key=lambda r: (r.frame, int(r.class_label), r.bbox, r.conf))


@given(st.lists(record_strategy, max_size=20))
@settings(max_examples=60)
def test_jsonl_round_trip_identity(records):
    records = _canonical(records)
    assert parse_jsonl(serialize_jsonl(records), META) == records


@given(st.lists(record_strategy, max_size=12), st.randoms())
@settings(max_examples=40)
def test_output_order_independent_of_input_order(records, rnd):
    a = parse_jsonl(serialize_jsonl(records), META)
    shuffled = list(records)
    rnd.shuffle(shuffled)
    b = parse_jsonl(serialize_jsonl(shuffled), META)
    assert a == b


# integer-valued boxes keep the canonical ordering stable across the
# normalize/de-normalize rounding perturbation
int_record_strategy = st.builds(
    DetectionRecord,
    frame=st.integers(0, 99),
    class_label=st.sampled_from([ClassLabel.HEAD, ClassLabel.BODY]),
    bbox=st.tuples(st.integers(0, 560).map(float), st.integers(0, 400).map(float),
                   st.integers(1, 79).map(float), st.integers(1, 79).map(float)),
    conf=st.integers(0, 100).map(lambda v: v / 100.0),
)


@given(st.lists(int_record_strategy, min_size=1, max_size=10))
@settings(max_examples=60)
def test_normalized_round_trip_within_tolerance(records):
    frame = records[0].frame
    records = _canonical(
        DetectionRecord(frame, r.class_label, r.bbox, r.conf) for r in records)
    out = parse_normalized_txt(serialize_normalized_txt(records, META), frame, META)
    assert len(out) == len(records)
    for got, want in zip(out, records):
        assert got.frame == want.frame and got.class_label == want.class_label
        assert got.bbox == pytest.approx(want.bbox, rel=1e-6, abs=1e-6)
        assert got.conf == pytest.approx(want.conf, rel=1e-6, abs=1e-6)


def test_renormalization_recovers_values():
    row = b"0 0.51234 0.43210 0.0625 0.125"
    (rec,) = parse_normalized_txt(row, 0, META)
    again = serialize_normalized_txt([rec], META).decode().split()
    for got, want in zip(again[1:5], row.decode().split()[1:5]):
        assert float(got) == pytest.approx(float(want), rel=1e-6)


def _full_stream(n=100):
    recs = []
    for f in range(n):
        recs.append(DetectionRecord(f, ClassLabel.HEAD, (10, 10, 5, 5), 0.9))
        recs.append(DetectionRecord(f, ClassLabel.BODY, (20, 20, 9, 9), 0.9))
    return recs


def test_validate_complete_stream():
    meta = VideoMeta(fps=25.0, width=640, height=480, frame_count=100)
    rep = validate_stream(_full_stream(100), meta)
    assert rep.head_count == rep.body_count == 100
    assert rep.missing_head == rep.missing_body == ()
    assert rep.duplicate_head == rep.duplicate_body == ()


def test_validate_missing_body_frame():
    meta = VideoMeta(fps=25.0, width=640, height=480, frame_count=100)
    recs = [r for r in _full_stream(100)
            if not (r.frame == 7 and r.class_label is ClassLabel.BODY)]
    rep = validate_stream(recs, meta)
    assert rep.missing_body == (7,)
    assert rep.missing_head == ()


def test_validate_duplicate_head_frame():
    meta = VideoMeta(fps=25.0, width=640, height=480, frame_count=100)
    recs = _full_stream(100) + [DetectionRecord(5, ClassLabel.HEAD, (1, 1, 2, 2), 0.3)]
    rep = validate_stream(recs, meta)
    assert rep.duplicate_head == (5,)
    assert rep.duplicate_body == ()


def test_read_normalized_dir_round_trip(tmp_path):
    from swingcount import read_normalized_dir
    from swingcount.ingest import normalized_file_name, serialize_normalized_txt

    recs = {
        0: [DetectionRecord(0, ClassLabel.HEAD, (288.0, 192.0, 64.0, 96.0), 1.0)],
        3: [DetectionRecord(3, ClassLabel.HEAD, (100.0, 100.0, 32.0, 48.0), 1.0),
            DetectionRecord(3, ClassLabel.BODY, (80.0, 90.0, 160.0, 240.0), 1.0)],
    }
    for frame, rlist in recs.items():
        name = normalized_file_name("cam0", frame)
        assert name == f"cam0_{frame}.txt"
        (tmp_path / name).write_bytes(serialize_normalized_txt(rlist, META))
    (tmp_path / "notes.md").write_text("ignored")

    got = read_normalized_dir(tmp_path, META)
    assert [(r.frame, r.class_label) for r in got] == [
        (0, ClassLabel.HEAD), (3, ClassLabel.HEAD), (3, ClassLabel.BODY)]
    assert got[0].bbox == pytest.approx((288.0, 192.0, 64.0, 96.0))


def test_meta_invariants():
    with pytest.raises(ValueError):
        VideoMeta(fps=0.0, width=640, height=480)
    with pytest.raises(ValueError):
        VideoMeta(fps=25.0, width=0, height=480)
    with pytest.raises(ValueError):
        VideoMeta(fps=25.0, width=640, height=480, frame_count=-1)
    d = VideoMeta(fps=25.0, width=640, height=480, frame_count=9).to_dict()
    assert VideoMeta.from_dict(d) == VideoMeta(25.0, 640, 480, 9)
