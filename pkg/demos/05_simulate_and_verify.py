"""Synthetic streams with known counts, verified by an independent oracle.

Scripts place out-dwell-return head excursions with seeded Gaussian
center noise and frame dropout; generation is byte-reproducible. The
streaming detector and a deliberately slow brute-force oracle implement
the same event contract in unrelated code; they must agree exactly.
"""

from swingcount import (
    ScriptedSwing,
    SwingParams,
    SwingScript,
    build_tracks,
    count_swings,
    generate_stream,
    oracle_count,
    serialize_jsonl,
)

script = SwingScript(
    duration_s=30.0,
    fps=25.0,
    swings=(
        ScriptedSwing(start_s=3.0, amplitude_px=60.0, out_duration_s=0.2,
                      return_duration_s=0.2, direction_deg=0.0),
        ScriptedSwing(start_s=9.0, amplitude_px=75.0, out_duration_s=0.2,
                      return_duration_s=0.24, direction_deg=135.0),
        ScriptedSwing(start_s=21.0, amplitude_px=55.0, out_duration_s=0.16,
                      return_duration_s=0.2, direction_deg=250.0),
    ),
    noise_sigma_px=2.0,
    dropout_prob=0.02,
    seed=42,
)

records, meta, truth = generate_stream(script)
print(f"generated {len(records)} records over {meta.frame_count} frames "
      f"({meta.width}x{meta.height} @ {meta.fps} fps)")
print(f"scripted swings: {truth.true_count} at spans {list(truth.event_spans)}")

again, _, _ = generate_stream(script)
print("regeneration is byte-identical:", serialize_jsonl(records) == serialize_jsonl(again))

head, body = build_tracks(records)
params = SwingParams()
detected = count_swings(head, body, params, meta)
verified = oracle_count(head, body, params, meta)
print(f"streaming detector: {detected}   brute-force oracle: {verified}   "
      f"truth: {truth.true_count}")
assert detected == verified
