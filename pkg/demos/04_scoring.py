"""The piecewise count-accuracy score and dataset aggregation.

A miss of up to 2 counts is still "accurate" (score 1). Beyond that the
score falls linearly, first against the fixed fault tolerance of 10,
then against |m - 2| for badly missed videos. Raw values below 0 are
clamped for aggregation but reported alongside.
"""

from swingcount import raw_score, score_dataset, score_video

print("m (true)  n (counted)  raw        clamped")
for m, n in [(5, 5), (5, 7), (10, 17), (20, 8), (30, 2), (14, 40)]:
    print(f"{m:>8}  {n:>11}  {raw_score(m, n):>9.4f}  {score_video(m, n):>7.4f}")

report = score_dataset([(5, 6), (10, 17), (3, 3), (8, 8)],
                       video_ids=["a", "b", "c", "d"])
print("\nper-video scores:", [f"{v.video_id}={v.score:.2f}" for v in report.per_video])
print(f"dataset accuracy: {report.dataset_percent:.2f}%")
