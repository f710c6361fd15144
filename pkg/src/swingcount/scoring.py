"""Per-video count-accuracy score and dataset aggregation.

With m the true swing count and n the algorithm count, d = |m - n|:

    score = 1                        if d <= 2
    score = 1 - (d - 2) / 10         if d - 2 <= 10
    score = 1 - (d - 2) / |m - 2|    otherwise

A miss of at most 2 counts as accurate. The third branch can go
negative (and is undefined at m == 2), so the reported score is clamped
to [0, 1]; the raw value is kept alongside. The dataset result is
100 * mean(per-video clamped scores).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyDatasetError


@dataclass(frozen=True)
class VideoScore:
    video_id: str
    m: int
    n: int
    score: float       # clamped to [0, 1]
    raw_score: float   # unclamped; -inf when m == 2 in the third branch


@dataclass(frozen=True)
class ScoreReport:
    per_video: tuple[VideoScore, ...]
    dataset_percent: float


def raw_score(m: int, n: int) -> float:
    """Unclamped piecewise score; may be negative or -inf (m == 2, branch 3)."""
    if m < 0 or n < 0:
        raise ValueError("counts must be nonnegative")
    d = abs(m - n)
    if d <= 2:
        return 1.0
    if d - 2 <= 10:
        return 1.0 - (d - 2) / 10.0
    if m == 2:
        return -math.inf
    return 1.0 - (d - 2) / abs(m - 2)


def score_video(m: int, n: int) -> float:
    """Clamped per-video score in [0, 1]."""
    return min(1.0, max(0.0, raw_score(m, n)))


def score_dataset(pairs: Sequence[tuple[int, int]],
                  video_ids: Iterable[str] | None = None) -> ScoreReport:
    """Score (m, n) pairs and aggregate to a dataset percentage."""
    pairs = list(pairs)
    if not pairs:
        raise EmptyDatasetError("no (m, n) pairs to score")
    ids = list(video_ids) if video_ids is not None else [str(i) for i in range(len(pairs))]
    if len(ids) != len(pairs):
        raise ValueError("video_ids length must match pairs")
    per = tuple(
        VideoScore(vid, m, n, score_video(m, n), raw_score(m, n))
        for vid, (m, n) in zip(ids, pairs)
    )
    percent = 100.0 * sum(v.score for v in per) / len(per)
    return ScoreReport(per, percent)
