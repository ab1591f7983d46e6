"""Rank-correlation statistics between metric scores and human rankings.

Rankings use 1 for the best system. Metric scores convert to descending
ranks (highest score -> rank 1) with ties receiving average ranks; a tied
metric ranking therefore never counts as identical to a strict human
ranking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "AlignmentStats",
    "spearman",
    "scores_to_ranks",
    "identical_ratio",
    "alignment_report",
    "parse_rankings_text",
    "parse_rankings_json",
]


@dataclass(frozen=True)
class AlignmentStats:
    spearman_avg: float
    spearman_std: float
    identical_pct: float
    topics_used: int
    topics_skipped: int


def scores_to_ranks(scores) -> np.ndarray:
    """Descending average ranks: the highest score gets rank 1."""
    values = np.asarray(list(scores), dtype=np.float64)
    order = np.argsort(-values, kind="stable")
    ranks = np.empty(values.size, dtype=np.float64)
    ranks[order] = np.arange(1, values.size + 1)
    # average out ties
    for v in np.unique(values):
        mask = values == v
        if mask.sum() > 1:
            ranks[mask] = ranks[mask].mean()
    return ranks


def spearman(ranks_a, ranks_b) -> float:
    """Pearson correlation of two rank vectors (tie-averaged ranks allowed).

    Returns NaN when either side has zero rank variance; that case is
    undefined and callers are expected to skip it.
    """
    a = np.asarray(list(ranks_a), dtype=np.float64)
    b = np.asarray(list(ranks_b), dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"rank vectors differ in length: {a.size} vs {b.size}")
    if a.size < 2:
        raise ValueError("need at least two systems per topic")
    da = a - a.mean()
    db = b - b.mean()
    denom = np.sqrt((da * da).sum() * (db * db).sum())
    if denom == 0.0:
        return float("nan")
    return float((da * db).sum() / denom)


def identical_ratio(pairs) -> float:
    """Fraction of (ranking, ranking) pairs that match element-wise exactly."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("no ranking pairs")
    matches = sum(1 for a, b in pairs if list(a) == list(b))
    return matches / len(pairs)


def alignment_report(metric_scores: dict, human_rankings: dict) -> AlignmentStats:
    """Alignment of metric rankings against human rankings across topics.

    `metric_scores` maps topic -> {system: score}; `human_rankings` maps
    topic -> ordered list of system names, best first. Topics must appear in
    both inputs; topics with undefined correlation (for example all-tied
    metric scores) are excluded and counted.
    """
    topics = sorted(set(metric_scores) & set(human_rankings))
    if not topics:
        raise ValueError("no topics shared between metric scores and human rankings")

    rhos = []
    skipped = 0
    ident_pairs = []
    for topic in topics:
        order = list(human_rankings[topic])
        scores = metric_scores[topic]
        missing = [s for s in order if s not in scores]
        if missing:
            raise ValueError(f"topic {topic!r}: no metric scores for {missing}")
        if len(order) < 2:
            raise ValueError(f"topic {topic!r}: need at least two ranked systems")
        human = np.arange(1, len(order) + 1, dtype=np.float64)
        metric = scores_to_ranks([scores[s] for s in order])
        rho = spearman(metric, human)
        ident_pairs.append((metric.tolist(), human.tolist()))
        if np.isnan(rho):
            skipped += 1
            continue
        rhos.append(rho)

    if not rhos:
        raise ValueError("no usable topics: every correlation was undefined")
    arr = np.asarray(rhos)
    return AlignmentStats(
        spearman_avg=float(arr.mean()),
        spearman_std=float(arr.std()),
        identical_pct=100.0 * identical_ratio(ident_pairs),
        topics_used=len(rhos),
        topics_skipped=skipped,
    )


def parse_rankings_text(text: str) -> dict:
    """Parse the line-oriented rankings format.

    One topic per line: `topic: best > second > third`. Blank lines and
    lines starting with '#' are ignored.
    """
    rankings: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise ValueError(f"line {lineno}: expected 'topic: a > b > ...'")
        topic, _, rest = line.partition(":")
        names = [n.strip() for n in rest.split(">")]
        if len(names) < 2 or any(not n for n in names):
            raise ValueError(f"line {lineno}: need at least two system names")
        if len(set(names)) != len(names):
            raise ValueError(f"line {lineno}: duplicate system names")
        rankings[topic.strip()] = names
    if not rankings:
        raise ValueError("rankings file contains no records")
    return rankings


def parse_rankings_json(data: bytes | str) -> dict:
    """Parse the structured rankings form: {"rankings": [{"topic", "order"}]}."""
    obj = json.loads(data)
    try:
        records = obj["rankings"]
        return {r["topic"]: list(r["order"]) for r in records}
    except (TypeError, KeyError) as exc:
        raise ValueError(f"malformed rankings document: missing {exc.args[0]!r}") from None
