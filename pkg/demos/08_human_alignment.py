"""
Alignment with human rankings
=============================

Given metric scores per (topic, system) and a human preference order per
topic, the alignment report computes the average and spread of per-topic
Spearman correlations plus the fraction of topics ranked identically.
"""

from deckeval import alignment_report, identical_ratio, spearman
from deckeval.alignment import parse_rankings_text, scores_to_ranks

# Spearman on rank vectors: 1 for agreement, -1 for reversal.
print(f"identity: {spearman([1, 2, 3, 4], [1, 2, 3, 4]):+.2f}")
print(f"reversal: {spearman([1, 2, 3, 4], [4, 3, 2, 1]):+.2f}")
print(f"one swap: {spearman([1, 2, 3, 4], [1, 3, 2, 4]):+.2f}")

# Scores convert to descending ranks; ties share average ranks, which is
# why a tied metric can never match a strict human order exactly.
print(f"\nranks of [0.4, 0.9, 0.9, 0.1]: {list(scores_to_ranks([0.4, 0.9, 0.9, 0.1]))}")

# A small benchmark: four topics, three systems.
metric_scores = {
    "solar": {"aurora": 27.3, "borealis": 22.8, "cirrus": 17.1},
    "metro": {"aurora": 21.0, "borealis": 24.5, "cirrus": 16.0},
    "coral": {"aurora": 25.1, "borealis": 18.2, "cirrus": 19.9},
    "dunes": {"aurora": 23.7, "borealis": 21.5, "cirrus": 20.2},
}
human_text = """
# annotator consensus, best first
solar: aurora > borealis > cirrus
metro: borealis > aurora > cirrus
coral: aurora > cirrus > borealis
dunes: borealis > aurora > cirrus
"""
human = parse_rankings_text(human_text)

stats = alignment_report(metric_scores, human)
print(f"\nspearman avg  = {stats.spearman_avg:.3f}")
print(f"spearman std  = {stats.spearman_std:.3f}")
print(f"identical     = {stats.identical_pct:.1f}%")
print(f"topics used   = {stats.topics_used} (skipped {stats.topics_skipped})")

# identical_ratio on raw ranking pairs, for completeness.
pairs = [([1, 2, 3], [1, 2, 3]), ([1, 2, 3], [2, 1, 3])]
print(f"\nidentical ratio of two pairs: {identical_ratio(pairs):.2f}")
