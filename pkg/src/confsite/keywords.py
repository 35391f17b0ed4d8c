"""Keyword aggregation over paper subsets: paper-frequency counts, ranked."""

from __future__ import annotations

from collections import Counter

DEFAULT_TOP_K = 15

KeywordSummary = list[tuple[str, int]]


def aggregate_keywords(papers, top_k: int = DEFAULT_TOP_K) -> KeywordSummary:
    """Count papers containing each keyword; descending count, ties by keyword.

    Keywords are casefolded and trimmed, and each paper contributes a given
    keyword at most once regardless of in-list duplicates.
    """
    if top_k < 1:
        raise ValueError("top_k must be at least 1")
    counts: Counter[str] = Counter()
    for paper in papers:
        seen = {kw.strip().casefold() for kw in paper.keywords}
        seen.discard("")
        counts.update(seen)
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:top_k]
