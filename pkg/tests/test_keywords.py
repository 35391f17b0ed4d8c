import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from confsite.keywords import aggregate_keywords

from conftest import make_paper


def oracle(papers, top_k):
    """Brute-force count-and-sort, written independently of the implementation."""
    counts = Counter()
    for paper in papers:
        for kw in {k.strip().casefold() for k in paper.keywords if k.strip()}:
            counts[kw] += 1
    items = list(counts.items())
    items.sort(key=lambda kv: kv[0])
    items.sort(key=lambda kv: kv[1], reverse=True)
    return items[:top_k]


VOCAB = ["gan", "robustness", "vision", "nlp", "theory", "rl",
         "graphs", "fairness", "attention", "pruning"]


def random_papers(rng, n=20):
    return [make_paper(f"p{i}",
                       keywords=rng.sample(VOCAB, rng.randint(0, 6)))
            for i in range(n)]


def test_empty_selection():
    assert aggregate_keywords([], top_k=5) == []


def test_direct_count():
    papers = [make_paper("a", keywords=["gan"]),
              make_paper("b", keywords=["gan", "robustness"])]
    assert aggregate_keywords(papers, top_k=10) == [("gan", 2), ("robustness", 1)]


def test_casefold_and_trim():
    papers = [make_paper("a", keywords=[" GAN "]),
              make_paper("b", keywords=["gan"])]
    assert aggregate_keywords(papers, top_k=5) == [("gan", 2)]


def test_per_paper_dedup():
    papers = [make_paper("a", keywords=["gan", "GAN", " gan"])]
    assert aggregate_keywords(papers, top_k=5) == [("gan", 1)]


def test_tie_break_lexicographic():
    papers = [make_paper("a", keywords=["zeta", "alpha"])]
    assert aggregate_keywords(papers, top_k=5) == [("alpha", 1), ("zeta", 1)]


def test_top_k_truncation():
    papers = [make_paper("a", keywords=VOCAB)]
    assert len(aggregate_keywords(papers, top_k=3)) == 3


def test_top_k_must_be_positive():
    with pytest.raises(ValueError):
        aggregate_keywords([], top_k=0)


def test_matches_oracle_on_random_fixtures():
    rng = random.Random(2026)
    for trial in range(50):
        papers = random_papers(rng)
        subset = rng.sample(papers, rng.randint(0, len(papers)))
        top_k = rng.randint(1, 12)
        assert aggregate_keywords(subset, top_k) == oracle(subset, top_k)


keyword_lists = st.lists(
    st.lists(st.sampled_from(VOCAB), max_size=5), max_size=15)


@given(keyword_lists, st.randoms())
def test_permutation_invariance(kw_lists, rnd):
    papers = [make_paper(f"p{i}", keywords=kws) for i, kws in enumerate(kw_lists)]
    shuffled = papers[:]
    rnd.shuffle(shuffled)
    assert aggregate_keywords(papers, 50) == aggregate_keywords(shuffled, 50)


@given(keyword_lists)
def test_duplicate_keyword_in_one_paper_ignored(kw_lists):
    papers = [make_paper(f"p{i}", keywords=kws) for i, kws in enumerate(kw_lists)]
    doubled = [make_paper(p.uid, keywords=p.keywords * 2) for p in papers]
    assert aggregate_keywords(papers, 50) == aggregate_keywords(doubled, 50)


@given(keyword_lists, keyword_lists)
def test_disjoint_union_counts_add(left, right):
    a = [make_paper(f"a{i}", keywords=kws) for i, kws in enumerate(left)]
    b = [make_paper(f"b{i}", keywords=kws) for i, kws in enumerate(right)]
    big_k = 1000  # no truncation
    combined = dict(aggregate_keywords(a + b, big_k))
    part_a = dict(aggregate_keywords(a, big_k))
    part_b = dict(aggregate_keywords(b, big_k))
    for kw in set(part_a) | set(part_b):
        assert combined[kw] == part_a.get(kw, 0) + part_b.get(kw, 0)
