import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from confsite.embedding import DocumentEmbedding
from confsite.projection import (AffinityMatrix, TsneParams, calibrate_row,
                                 kl_divergence, pairwise_sq_distances,
                                 project_corpus, symmetrize, tsne_optimize,
                                 _gradient)


# ---------------------------------------------------------------------------
# independent oracles (plain double loops; never reuse the implementation)

def brute_distances(x):
    n = len(x)
    d2 = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            d2[i, j] = sum((x[i][k] - x[j][k]) ** 2 for k in range(len(x[i])))
    return d2


def row_perplexity(d2_row, self_index, beta):
    """exp(entropy) of the conditional row for a given beta, by direct formula."""
    weights = [math.exp(-beta * d2_row[j]) if j != self_index else 0.0
               for j in range(len(d2_row))]
    total = sum(weights)
    h = 0.0
    for w in weights:
        if w > 0:
            p = w / total
            h -= p * math.log(p)
    return math.exp(h)


def bisect_beta(d2_row, self_index, perplexity, iters=200):
    """Independent scalar root-finder for exp(H(beta)) = perplexity."""
    lo, hi = 1e-12, 1.0
    while row_perplexity(d2_row, self_index, hi) > perplexity:
        hi *= 2.0
    while row_perplexity(d2_row, self_index, lo) < perplexity:
        lo /= 2.0
    for _ in range(iters):
        mid = (lo + hi) / 2.0
        if row_perplexity(d2_row, self_index, mid) > perplexity:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2.0


def brute_kl(p, q, eps=1e-12):
    n = len(p)
    total = 0.0
    for i in range(n):
        for j in range(n):
            if i != j and p[i][j] > 0:
                total += p[i][j] * math.log(p[i][j] / max(q[i][j], eps))
    return total


def brute_q(y):
    n = len(y)
    num = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                num[i, j] = 1.0 / (1.0 + sum((y[i][k] - y[j][k]) ** 2
                                             for k in range(2)))
    return num / num.sum()


def random_affinities(n, rng):
    p_cond = rng.random((n, n))
    np.fill_diagonal(p_cond, 0.0)
    p_cond /= p_cond.sum(axis=1, keepdims=True)
    return symmetrize(p_cond)


# ---------------------------------------------------------------------------
# pairwise distances

def test_identical_vectors():
    dm = pairwise_sq_distances(np.array([[1.0, 2.0], [1.0, 2.0]]))
    assert np.array_equal(dm.d2, np.zeros((2, 2)))


def test_three_four_five():
    dm = pairwise_sq_distances(np.array([[0.0, 0.0], [3.0, 4.0]]))
    assert dm.d2[0, 1] == pytest.approx(25.0)
    assert dm.d2[1, 0] == pytest.approx(25.0)


def test_distances_match_brute_force():
    rng = np.random.default_rng(42)
    x = rng.normal(size=(5, 8))
    dm = pairwise_sq_distances(x)
    assert np.allclose(dm.d2, brute_distances(x), atol=1e-12)
    assert np.allclose(dm.d2, dm.d2.T)
    assert np.all(np.diag(dm.d2) == 0.0)
    assert np.all(dm.d2 >= 0.0)


# ---------------------------------------------------------------------------
# perplexity calibration

def test_equidistant_row_is_uniform():
    d2 = np.array([0.0, 2.0, 2.0, 2.0])
    beta, p = calibrate_row(d2, 0, perplexity=3.0)
    assert p[0] == 0.0
    assert np.allclose(p[1:], 1.0 / 3.0, atol=1e-9)


def test_beta_matches_independent_bisection():
    d2 = np.array([0.0, 1.0, 4.0])
    beta, p = calibrate_row(d2, 0, perplexity=1.5)
    expected = bisect_beta(d2, 0, 1.5)
    assert beta == pytest.approx(expected, rel=1e-4)
    assert p.sum() == pytest.approx(1.0)


def test_perplexity_at_n_rejected():
    with pytest.raises(ValueError):
        calibrate_row(np.array([0.0, 1.0, 2.0]), 0, perplexity=3.0)


def test_single_point_rejected():
    with pytest.raises(ValueError):
        calibrate_row(np.array([0.0]), 0, perplexity=0.5)


def test_calibration_hits_tolerance_on_random_rows():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = rng.integers(5, 40)
        d2 = rng.random(n) * rng.uniform(0.1, 100)
        i = int(rng.integers(n))
        d2[i] = 0.0
        target = rng.uniform(1.5, n - 1.5)
        _, p = calibrate_row(d2, i, target)
        assert row_perplexity(d2, i, bisect_beta(d2, i, target)) == pytest.approx(target, rel=1e-3)
        h = -np.sum(p[p > 0] * np.log(p[p > 0]))
        assert abs(math.exp(h) - target) <= 1e-5 * target


# ---------------------------------------------------------------------------
# symmetrization

def test_two_point_affinities_forced():
    p_cond = np.array([[0.0, 1.0], [1.0, 0.0]])
    P = symmetrize(p_cond)
    assert P.p[0, 1] == pytest.approx(0.5)
    assert P.p[1, 0] == pytest.approx(0.5)


def test_uniform_rows_give_uniform_joint():
    p_cond = np.full((4, 4), 1.0 / 3.0)
    np.fill_diagonal(p_cond, 0.0)
    P = symmetrize(p_cond)
    off = P.p[~np.eye(4, dtype=bool)]
    assert np.allclose(off, 1.0 / 12.0)


@given(st.integers(min_value=2, max_value=12), st.integers(min_value=0, max_value=10_000))
def test_symmetrize_invariants(n, seed):
    rng = np.random.default_rng(seed)
    P = random_affinities(n, rng)
    assert abs(P.p.sum() - 1.0) <= 1e-12
    assert np.allclose(P.p, P.p.T)
    assert np.all(np.diag(P.p) == 0.0)
    assert np.all(P.p >= 0.0)


# ---------------------------------------------------------------------------
# optimization

def small_params(**kw):
    defaults = dict(perplexity=3.0, iterations=300, learning_rate=100.0,
                    early_exaggeration_iters=50, momentum_switch_iter=100,
                    seed=1)
    defaults.update(kw)
    return TsneParams(**defaults)


def test_single_point_at_origin():
    P = AffinityMatrix(n=1, p=np.zeros((1, 1)))
    layout = tsne_optimize(P, small_params())
    assert np.array_equal(layout.y, np.zeros((1, 2)))
    assert layout.final_kl == 0.0


def test_two_points_kl_near_zero():
    P = AffinityMatrix(n=2, p=np.array([[0.0, 0.5], [0.5, 0.0]]))
    layout = tsne_optimize(P, small_params(perplexity=1.0))
    assert layout.final_kl == pytest.approx(0.0, abs=1e-9)


def test_gradient_matches_finite_differences():
    rng = np.random.default_rng(0)
    n = 10
    P = random_affinities(n, rng)
    h = 1e-5
    for trial in range(5):
        y = rng.normal(scale=1.0 + trial, size=(n, 2))
        grad = _gradient(P.p, y)
        fd = np.zeros_like(y)
        for i in range(n):
            for k in range(2):
                yp, ym = y.copy(), y.copy()
                yp[i, k] += h
                ym[i, k] -= h
                fd[i, k] = (brute_kl(P.p, brute_q(yp)) -
                            brute_kl(P.p, brute_q(ym))) / (2 * h)
        scale = max(np.abs(fd).max(), 1e-12)
        assert np.abs(grad - fd).max() / scale <= 1e-4


def test_kl_decreases_from_initialization():
    rng = np.random.default_rng(5)
    n = 10
    P = random_affinities(n, rng)
    # default learning rate targets corpora in the hundreds; a 10-point
    # instance needs a smaller step for stable descent
    params = TsneParams(perplexity=3.0, iterations=1000, learning_rate=1.0,
                        seed=9)
    init = np.random.default_rng(params.seed).normal(0.0, 1e-4, size=(n, 2))
    kl_init = brute_kl(P.p, brute_q(init))
    layout = tsne_optimize(P, params)
    kl_final = brute_kl(P.p, brute_q(layout.y))
    assert kl_final <= kl_init
    assert layout.final_kl == pytest.approx(kl_final, rel=1e-9, abs=1e-12)


def test_layout_centered_and_finite():
    rng = np.random.default_rng(11)
    P = random_affinities(8, rng)
    layout = tsne_optimize(P, small_params(seed=2))
    assert np.all(np.isfinite(layout.y))
    assert np.abs(layout.y.mean(axis=0)).max() <= 1e-6


def test_translation_invariant_gradient():
    rng = np.random.default_rng(13)
    P = random_affinities(6, rng)
    y = rng.normal(size=(6, 2))
    shifted = y + np.array([123.4, -56.7])
    assert np.allclose(_gradient(P.p, y), _gradient(P.p, shifted), atol=1e-8)


def test_optimize_deterministic():
    rng = np.random.default_rng(21)
    P = random_affinities(9, rng)
    a = tsne_optimize(P, small_params(seed=33))
    b = tsne_optimize(P, small_params(seed=33))
    assert a.y.tobytes() == b.y.tobytes()
    assert a.final_kl == b.final_kl


# ---------------------------------------------------------------------------
# full pipeline

def cluster_embeddings(seed=123, n_per=50, dim=50, spread=8.0):
    rng = np.random.default_rng(seed)
    centers = rng.normal(scale=spread, size=(3, dim))
    embeddings, labels = [], []
    for c, center in enumerate(centers):
        for i in range(n_per):
            vec = center + rng.normal(size=dim)
            embeddings.append(DocumentEmbedding(f"p{c}-{i}", vec, 1.0))
            labels.append(c)
    return embeddings, np.array(labels)


def separation_ratio(y, labels):
    intra, inter = [], []
    n = len(y)
    for i in range(n):
        for j in range(i + 1, n):
            d = np.linalg.norm(y[i] - y[j])
            (intra if labels[i] == labels[j] else inter).append(d)
    return np.mean(intra), np.mean(inter)


def test_single_document():
    layout = project_corpus([DocumentEmbedding("only", np.ones(4), 1.0)],
                            TsneParams(seed=0))
    assert layout.n == 1
    assert np.array_equal(layout.y, np.zeros((1, 2)))


def test_cluster_recovery():
    embeddings, labels = cluster_embeddings()
    layout = project_corpus(embeddings, TsneParams(perplexity=30.0, seed=4))
    intra, inter = separation_ratio(layout.y, labels)
    assert intra < inter


def test_pipeline_deterministic():
    embeddings, _ = cluster_embeddings(n_per=10, dim=10)
    params = TsneParams(perplexity=5.0, iterations=200,
                        early_exaggeration_iters=50, momentum_switch_iter=100,
                        seed=77)
    a = project_corpus(embeddings, params)
    b = project_corpus(embeddings, params)
    assert a.y.tobytes() == b.y.tobytes()


def test_perplexity_clamped_for_small_corpora(caplog):
    embeddings = [DocumentEmbedding(f"p{i}", np.array([float(i), 0.0]), 1.0)
                  for i in range(4)]
    params = TsneParams(perplexity=30.0, iterations=50,
                        early_exaggeration_iters=10, momentum_switch_iter=20,
                        seed=0)
    import logging
    with caplog.at_level(logging.WARNING, logger="confsite.projection"):
        layout = project_corpus(embeddings, params)
    assert layout.n == 4
    assert any("clamped" in r.message for r in caplog.records)


def test_zero_vectors_are_jittered():
    embeddings = [DocumentEmbedding(f"z{i}", np.zeros(3), 0.0) for i in range(5)]
    layout = project_corpus(embeddings, TsneParams(
        perplexity=2.0, iterations=50, early_exaggeration_iters=10,
        momentum_switch_iter=20, seed=8))
    assert np.all(np.isfinite(layout.y))
