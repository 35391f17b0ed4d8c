"""t-SNE projection of document embeddings to 2-D.

Exact O(n^2) implementation: per-row perplexity calibration by binary
search on the Gaussian precision, symmetrized joint affinities, and
KL-divergence gradient descent with momentum and early exaggeration.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

log = logging.getLogger(__name__)

EPS = 1e-12  # floor inside logs and the Q normalization denominator
ZERO_VECTOR_JITTER = 1e-8
INIT_SIGMA = 1e-4


@dataclass
class DistanceMatrix:
    n: int
    d2: np.ndarray  # (n, n) squared Euclidean distances


@dataclass
class AffinityMatrix:
    n: int
    p: np.ndarray  # (n, n) joint probabilities, zero diagonal, sums to 1


@dataclass
class Layout:
    n: int
    y: np.ndarray  # (n, 2)
    final_kl: float
    seed: int


@dataclass
class TsneParams:
    perplexity: float = 30.0
    iterations: int = 1000
    learning_rate: float = 200.0
    momentum_early: float = 0.5
    momentum_late: float = 0.8
    momentum_switch_iter: int = 250
    early_exaggeration_factor: float = 12.0
    early_exaggeration_iters: int = 250
    seed: int = 0

    def __post_init__(self):
        if self.perplexity <= 0:
            raise ValueError("perplexity must be positive")
        if self.early_exaggeration_iters > self.iterations:
            raise ValueError("early_exaggeration_iters exceeds iterations")


def pairwise_sq_distances(vectors: np.ndarray) -> DistanceMatrix:
    """Squared Euclidean distances between all row pairs."""
    x = np.asarray(vectors, dtype=np.float64)
    if x.ndim != 2:
        raise ValueError("expected a 2-D array of row vectors")
    sq = np.sum(x * x, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (x @ x.T)
    np.maximum(d2, 0.0, out=d2)
    np.fill_diagonal(d2, 0.0)
    d2 = (d2 + d2.T) / 2.0
    return DistanceMatrix(n=len(x), d2=d2)


def _row_entropy_probs(d2_row: np.ndarray, self_index: int,
                       beta: float) -> tuple[float, np.ndarray]:
    """Shannon entropy (nats) and conditional probabilities for one row."""
    logits = -beta * d2_row
    logits[self_index] = -np.inf
    logits -= logits.max()
    w = np.exp(logits)
    total = w.sum()
    p = w / total
    nz = p > 0
    h = -np.sum(p[nz] * np.log(p[nz]))
    return h, p


def calibrate_row(d2_row: np.ndarray, self_index: int, perplexity: float,
                  tol: float = 1e-5, max_iter: int = 64) -> tuple[float, np.ndarray]:
    """Binary-search the precision beta so exp(entropy) matches the perplexity.

    Brackets by doubling/halving first, then bisects. Returns the best
    (beta, conditional row) found; logs if the tolerance was not reached.
    """
    n = len(d2_row)
    if n < 2:
        raise ValueError("need at least 2 points to calibrate")
    if perplexity >= n:
        raise ValueError(f"perplexity {perplexity} must be < n = {n}")
    d2_row = np.asarray(d2_row, dtype=np.float64)
    target = np.log(perplexity)

    beta = 1.0
    lo, hi = None, None
    # entropy decreases as beta grows; expand towards the target side
    for _ in range(max_iter):
        h, p = _row_entropy_probs(d2_row, self_index, beta)
        if abs(np.exp(h) - perplexity) <= tol * perplexity:
            return beta, p
        if h > target:
            lo = beta
            beta = beta * 2.0 if hi is None else (beta + hi) / 2.0
        else:
            hi = beta
            beta = beta / 2.0 if lo is None else (beta + lo) / 2.0
    h, p = _row_entropy_probs(d2_row, self_index, beta)
    log.warning("perplexity calibration hit max_iter=%d (exp(H)=%.6f, target=%.6f)",
                max_iter, np.exp(h), perplexity)
    return beta, p


def symmetrize(p_cond: np.ndarray) -> AffinityMatrix:
    """Joint affinities p_ij = (p_j|i + p_i|j) / 2n."""
    p_cond = np.asarray(p_cond, dtype=np.float64)
    n = len(p_cond)
    p = (p_cond + p_cond.T) / (2.0 * n)
    np.fill_diagonal(p, 0.0)
    return AffinityMatrix(n=n, p=p)


def _q_matrix(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Student-t similarities: unnormalized kernel and normalized Q."""
    d2 = pairwise_sq_distances(y).d2
    num = 1.0 / (1.0 + d2)
    np.fill_diagonal(num, 0.0)
    q = num / max(num.sum(), EPS)
    return num, q


def kl_divergence(p: np.ndarray, q: np.ndarray) -> float:
    """KL(P || Q) with floored arguments, skipping the zero diagonal."""
    mask = p > 0
    return float(np.sum(p[mask] * np.log(p[mask] / np.maximum(q[mask], EPS))))


def _gradient(p: np.ndarray, y: np.ndarray) -> np.ndarray:
    """dKL/dy_i = 4 * sum_j (p_ij - q_ij)(y_i - y_j) / (1 + |y_i - y_j|^2)."""
    num, q = _q_matrix(y)
    pq = (p - q) * num
    grad = 4.0 * ((np.diag(pq.sum(axis=1)) - pq) @ y)
    return grad


def tsne_optimize(P: AffinityMatrix, params: TsneParams) -> Layout:
    """Gradient descent on KL(P||Q) with momentum and early exaggeration.

    Deterministic for a fixed seed; output is re-centered on the origin and
    final_kl is evaluated on the un-exaggerated affinities.
    """
    n = P.n
    rng = np.random.default_rng(params.seed)
    if n == 0:
        return Layout(n=0, y=np.zeros((0, 2)), final_kl=0.0, seed=params.seed)
    if n == 1:
        return Layout(n=1, y=np.zeros((1, 2)), final_kl=0.0, seed=params.seed)

    p = np.array(P.p, dtype=np.float64)
    y = rng.normal(0.0, INIT_SIGMA, size=(n, 2))
    velocity = np.zeros_like(y)

    for it in range(params.iterations):
        factor = params.early_exaggeration_factor if it < params.early_exaggeration_iters else 1.0
        grad = _gradient(p * factor, y)
        if not np.all(np.isfinite(grad)):
            raise FloatingPointError(
                f"non-finite gradient at iteration {it}; aborting descent")
        momentum = (params.momentum_early if it < params.momentum_switch_iter
                    else params.momentum_late)
        velocity = momentum * velocity - params.learning_rate * grad
        y = y + velocity
        if not np.all(np.isfinite(y)):
            raise FloatingPointError(
                f"non-finite coordinates at iteration {it}; aborting descent")

    y = y - y.mean(axis=0)
    _, q = _q_matrix(y)
    final_kl = max(kl_divergence(p, q), 0.0)
    log.info("t-SNE finished: n=%d iterations=%d final_kl=%.6f",
             n, params.iterations, final_kl)
    return Layout(n=n, y=y, final_kl=final_kl, seed=params.seed)


def affinities_from_distances(dm: DistanceMatrix, perplexity: float) -> AffinityMatrix:
    """Calibrate every row then symmetrize."""
    p_cond = np.zeros((dm.n, dm.n))
    for i in range(dm.n):
        _, p_cond[i] = calibrate_row(dm.d2[i], i, perplexity)
    return symmetrize(p_cond)


def project_corpus(embeddings, params: TsneParams) -> Layout:
    """Full pipeline: distances -> calibration -> symmetrize -> optimize.

    Zero vectors (zero-coverage documents) get seeded jitter so coincident
    points cannot degenerate a calibration row; an unattainable perplexity
    is clamped to max(1, (n-1)/3) with a warning.
    """
    vectors = np.array([e.vector for e in embeddings], dtype=np.float64)
    n = len(vectors)
    if n == 0:
        raise ValueError("project_corpus requires at least one embedding")
    if n == 1:
        return Layout(n=1, y=np.zeros((1, 2)), final_kl=0.0, seed=params.seed)

    zero_rows = ~vectors.any(axis=1)
    if zero_rows.any():
        rng = np.random.default_rng(params.seed)
        jitter = rng.normal(0.0, ZERO_VECTOR_JITTER, size=vectors.shape)
        vectors = vectors + jitter * zero_rows[:, None]
        log.info("perturbed %d zero vectors with seeded noise", int(zero_rows.sum()))

    perplexity = params.perplexity
    if perplexity >= n:
        perplexity = max(1.0, (n - 1) / 3.0)
        log.warning("perplexity %.3g >= n=%d; clamped to %.3g",
                    params.perplexity, n, perplexity)

    dm = pairwise_sq_distances(vectors)
    P = affinities_from_distances(dm, perplexity)
    run = TsneParams(**{**params.__dict__, "perplexity": perplexity})
    return tsne_optimize(P, run)
