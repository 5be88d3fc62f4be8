"""2-D projections of code embeddings: PCA and exact t-SNE.

Both are deterministic: PCA fixes component signs by making the
largest-magnitude loading positive, and t-SNE draws all randomness from a
seeded generator. t-SNE runs the standard exact (all-pairs) gradient descent
with early exaggeration, momentum schedule, and adaptive gains, tracking the
KL divergence per iteration; it is O(n^2) per step, so long-running requests
are executed as cancellable background jobs by the service layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

# Reference optimizer settings (van der Maaten's exact t-SNE).
TSNE_DEFAULT_PERPLEXITY = 30.0
TSNE_DEFAULT_ITERATIONS = 1000
TSNE_EARLY_EXAGGERATION = 12.0
TSNE_EXAGGERATION_ITERS = 250


def tsne_learning_rate(n: int) -> float:
    """Reference auto rate max(n / exaggeration / 4, 50); fixed rates overshoot
    and oscillate on small point sets."""
    return max(n / TSNE_EARLY_EXAGGERATION / 4.0, 50.0)


@dataclass(frozen=True)
class PointRef:
    run_id: str
    node_id: int
    llm_id: str


@dataclass(frozen=True)
class ProjectionPoint:
    x: float
    y: float
    run_id: str
    node_id: int
    llm_id: str


def _as_points(coords: np.ndarray, refs: Sequence[PointRef] | None) -> list[ProjectionPoint]:
    if refs is None:
        refs = [PointRef("", i, "") for i in range(coords.shape[0])]
    if len(refs) != coords.shape[0]:
        raise ValueError("refs and vectors disagree in length")
    return [
        ProjectionPoint(float(x), float(y), ref.run_id, ref.node_id, ref.llm_id)
        for (x, y), ref in zip(coords, refs)
    ]


def _pca_components(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    centered = x - x.mean(axis=0)
    _, singular, vt = np.linalg.svd(centered, full_matrices=False)
    components = vt[:2].copy()
    for row in components:
        peak = np.argmax(np.abs(row))
        if row[peak] < 0:
            row *= -1
    variances = singular[:2] ** 2 / max(x.shape[0] - 1, 1)
    return centered @ components.T, components, variances


def project_pca(
    vectors: Sequence[np.ndarray] | np.ndarray, refs: Sequence[PointRef] | None = None
) -> list[ProjectionPoint]:
    """Project onto the top-2 principal components of the centered data."""
    x = np.asarray(vectors, dtype=np.float64)
    if x.shape[0] < 2:
        raise ValueError("PCA needs at least 2 vectors")
    coords, _, _ = _pca_components(x)
    return _as_points(coords, refs)


def pca_explained_variance(vectors: Sequence[np.ndarray] | np.ndarray) -> np.ndarray:
    """Variance captured by the two projection axes."""
    x = np.asarray(vectors, dtype=np.float64)
    if x.shape[0] < 2:
        raise ValueError("PCA needs at least 2 vectors")
    _, _, variances = _pca_components(x)
    return variances


@dataclass(frozen=True)
class TsneResult:
    coords: np.ndarray
    kl_trace: tuple[float, ...]


def _conditional_probabilities(sq_dists: np.ndarray, perplexity: float) -> np.ndarray:
    """Per-row Gaussian affinities, precision tuned by bisection until each
    row's entropy matches log(perplexity)."""
    n = sq_dists.shape[0]
    target = np.log(perplexity)
    p = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        row = np.delete(sq_dists[i], i)
        beta, beta_lo, beta_hi = 1.0, 0.0, np.inf
        for _ in range(64):
            weights = np.exp(-row * beta)
            total = weights.sum()
            if total <= 0:
                entropy = 0.0
                probs = np.zeros_like(row)
            else:
                probs = weights / total
                entropy = float(-(probs[probs > 0] * np.log(probs[probs > 0])).sum())
            if abs(entropy - target) < 1e-7:
                break
            if entropy > target:
                beta_lo = beta
                beta = beta * 2 if np.isinf(beta_hi) else (beta + beta_hi) / 2
            else:
                beta_hi = beta
                beta = beta / 2 if beta_lo == 0 else (beta + beta_lo) / 2
        p[i, np.arange(n) != i] = probs
    return p


def tsne_embedding(
    vectors: Sequence[np.ndarray] | np.ndarray,
    perplexity: float = TSNE_DEFAULT_PERPLEXITY,
    iterations: int = TSNE_DEFAULT_ITERATIONS,
    seed: int = 0,
    learning_rate: float | None = None,
    progress: Callable[[int, int], None] | None = None,
    should_stop: Callable[[], bool] | None = None,
) -> TsneResult:
    """Exact t-SNE to 2-D with a per-iteration KL trace.

    Requires n >= 5 and 3 <= perplexity < n/3. Stops early (returning the
    layout so far) when ``should_stop`` fires.
    """
    x = np.asarray(vectors, dtype=np.float64)
    n = x.shape[0]
    if n < 5:
        raise ValueError("t-SNE needs at least 5 vectors")
    if not 3 <= perplexity < n / 3:
        raise ValueError(f"perplexity {perplexity} outside [3, n/3) for n={n}")
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    eta = tsne_learning_rate(n) if learning_rate is None else learning_rate

    norms = (x * x).sum(axis=1)
    sq_dists = np.maximum(norms[:, None] + norms[None, :] - 2 * x @ x.T, 0.0)
    cond = _conditional_probabilities(sq_dists, perplexity)
    p = (cond + cond.T) / (2 * n)
    p = np.maximum(p, 1e-12)

    rng = np.random.default_rng(seed)
    y = rng.normal(0.0, 1e-4, size=(n, 2))
    update = np.zeros_like(y)
    gains = np.ones_like(y)
    kl_trace: list[float] = []

    for it in range(iterations):
        exaggeration = TSNE_EARLY_EXAGGERATION if it < TSNE_EXAGGERATION_ITERS else 1.0
        momentum = 0.5 if it < TSNE_EXAGGERATION_ITERS else 0.8
        if it == TSNE_EXAGGERATION_ITERS:
            # reference optimizers restart velocity and gains after the
            # exploration phase
            update[:] = 0.0
            gains[:] = 1.0

        y_norms = (y * y).sum(axis=1)
        num = 1.0 / (1.0 + y_norms[:, None] + y_norms[None, :] - 2 * y @ y.T)
        np.fill_diagonal(num, 0.0)
        q = np.maximum(num / num.sum(), 1e-12)

        pq = (exaggeration * p - q) * num
        grad = 4.0 * ((np.diag(pq.sum(axis=1)) - pq) @ y)

        same_sign = np.sign(grad) == np.sign(update)
        gains = np.where(same_sign, gains * 0.8, gains + 0.2)
        np.clip(gains, 0.01, None, out=gains)
        update = momentum * update - eta * gains * grad
        y = y + update
        y = y - y.mean(axis=0)

        kl_trace.append(float((p * np.log(p / q)).sum()))
        if progress is not None:
            progress(it + 1, iterations)
        if should_stop is not None and should_stop():
            break

    return TsneResult(coords=y, kl_trace=tuple(kl_trace))


def project_tsne(
    vectors: Sequence[np.ndarray] | np.ndarray,
    refs: Sequence[PointRef] | None = None,
    perplexity: float = TSNE_DEFAULT_PERPLEXITY,
    iterations: int = TSNE_DEFAULT_ITERATIONS,
    seed: int = 0,
    progress: Callable[[int, int], None] | None = None,
    should_stop: Callable[[], bool] | None = None,
) -> list[ProjectionPoint]:
    result = tsne_embedding(
        vectors,
        perplexity=perplexity,
        iterations=iterations,
        seed=seed,
        progress=progress,
        should_stop=should_stop,
    )
    return _as_points(result.coords, refs)
