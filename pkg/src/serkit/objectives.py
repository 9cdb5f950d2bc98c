"""Training objectives over sets of dropout-perturbed forward passes.

The divergence loss penalizes the spread of K per-token label
distributions around their arithmetic mean:

    L_kl = (1/K) * sum_j D_KL(P_j || P_avg),   P_avg = (1/K) * sum_j P_j

summed over tokens, then divided by the token count, so values are
comparable across batch sizes. The task loss is the cross entropy of the
gold labels averaged over the K passes the same way. The combined
agreement objective is L_task + alpha * L_kl.

Probabilities are clamped at 1e-12 before every log, keeping losses
finite arbitrarily close to one-hot outputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

PROB_CLAMP = 1e-12


@dataclass(frozen=True)
class DistributionSet:
    """K stacked per-token probability matrices, shape (K, n_tokens, n_labels)."""

    passes: np.ndarray

    def __post_init__(self) -> None:
        if self.passes.ndim != 3:
            raise ValueError(f"expected (K, tokens, labels), got {self.passes.shape}")

    @property
    def k(self) -> int:
        return self.passes.shape[0]

    @property
    def n_tokens(self) -> int:
        return self.passes.shape[1]

    @property
    def average(self) -> np.ndarray:
        return self.passes.mean(axis=0)


def _clamped_log(p: np.ndarray) -> np.ndarray:
    return np.log(np.maximum(p, PROB_CLAMP))


def divergence_loss(dists: DistributionSet, symmetric: bool = False) -> float:
    """Mean per-token divergence of the K passes from their average.

    The default direction is D_KL(P_j || P_avg); ``symmetric`` adds the
    reverse direction halved. Zero when all passes agree, and always zero
    for K = 1.
    """
    passes = dists.passes
    if dists.n_tokens == 0:
        return 0.0
    avg = dists.average
    log_passes = _clamped_log(passes)
    log_avg = _clamped_log(avg)
    forward = (passes * (log_passes - log_avg)).sum(axis=-1)  # (K, tokens)
    total = forward.mean(axis=0).sum()
    if symmetric:
        reverse = (avg * (log_avg - log_passes)).sum(axis=-1)
        total += 0.5 * reverse.mean(axis=0).sum()
    return float(total / dists.n_tokens)


@dataclass(frozen=True)
class TaskLoss:
    total: float      # summed over tokens
    per_token: float  # total / token count
    n_tokens: int


def task_loss(dists: DistributionSet, gold: np.ndarray) -> TaskLoss:
    """Cross entropy of gold labels averaged over the K forward passes."""
    if gold.shape != (dists.n_tokens,):
        raise ValueError(
            f"gold labels shape {gold.shape} does not match {dists.n_tokens} tokens"
        )
    if dists.n_tokens == 0:
        return TaskLoss(0.0, 0.0, 0)
    picked = dists.passes[:, np.arange(dists.n_tokens), gold]  # (K, tokens)
    total = float(-_clamped_log(picked).mean(axis=0).sum())
    return TaskLoss(total, total / dists.n_tokens, dists.n_tokens)


def agreement_loss(l_task: float, l_kl: float, alpha: float) -> float:
    """Combined objective L_task + alpha * L_kl."""
    if alpha < 0:
        raise ValueError(f"alpha must be nonnegative, got {alpha}")
    return l_task + alpha * l_kl
