"""Audit sampling arithmetic: sample sizes, uniform draws, agreement."""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import NormalDist
from typing import Optional, Sequence

import numpy as np

from ..core import Corpus


def sample_size(confidence: float, margin: float, population: Optional[int] = None) -> int:
    """Cochran sample size at worst-case proportion 0.5.

    n0 = ceil(z^2 * 0.25 / margin^2) with z the standard normal quantile at
    (1 + confidence) / 2; when a population size is given, the finite
    population correction n0 / (1 + (n0 - 1) / N) is applied before the
    final ceiling.
    """
    if not 0.0 < confidence < 1.0:
        raise ValueError(f"confidence must be in (0,1), got {confidence}")
    if not 0.0 < margin < 1.0:
        raise ValueError(f"margin must be in (0,1), got {margin}")
    z = NormalDist().inv_cdf((1.0 + confidence) / 2.0)
    n0 = math.ceil(z * z * 0.25 / (margin * margin))
    if population is None:
        return n0
    if population < 1:
        raise ValueError(f"population must be positive, got {population}")
    corrected = n0 / (1.0 + (n0 - 1.0) / population)
    return min(math.ceil(corrected), population)


@dataclass(frozen=True)
class AuditSample:
    corpus: Corpus
    label_count: int  # tokens carrying a B- or I- label


def draw_audit_sample(corpus: Corpus, n: int, seed: int) -> AuditSample:
    """Uniform sample of n sentences without replacement, corpus order kept."""
    if n > len(corpus):
        raise ValueError(f"cannot sample {n} sentences from {len(corpus)}")
    rng = np.random.default_rng(seed)
    indices = sorted(rng.choice(len(corpus), size=n, replace=False).tolist())
    sentences = tuple(corpus.sentences[i] for i in indices)
    label_count = sum(
        1 for s in sentences for label in s.labels if label.kind != "O"
    )
    return AuditSample(Corpus(sentences, corpus.meta), label_count)


def cohen_kappa(labels_a: Sequence, labels_b: Sequence) -> float:
    """Cohen's kappa: (p_o - p_e) / (1 - p_e) over two equal-length sequences."""
    if len(labels_a) != len(labels_b):
        raise ValueError(f"length mismatch: {len(labels_a)} vs {len(labels_b)}")
    n = len(labels_a)
    if n == 0:
        raise ValueError("cannot compute kappa on empty sequences")

    p_o = sum(1 for x, y in zip(labels_a, labels_b) if x == y) / n
    classes = set(labels_a) | set(labels_b)
    p_e = sum(
        (sum(1 for x in labels_a if x == c) / n) * (sum(1 for y in labels_b if y == c) / n)
        for c in classes
    )
    if p_e == 1.0:
        if p_o == 1.0:
            return 1.0
        raise ValueError("degenerate marginals: expected agreement is 1 but sequences differ")
    return (p_o - p_e) / (1.0 - p_e)
