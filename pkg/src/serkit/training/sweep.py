"""K-sweep: one self-regularized run per (K, seed), scored on the test set."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from ..core import Corpus
from ..tagger import ArchDescriptor, TokenTagger, Vocab
from .config import TrainConfig
from .loop import micro_f1, train_self_reg


@dataclass(frozen=True)
class KSweepRow:
    k: int
    seed: int
    test_f1: float
    val_f1: float


@dataclass(frozen=True)
class KSweepReport:
    rows: tuple[KSweepRow, ...]

    def k_values(self) -> list[int]:
        return sorted({row.k for row in self.rows})

    def mean_test_f1(self, k: int) -> float:
        values = [row.test_f1 for row in self.rows if row.k == k]
        return sum(values) / len(values)


def k_sweep(
    arch: ArchDescriptor,
    vocab: Vocab,
    train_corpus: Corpus,
    val_corpus: Corpus,
    test_corpus: Corpus,
    config: TrainConfig,
    k_values: Sequence[int],
    seeds: Sequence[int],
) -> KSweepReport:
    if any(k < 1 for k in k_values):
        raise ValueError("k values must be >= 1")
    rows = []
    for k in k_values:
        for seed in seeds:
            run_config = replace(config, k=k, seed=seed)
            model = TokenTagger(replace(arch, init_seed=seed))
            model, report = train_self_reg(model, vocab, train_corpus, val_corpus, run_config)
            rows.append(
                KSweepRow(
                    k=k,
                    seed=seed,
                    test_f1=micro_f1(model, vocab, test_corpus),
                    val_f1=report.best_val_f1,
                )
            )
    return KSweepReport(tuple(rows))
