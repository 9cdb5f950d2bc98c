"""Self-regularized and co-regularized training procedures.

Self-regularization trains one model: after a warm-up phase on the task
loss alone (ceil(warmup_fraction * total_steps) steps), every step draws K
dropout-perturbed forward passes of the same batch and minimizes
L_task + alpha * L_kl, pulling the K per-token distributions toward their
average. Vanilla training is the K = 1, alpha = 0 degenerate case of the
same loop.

Co-regularization trains N same-architecture models with different
initializations; each step every model does one stochastic pass, and the
divergence of the N distributions around their mean is penalized the same
way. It returns the single model with the best validation micro-F1.

All randomness (batch order, dropout pass seeds) derives from the config
seed, so runs are bit-reproducible on one platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ..core import (
    LABEL_INDEX,
    LABEL_SPACE,
    Corpus,
    LabeledSentence,
    repair_iob,
)
from ..metrics import strict_span_prf
from ..tagger import (
    LOSS_AGREEMENT,
    LOSS_TASK,
    LossDefinition,
    TokenTagger,
    Vocab,
    loss_and_gradient,
)
from ..objectives import PROB_CLAMP, DistributionSet, divergence_loss, task_loss
from .config import CoRegConfig, TrainConfig
from .meter import ResourceReport, resource_meter
from .optim import Adam

# seed-stream tags, so the per-epoch shuffle, per-pass dropout and co-reg
# passes never collide
_TAG_SHUFFLE = 1
_TAG_PASS = 2
_TAG_COREG_PASS = 3

PARAM_BYTES_PER_ELEMENT = 8  # float64


def derive_seed(*parts: int) -> int:
    """Stable derived seed from integer parts (order-sensitive)."""
    return int(np.random.SeedSequence(parts).generate_state(1, np.uint64)[0])


EncodedSentence = tuple[list[int], list[int]]


def encode_corpus(corpus: Corpus, vocab: Vocab) -> list[EncodedSentence]:
    encoded = []
    for sentence in corpus:
        ids = vocab.encode_sentence(sentence.surfaces)
        gold = [LABEL_INDEX[label] for label in sentence.label_strings]
        encoded.append((ids, gold))
    return encoded


def predict_corpus(model: TokenTagger, vocab: Vocab, corpus: Corpus, chunk: int = 64) -> Corpus:
    """Deterministic predictions: argmax labels, orphan I-X repaired to B-X."""
    predicted: list[LabeledSentence] = []
    sentences = corpus.sentences
    for begin in range(0, len(sentences), chunk):
        group = sentences[begin : begin + chunk]
        ids_list = [vocab.encode_sentence(s.surfaces) for s in group]
        cache = model.forward_batch_cached(ids_list, stochastic=False)
        for i, sentence in enumerate(group):
            probs = cache.probs[i, : len(sentence)]
            labels = tuple(LABEL_SPACE[j] for j in probs.argmax(axis=1))
            predicted.append(
                LabeledSentence(sentence.tokens, repair_iob(labels), sentence.source_id)
            )
    return Corpus(tuple(predicted), corpus.meta)


def micro_f1(model: TokenTagger, vocab: Vocab, corpus: Corpus) -> float:
    return strict_span_prf(predict_corpus(model, vocab, corpus), corpus).micro.f1


@dataclass(frozen=True)
class EpochStats:
    epoch: int
    task_loss: float
    kl_loss: float
    agree_loss: float
    val_f1: float


@dataclass
class TrainReport:
    method: str
    config: TrainConfig
    epochs: list[EpochStats] = field(default_factory=list)
    best_epoch: int = -1
    best_val_f1: float = -1.0
    warmup_steps: int = 0
    total_steps: int = 0
    resources: ResourceReport = field(default_factory=ResourceReport)

    def to_lines(self) -> list[str]:
        """Structured text: one metric per line."""
        lines = [
            f"method {self.method}",
            f"seed {self.config.seed}",
            f"k {self.config.k}",
            f"alpha {self.config.alpha}",
            f"total_steps {self.total_steps}",
            f"warmup_steps {self.warmup_steps}",
        ]
        for row in self.epochs:
            lines.append(
                f"epoch {row.epoch} task_loss {row.task_loss:.6f} "
                f"kl_loss {row.kl_loss:.6f} agree_loss {row.agree_loss:.6f} "
                f"val_f1 {row.val_f1:.4f}"
            )
        lines.append(f"best_epoch {self.best_epoch}")
        lines.append(f"best_val_f1 {self.best_val_f1:.4f}")
        for key, value in self.resources.scaled().items():
            lines.append(f"{key} {value}")
        return lines


def _batches(order: np.ndarray, batch_size: int) -> list[np.ndarray]:
    return [order[i : i + batch_size] for i in range(0, len(order), batch_size)]


def train_self_reg(
    model: TokenTagger,
    vocab: Vocab,
    train_corpus: Corpus,
    val_corpus: Corpus,
    config: TrainConfig,
) -> tuple[TokenTagger, TrainReport]:
    """Trains in place and returns (best-validation-F1 model, report)."""
    train_enc = encode_corpus(train_corpus, vocab)
    n = len(train_enc)
    if n == 0:
        raise ValueError("training corpus is empty")
    steps_per_epoch = math.ceil(n / config.batch_size)
    total_steps = steps_per_epoch * config.epochs
    warmup_steps = math.ceil(config.warmup_fraction * total_steps)

    optimizer = Adam(model.parameter_count, config.learning_rate)
    report = TrainReport(
        method="selfreg" if config.k > 1 or config.alpha > 0 else "vanilla",
        config=config,
        warmup_steps=warmup_steps,
        total_steps=total_steps,
    )
    best_params: np.ndarray | None = None

    with resource_meter() as meter:
        step = 0
        for epoch in range(config.epochs):
            rng = np.random.default_rng(
                np.random.SeedSequence((config.seed, _TAG_SHUFFLE, epoch))
            )
            order = rng.permutation(n)
            sums = {"task": 0.0, "kl": 0.0, "agree": 0.0}
            for batch_ids in _batches(order, config.batch_size):
                batch = [train_enc[i] for i in batch_ids]
                in_warmup = step < warmup_steps
                k_eff = 1 if (in_warmup and config.warmup_single_pass) else config.k
                seeds = tuple(
                    derive_seed(config.seed, _TAG_PASS, step, j) for j in range(k_eff)
                )
                loss_def = LossDefinition(
                    kind=LOSS_TASK if in_warmup else LOSS_AGREEMENT,
                    k=k_eff,
                    alpha=config.alpha,
                    pass_seeds=seeds,
                    symmetric_kl=config.symmetric_kl,
                )
                result = loss_and_gradient(
                    model, batch, loss_def, batch_id=f"epoch{epoch}/step{step}"
                )
                model.set_flat(optimizer.update(model.get_flat(), result.gradient))
                sums["task"] += result.task.per_token
                sums["kl"] += result.kl
                sums["agree"] += result.task.per_token + config.alpha * result.kl
                step += 1

            val_f1 = micro_f1(model, vocab, val_corpus)
            report.epochs.append(
                EpochStats(
                    epoch=epoch,
                    task_loss=sums["task"] / steps_per_epoch,
                    kl_loss=sums["kl"] / steps_per_epoch,
                    agree_loss=sums["agree"] / steps_per_epoch,
                    val_f1=val_f1,
                )
            )
            if val_f1 > report.best_val_f1:
                report.best_val_f1 = val_f1
                report.best_epoch = epoch
                best_params = model.get_flat()

    if best_params is not None:
        model.set_flat(best_params)
    meter.report.param_bytes = model.parameter_count * PARAM_BYTES_PER_ELEMENT
    meter.report.optimizer_state_bytes = optimizer.state_bytes
    report.resources = meter.report
    return model, report


def train_vanilla(
    model: TokenTagger,
    vocab: Vocab,
    train_corpus: Corpus,
    val_corpus: Corpus,
    config: TrainConfig,
) -> tuple[TokenTagger, TrainReport]:
    """Plain cross-entropy training: the K=1, alpha=0 case of the same loop."""
    return train_self_reg(model, vocab, train_corpus, val_corpus, config.vanilla())


def _coreg_gradients(
    models: Sequence[TokenTagger],
    batch: list[EncodedSentence],
    alpha: float,
    pass_seeds: Sequence[int],
    apply_agreement: bool,
) -> tuple[list[np.ndarray], float, float]:
    """One co-regularization step: per-model gradients, mean task loss, divergence."""
    ids_list = [ids for ids, _ in batch]
    gold_flat = np.concatenate([np.asarray(gold, dtype=np.int64) for _, gold in batch])

    caches = [
        m.forward_batch_cached(ids_list, stochastic=True, pass_seed=seed)
        for m, seed in zip(models, pass_seeds)
    ]
    valid_rows = caches[0].valid[..., 0].astype(bool)
    n_tokens = int(valid_rows.sum())
    passes = np.stack([c.probs[valid_rows] for c in caches])  # (N, tokens, labels)
    dists = DistributionSet(passes)

    n_models = len(models)
    task_total = 0.0
    kl = divergence_loss(dists)
    token_idx = np.arange(n_tokens)
    weight = 1.0 / max(n_tokens, 1)

    log_passes = np.log(np.maximum(passes, PROB_CLAMP))
    log_avg = np.log(np.maximum(dists.average, PROB_CLAMP))

    gradients = []
    for m_index, (model, cache) in enumerate(zip(models, caches)):
        single = DistributionSet(passes[m_index : m_index + 1])
        task = task_loss(single, gold_flat)
        task_total += task.per_token

        d_flat = np.zeros_like(passes[m_index])
        picked = passes[m_index, token_idx, gold_flat]
        d_flat[token_idx, gold_flat] = np.where(
            picked >= PROB_CLAMP, -weight / np.maximum(picked, PROB_CLAMP), 0.0
        )
        if apply_agreement and alpha > 0.0:
            d_flat += alpha * (weight / n_models) * (log_passes[m_index] - log_avg)

        d_probs = np.zeros_like(cache.probs)
        d_probs[valid_rows] = d_flat
        gradients.append(model.backward(cache, d_probs))

    return gradients, task_total / n_models, kl


def train_co_reg(
    models: Sequence[TokenTagger],
    vocab: Vocab,
    train_corpus: Corpus,
    val_corpus: Corpus,
    config: CoRegConfig,
) -> tuple[TokenTagger, TrainReport]:
    """Returns the single model with the best validation micro-F1."""
    if len(models) != config.n_models:
        raise ValueError(f"expected {config.n_models} models, got {len(models)}")
    if len({m.arch.init_seed for m in models}) != len(models):
        raise ValueError("co-regularization models must have distinct init seeds")

    train_enc = encode_corpus(train_corpus, vocab)
    n = len(train_enc)
    steps_per_epoch = math.ceil(n / config.batch_size)
    total_steps = steps_per_epoch * config.epochs
    warmup_steps = math.ceil(config.warmup_fraction * total_steps)

    optimizers = [Adam(m.parameter_count, config.learning_rate) for m in models]
    report = TrainReport(
        method=f"coreg-n{config.n_models}",
        config=config,
        warmup_steps=warmup_steps,
        total_steps=total_steps,
    )
    best: tuple[float, int, int, np.ndarray] | None = None  # (f1, epoch, model index, params)

    with resource_meter() as meter:
        step = 0
        for epoch in range(config.epochs):
            rng = np.random.default_rng(
                np.random.SeedSequence((config.seed, _TAG_SHUFFLE, epoch))
            )
            order = rng.permutation(n)
            sums = {"task": 0.0, "kl": 0.0}
            for batch_ids in _batches(order, config.batch_size):
                batch = [train_enc[i] for i in batch_ids]
                in_warmup = step < warmup_steps
                seeds = [
                    derive_seed(config.seed, _TAG_COREG_PASS, step, m)
                    for m in range(config.n_models)
                ]
                gradients, task_mean, kl = _coreg_gradients(
                    models, batch, config.alpha, seeds, apply_agreement=not in_warmup
                )
                for model, optimizer, gradient in zip(models, optimizers, gradients):
                    model.set_flat(optimizer.update(model.get_flat(), gradient))
                sums["task"] += task_mean
                sums["kl"] += kl
                step += 1

            epoch_f1 = -1.0
            for m_index, model in enumerate(models):
                f1 = micro_f1(model, vocab, val_corpus)
                epoch_f1 = max(epoch_f1, f1)
                if best is None or f1 > best[0]:
                    best = (f1, epoch, m_index, model.get_flat())
            report.epochs.append(
                EpochStats(
                    epoch=epoch,
                    task_loss=sums["task"] / steps_per_epoch,
                    kl_loss=sums["kl"] / steps_per_epoch,
                    agree_loss=(sums["task"] + config.alpha * sums["kl"]) / steps_per_epoch,
                    val_f1=epoch_f1,
                )
            )

    assert best is not None
    report.best_val_f1, report.best_epoch, best_index, best_params = best
    winner = models[best_index]
    winner.set_flat(best_params)

    per_model_bytes = models[0].parameter_count * PARAM_BYTES_PER_ELEMENT
    meter.report.param_bytes = per_model_bytes * config.n_models
    meter.report.optimizer_state_bytes = sum(o.state_bytes for o in optimizers)
    report.resources = meter.report
    return winner, report
