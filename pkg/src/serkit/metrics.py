"""Strict span-level precision/recall/F1.

A predicted entity counts as a true positive only when its token
boundaries and its type both equal a gold span. Zero-denominator
conventions (documented, CoNLL-style): precision is 0 when nothing was
predicted for a type that has gold spans; a type with neither gold nor
predicted spans scores P = R = F1 = 1 and is excluded from the macro
average, which is the unweighted mean over types with at least one gold
span.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Corpus, EntityType, decode_spans


class TokenizationMismatchError(ValueError):
    def __init__(self, sentence_index: int, detail: str):
        super().__init__(f"pred/gold tokenization differs at sentence {sentence_index}: {detail}")
        self.sentence_index = sentence_index


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class TypeMetrics:
    gold_spans: int
    tp: int
    fp: int
    fn: int
    prf: PRF


@dataclass(frozen=True)
class MetricTable:
    per_type: dict[EntityType, TypeMetrics]
    micro: PRF
    macro: PRF
    total_gold_spans: int


def _prf(tp: int, fp: int, fn: int) -> PRF:
    if tp == 0 and fp == 0 and fn == 0:
        return PRF(1.0, 1.0, 1.0)
    precision = tp / (tp + fp) if tp + fp > 0 else 0.0
    recall = tp / (tp + fn) if tp + fn > 0 else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return PRF(precision, recall, f1)


def strict_span_prf(pred: Corpus, gold: Corpus) -> MetricTable:
    """Score predicted spans against gold with exact-match semantics.

    Both corpora must contain the same sentences with identical
    tokenization; the first divergence raises TokenizationMismatchError.
    """
    if len(pred) != len(gold):
        raise TokenizationMismatchError(
            min(len(pred), len(gold)), f"{len(pred)} vs {len(gold)} sentences"
        )

    tp: dict[EntityType, int] = {}
    fp: dict[EntityType, int] = {}
    fn: dict[EntityType, int] = {}

    for index, (sent_pred, sent_gold) in enumerate(zip(pred, gold)):
        if sent_pred.surfaces != sent_gold.surfaces:
            raise TokenizationMismatchError(
                index, f"{sent_pred.surfaces[:5]}... vs {sent_gold.surfaces[:5]}..."
            )
        pred_spans = {s.as_triple() for s in decode_spans(sent_pred.labels)}
        gold_spans = {s.as_triple() for s in decode_spans(sent_gold.labels)}
        for start, end, type_name in pred_spans & gold_spans:
            etype = EntityType(type_name)
            tp[etype] = tp.get(etype, 0) + 1
        for start, end, type_name in pred_spans - gold_spans:
            etype = EntityType(type_name)
            fp[etype] = fp.get(etype, 0) + 1
        for start, end, type_name in gold_spans - pred_spans:
            etype = EntityType(type_name)
            fn[etype] = fn.get(etype, 0) + 1

    per_type: dict[EntityType, TypeMetrics] = {}
    for etype in EntityType:
        t, p, n = tp.get(etype, 0), fp.get(etype, 0), fn.get(etype, 0)
        if t == p == n == 0:
            continue  # type absent from both corpora
        per_type[etype] = TypeMetrics(t + n, t, p, n, _prf(t, p, n))

    micro = _prf(sum(tp.values()), sum(fp.values()), sum(fn.values()))
    with_gold = [m.prf for m in per_type.values() if m.gold_spans > 0]
    if with_gold:
        macro = PRF(
            sum(m.precision for m in with_gold) / len(with_gold),
            sum(m.recall for m in with_gold) / len(with_gold),
            sum(m.f1 for m in with_gold) / len(with_gold),
        )
    else:
        macro = micro
    total_gold = sum(m.gold_spans for m in per_type.values())
    return MetricTable(per_type, micro, macro, total_gold)
